#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "range_set.hpp"
#include "finite_space.hpp"
#include "predicates.hpp"
#include "point.hpp"
#include "model.hpp"
#include "injectivity.hpp"
#include "hyperspace.hpp"
#include "linear_algebra.hpp"
#include "products.hpp"
#include "petals.hpp"
