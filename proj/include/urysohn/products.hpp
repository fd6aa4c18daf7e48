#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "linear_algebra.hpp"
#include "model.hpp"
#include "point.hpp"

namespace urysohn {

struct ProductPoint {
    UrysohnPoint left;
    UrysohnPoint right;

    friend bool operator==(const ProductPoint&, const ProductPoint&) = default;
};

/// Max-product (l-infinity) metric.
inline Rational linf_distance(const ProductPoint& a, const ProductPoint& b) {
    return max(delta(a.left, b.left), delta(a.right, b.right));
}

/// Diagonal of E x F where E and F are r-equidistant families around the two
/// coordinates of `center`; pairwise distance r, all inside B(center, r).
inline std::vector<ProductPoint> product_equidistant_family(const ProductPoint& center,
                                                            const Rational& r, std::size_t n) {
    auto lefts = equidistant_family(center.left, r, n);
    auto rights = equidistant_family(center.right, r, n);
    std::vector<ProductPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({std::move(lefts[i]), std::move(rights[i])});
    }
    return out;
}

/// Exponent of an l_p product: a rational p >= 1 or infinity.
class Exponent {
public:
    static Exponent finite(Rational p) {
        if (p < Rational(1)) {
            throw InvalidArgument("exponent must be at least 1, got " + p.str());
        }
        Exponent e;
        e.value_ = std::move(p);
        return e;
    }
    static Exponent infinity() { return Exponent{}; }

    static Exponent parse(std::string_view text) {
        if (text == "inf" || text == "infinity" || text == "oo") {
            return infinity();
        }
        return finite(Rational::parse(text));
    }

    [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }
    [[nodiscard]] const Rational& value() const { return value_.value(); }
    [[nodiscard]] std::string str() const { return value_ ? value_->str() : "inf"; }

    /// The exponent as a machine integer, if it is one.
    [[nodiscard]] std::optional<unsigned> as_integer() const {
        if (!value_ || !value_->is_integer() || value_->numerator() > 1024) {
            return std::nullopt;
        }
        return value_->numerator().convert_to<unsigned>();
    }

private:
    Exponent() = default;
    std::optional<Rational> value_;
};

/// Target distances (r00, r01, r10, r11) from two new points to two old ones.
using LpTarget = std::array<Rational, 4>;

/// Coefficients of the p-th power system
///   x + z = r00^p, x + w = r01^p, y + z = r10^p, y + w = r11^p
/// in the unknowns (x^p, y^p, z^p, w^p).
inline linalg::Matrix lp_system_matrix() {
    return {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}};
}

struct LpSolvability {
    bool solvable = false;
    /// r00^p + r11^p - (r01^p + r10^p); the image of the system is defect = 0.
    SignedRational defect;
    /// A nonnegative solution (x^p, y^p, z^p, w^p) when solvable.
    std::optional<std::array<Rational, 4>> powers;
};

inline void require_unit_target(const LpTarget& target) {
    for (const auto& r : target) {
        if (r < Rational(1, 2) || Rational(1) < r) {
            throw InvalidArgument("target component " + r.str() + " is outside [1/2, 1]");
        }
    }
}

/// Exact solvability of the p-th power system for integer p >= 1.
///
/// The matrix has rank 3 with left kernel (1, -1, -1, 1), so the system is
/// consistent iff r00^p + r11^p = r01^p + r10^p. On that hyperplane the
/// solutions are x = t, z = a - t, w = b - t, y = c - a + t and a nonnegative
/// one exists (t = max(0, a - c)) whenever the targets are nonnegative.
inline LpSolvability lp_solvability_condition(const Exponent& p, const LpTarget& target) {
    if (p.is_infinite()) {
        throw InvalidArgument("the p-th power system needs a finite exponent");
    }
    const auto k = p.as_integer();
    if (!k) {
        throw InvalidArgument("exact p-th powers need an integer exponent, got " + p.str());
    }
    require_unit_target(target);
    const SignedRational a = target[0].pow(*k).value();
    const SignedRational b = target[1].pow(*k).value();
    const SignedRational c = target[2].pow(*k).value();
    const SignedRational d = target[3].pow(*k).value();
    LpSolvability out;
    out.defect = a + d - (b + c);
    if (out.defect != 0) {
        return out;
    }
    const SignedRational t = a > c ? SignedRational(a - c) : SignedRational(0);
    const SignedRational x = t, z = a - t, w = b - t, y = c - a + t;
    if (x < 0 || y < 0 || z < 0 || w < 0) {
        return out;
    }
    out.solvable = true;
    out.powers = std::array<Rational, 4>{Rational(x), Rational(y), Rational(z), Rational(w)};
    return out;
}

/// Exact solvability of the max system x v z = r00, x v w = r01, y v z = r10,
/// y v w = r11 over nonnegative reals: the componentwise-largest candidate
/// (each unknown capped by the targets it feeds) solves it iff anything does.
inline std::optional<std::array<Rational, 4>> linf_solve(const LpTarget& target) {
    const auto& [r00, r01, r10, r11] = target;
    const Rational x = min(r00, r01), y = min(r10, r11), z = min(r00, r10), w = min(r01, r11);
    if (max(x, z) == r00 && max(x, w) == r01 && max(y, z) == r10 && max(y, w) == r11) {
        return std::array<Rational, 4>{x, y, z, w};
    }
    return std::nullopt;
}

/// Witness that the l_p product of two copies of the space is not injective.
struct LpCertificate {
    Exponent p = Exponent::infinity();
    LpTarget target;
    /// Numeric defect of the p-th power system, when p is an integer.
    std::optional<SignedRational> defect;
    std::string consistency_defect;
};

inline LpCertificate lp_counterexample(const Exponent& p) {
    LpCertificate cert;
    cert.p = p;
    if (p.is_infinite()) {
        cert.target = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1)};
        cert.consistency_defect =
            "x v z = 1/2 and x v w = 1/2 force x, w <= 1/2; y v z = 1/2 forces y <= 1/2; "
            "so y v w <= r10 v r01 = 1/2 < r11 = 1";
        if (linf_solve(cert.target)) {
            throw PostconditionError("max-product counterexample target is solvable");
        }
        return cert;
    }
    cert.target = {Rational(1), Rational(3, 4), Rational(3, 4), Rational(1)};
    if (p.as_integer()) {
        auto cond = lp_solvability_condition(p, cert.target);
        if (cond.solvable || cond.defect == 0) {
            throw PostconditionError("l_p counterexample target is solvable");
        }
        cert.defect = cond.defect;
        cert.consistency_defect = "r00^p + r11^p - (r01^p + r10^p) = " +
                                  cond.defect.str() + " != 0, off the image of the rank-3 system";
    } else {
        cert.consistency_defect = "r00^p + r11^p = 2 > 2 * (3/4)^p = r01^p + r10^p for every p > 0, "
                                  "off the image of the rank-3 system";
    }
    return cert;
}

} // namespace urysohn
