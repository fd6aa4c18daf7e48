#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace urysohn {

using BigInt = boost::multiprecision::cpp_int;
using SignedRational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational. Always stored in lowest terms with a positive
/// denominator; every distance and radius in the library is one of these.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : Rational(BigInt(n), BigInt(1)) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw InvalidArgument("rational with zero denominator");
        }
        if ((num < 0) != (den < 0) && num != 0) {
            throw InvalidArgument("negative rational");
        }
        value_ = SignedRational(num, den);
    }

    explicit Rational(const SignedRational& v) : value_(v) {
        if (v < 0) {
            throw InvalidArgument("negative rational");
        }
    }

    /// Accepts "n" or "p/q" with decimal digits only; normalizes to lowest terms.
    static Rational parse(std::string_view text) {
        auto digits = [&](std::string_view part) {
            if (part.empty()) {
                throw ParseError("malformed rational '" + std::string(text) + "'");
            }
            for (char c : part) {
                if (c < '0' || c > '9') {
                    if (c == '-') {
                        throw ParseError("negative rational '" + std::string(text) + "'");
                    }
                    throw ParseError("malformed rational '" + std::string(text) + "'");
                }
            }
            return BigInt(std::string(part));
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(digits(text), BigInt(1));
        }
        BigInt num = digits(text.substr(0, slash));
        BigInt den = digits(text.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    [[nodiscard]] const SignedRational& value() const { return value_; }

    [[nodiscard]] bool is_zero() const { return value_ == 0; }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }

    [[nodiscard]] std::string str() const {
        if (is_integer()) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) {
            return std::strong_ordering::less;
        }
        if (b.value_ < a.value_) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(SignedRational(a.value_ + b.value_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(SignedRational(a.value_ * b.value_));
    }

    [[nodiscard]] Rational pow(unsigned exponent) const {
        SignedRational out = 1;
        for (unsigned i = 0; i < exponent; ++i) {
            out *= value_;
        }
        return Rational(out);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    SignedRational value_{0};
};

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace urysohn

template <>
struct std::hash<urysohn::Rational> {
    std::size_t operator()(const urysohn::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
