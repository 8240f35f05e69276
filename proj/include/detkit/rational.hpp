#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "detkit/errors.hpp"

namespace detkit {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (the backing type canonicalizes on every operation).
class BigRational {
public:
    using backend = boost::multiprecision::cpp_rational;
    using integer = boost::multiprecision::cpp_int;

    BigRational() = default;
    BigRational(std::int64_t v) : v_(v) {}
    explicit BigRational(backend v) : v_(std::move(v)) {}
    BigRational(integer num, integer den);

    // Literal grammar: optional sign, digits, optionally "/" and nonzero
    // digits. "4/2" is accepted and canonicalized to 2; "3/0" throws.
    static BigRational parse(const std::string& token);

    BigRational operator+(const BigRational& o) const { return BigRational(v_ + o.v_); }
    BigRational operator-(const BigRational& o) const { return BigRational(v_ - o.v_); }
    BigRational operator*(const BigRational& o) const { return BigRational(v_ * o.v_); }
    BigRational operator/(const BigRational& o) const;
    BigRational operator-() const { return BigRational(-v_); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const BigRational& o) const {
        if (v_ < o.v_) return std::strong_ordering::less;
        if (v_ > o.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const;
    int sign() const { return v_.is_zero() ? 0 : (v_ < 0 ? -1 : 1); }

    BigRational abs() const { return v_ < 0 ? BigRational(-v_) : *this; }
    BigRational pow(unsigned e) const;

    integer numerator() const;
    integer denominator() const;

    // "p" for integers, "p/q" otherwise; never prints "/1".
    std::string str() const;

    const backend& raw() const { return v_; }

private:
    backend v_;
};

inline std::string to_token(const BigRational& r) { return r.str(); }

} // namespace detkit
