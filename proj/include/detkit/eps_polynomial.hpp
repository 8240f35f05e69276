#pragma once

#include <utility>
#include <vector>

#include "detkit/rational.hpp"

namespace detkit {

enum class PolyStyle {
    Compact, // "30-15e", "4+e", "1-e^2"
    Spaced,  // "30 - 15*e", "4 + e"
};

// Dense univariate polynomial over the rationals in the perturbation
// variable. Coefficients are stored ascending; the zero polynomial has an
// empty coefficient vector and degree -1.
class EpsPolynomial {
public:
    EpsPolynomial() = default;
    EpsPolynomial(std::int64_t c) : EpsPolynomial(BigRational(c)) {}
    EpsPolynomial(BigRational constant);
    explicit EpsPolynomial(std::vector<BigRational> ascending_coeffs);

    static EpsPolynomial variable(); // the monomial e

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return degree() == 0 && coeffs_[0].is_one(); }
    bool is_constant() const { return degree() <= 0; }

    // Coefficient of e^k; zero beyond the degree.
    const BigRational& coeff(int k) const;
    BigRational constant_term() const { return coeffs_.empty() ? BigRational(0) : coeffs_[0]; }
    const BigRational& leading() const;

    EpsPolynomial operator+(const EpsPolynomial& o) const;
    EpsPolynomial operator-(const EpsPolynomial& o) const;
    EpsPolynomial operator*(const EpsPolynomial& o) const;
    EpsPolynomial operator-() const;

    EpsPolynomial scaled(const BigRational& c) const;

    // Euclidean division: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor). Throws DivisionByZero on a zero divisor.
    std::pair<EpsPolynomial, EpsPolynomial> divmod(const EpsPolynomial& divisor) const;

    bool operator==(const EpsPolynomial& o) const { return coeffs_ == o.coeffs_; }

    BigRational eval(const BigRational& point) const;

    std::string str(PolyStyle style = PolyStyle::Compact) const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

// Monic greatest common divisor. Throws BothZero when both inputs vanish.
EpsPolynomial poly_gcd(EpsPolynomial a, EpsPolynomial b);

} // namespace detkit
