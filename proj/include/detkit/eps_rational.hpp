#pragma once

#include "detkit/eps_polynomial.hpp"

namespace detkit {

// Rational function in the perturbation variable, kept in lowest terms with
// a monic denominator. This is the field the singular-case condensation
// kernel actually runs over.
class EpsRational {
public:
    EpsRational() = default;
    EpsRational(std::int64_t c) : num_(c) {}
    EpsRational(BigRational c) : num_(std::move(c)) {}
    EpsRational(EpsPolynomial p) : num_(std::move(p)) {}
    EpsRational(EpsPolynomial num, EpsPolynomial den);

    static EpsRational variable() { return EpsRational(EpsPolynomial::variable()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const EpsPolynomial& num() const { return num_; }
    const EpsPolynomial& den() const { return den_; }

    // Requires is_polynomial(); the condensation invariant guarantees it at
    // every point where we read a value out.
    const EpsPolynomial& as_polynomial() const;

    EpsRational operator+(const EpsRational& o) const;
    EpsRational operator-(const EpsRational& o) const;
    EpsRational operator*(const EpsRational& o) const;
    EpsRational operator/(const EpsRational& o) const;
    EpsRational operator-() const;

    bool operator==(const EpsRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Value at a finite point; throws PoleAtPoint when the reduced
    // denominator vanishes there.
    BigRational eval_at(const BigRational& point) const;

    std::string str(PolyStyle style = PolyStyle::Compact) const;

private:
    void reduce();
    EpsPolynomial num_{};
    EpsPolynomial den_{BigRational(1)};
};

} // namespace detkit
