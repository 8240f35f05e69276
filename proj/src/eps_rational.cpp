#include "detkit/eps_rational.hpp"

namespace detkit {

EpsRational::EpsRational(EpsPolynomial num, EpsPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void EpsRational::reduce() {
    if (num_.is_zero()) {
        den_ = EpsPolynomial(BigRational(1));
        return;
    }
    EpsPolynomial g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // Monic denominator makes the representation unique.
    const BigRational& lead = den_.leading();
    if (!lead.is_one()) {
        BigRational inv = BigRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

const EpsPolynomial& EpsRational::as_polynomial() const {
    if (!is_polynomial()) throw Error("rational function is not a polynomial: " + str());
    return num_;
}

EpsRational EpsRational::operator+(const EpsRational& o) const {
    return EpsRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

EpsRational EpsRational::operator-(const EpsRational& o) const {
    return EpsRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

EpsRational EpsRational::operator*(const EpsRational& o) const {
    return EpsRational(num_ * o.num_, den_ * o.den_);
}

EpsRational EpsRational::operator/(const EpsRational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return EpsRational(num_ * o.den_, den_ * o.num_);
}

EpsRational EpsRational::operator-() const {
    EpsRational out = *this;
    out.num_ = -out.num_;
    return out;
}

BigRational EpsRational::eval_at(const BigRational& point) const {
    BigRational d = den_.eval(point);
    if (d.is_zero()) throw PoleAtPoint();
    return num_.eval(point) / d;
}

std::string EpsRational::str(PolyStyle style) const {
    if (is_polynomial()) return num_.str(style);
    return "(" + num_.str(style) + ")/(" + den_.str(style) + ")";
}

} // namespace detkit
