#include "detkit/eps_polynomial.hpp"

namespace detkit {

EpsPolynomial::EpsPolynomial(BigRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

EpsPolynomial::EpsPolynomial(std::vector<BigRational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

EpsPolynomial EpsPolynomial::variable() {
    return EpsPolynomial(std::vector<BigRational>{BigRational(0), BigRational(1)});
}

void EpsPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigRational& EpsPolynomial::coeff(int k) const {
    static const BigRational zero(0);
    if (k < 0 || k > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const BigRational& EpsPolynomial::leading() const {
    static const BigRational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

EpsPolynomial EpsPolynomial::operator+(const EpsPolynomial& o) const {
    std::vector<BigRational> out(std::max(coeffs_.size(), o.coeffs_.size()), BigRational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[k] += o.coeffs_[k];
    return EpsPolynomial(std::move(out));
}

EpsPolynomial EpsPolynomial::operator-(const EpsPolynomial& o) const {
    std::vector<BigRational> out(std::max(coeffs_.size(), o.coeffs_.size()), BigRational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[k] -= o.coeffs_[k];
    return EpsPolynomial(std::move(out));
}

EpsPolynomial EpsPolynomial::operator*(const EpsPolynomial& o) const {
    if (is_zero() || o.is_zero()) return EpsPolynomial();
    std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return EpsPolynomial(std::move(out));
}

EpsPolynomial EpsPolynomial::operator-() const {
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return EpsPolynomial(std::move(out));
}

EpsPolynomial EpsPolynomial::scaled(const BigRational& c) const {
    if (c.is_zero()) return EpsPolynomial();
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.push_back(x * c);
    return EpsPolynomial(std::move(out));
}

std::pair<EpsPolynomial, EpsPolynomial> EpsPolynomial::divmod(const EpsPolynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    EpsPolynomial rem = *this;
    int dd = divisor.degree();
    if (rem.degree() < dd) return {EpsPolynomial(), rem};

    std::vector<BigRational> q(static_cast<std::size_t>(rem.degree() - dd) + 1, BigRational(0));
    const BigRational& lead = divisor.leading();
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        BigRational factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * e^shift * divisor, done in place on the tail.
        std::vector<BigRational> next = rem.coeffs_;
        for (int k = 0; k <= dd; ++k)
            next[static_cast<std::size_t>(k + shift)] -= factor * divisor.coeffs_[static_cast<std::size_t>(k)];
        rem = EpsPolynomial(std::move(next));
    }
    return {EpsPolynomial(std::move(q)), rem};
}

BigRational EpsPolynomial::eval(const BigRational& point) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

std::string EpsPolynomial::str(PolyStyle style) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        BigRational mag = c.abs();

        if (first) {
            if (neg) out += "-";
        } else if (style == PolyStyle::Spaced) {
            out += neg ? " - " : " + ";
        } else {
            out += neg ? "-" : "+";
        }

        bool unit = mag.is_one() && k > 0;
        if (!unit) out += mag.str();
        if (k > 0) {
            if (!unit && style == PolyStyle::Spaced) out += "*";
            out += "e";
            if (k > 1) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

EpsPolynomial poly_gcd(EpsPolynomial a, EpsPolynomial b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    while (!b.is_zero()) {
        EpsPolynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    // Normalize monic so the gcd is a canonical representative.
    return a.scaled(BigRational(1) / a.leading());
}

} // namespace detkit
