#include "detkit/rational.hpp"

#include <cctype>

namespace detkit {

namespace mp = boost::multiprecision;

BigRational::BigRational(integer num, integer den) {
    if (den.is_zero()) throw ZeroDenominator();
    v_ = backend(std::move(num), std::move(den));
}

BigRational BigRational::parse(const std::string& token) {
    // sign? digits ( "/" digits )?  — nothing else.
    std::size_t pos = 0;
    auto bad = [&] { throw BadToken(token); };
    auto digits = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos == start) bad();
        // strip leading zeros: the integer constructor would read them as octal
        while (start + 1 < pos && token[start] == '0') ++start;
        return token.substr(start, pos - start);
    };

    if (token.empty()) bad();
    std::string num_sign;
    if (token[pos] == '+' || token[pos] == '-') {
        if (token[pos] == '-') num_sign = "-";
        ++pos;
    }
    std::string num = num_sign + digits();
    if (pos == token.size()) return BigRational(backend(integer(num)));

    if (token[pos] != '/') bad();
    ++pos;
    std::string den = digits();
    if (pos != token.size()) bad();

    integer d(den);
    if (d.is_zero()) throw ZeroDenominator();
    return BigRational(integer(num), std::move(d));
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return BigRational(v_ / o.v_);
}

bool BigRational::is_integer() const {
    return mp::denominator(v_) == 1;
}

BigRational BigRational::pow(unsigned e) const {
    BigRational acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

BigRational::integer BigRational::numerator() const { return mp::numerator(v_); }
BigRational::integer BigRational::denominator() const { return mp::denominator(v_); }

std::string BigRational::str() const {
    std::string s = numerator().str();
    integer d = denominator();
    if (d != 1) s += "/" + d.str();
    return s;
}

} // namespace detkit
