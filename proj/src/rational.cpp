#include "kpmn/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>

namespace kpmn {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = (g != 0) ? num / g : 0;
    den_ = (g != 0) ? den / g : 1;
}

Rational Rational::operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    return Rational(num_ * (o.den_ / g) + o.num_ * (den_ / g), den_ / g * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    const std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("Rational: division by zero");
    return *this * o.reciprocal();
}

bool Rational::operator<(const Rational& o) const {
    // Denominators are positive, so cross multiplication preserves order.
    return num_ * o.den_ < o.num_ * den_;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DomainError("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("Rational::parse: empty string");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw DomainError("Rational::parse: bad fraction '" + text + "'");
        char* end = nullptr;
        const std::int64_t n = std::strtoll(ns.c_str(), &end, 10);
        if (*end != '\0') throw DomainError("Rational::parse: bad numerator '" + text + "'");
        const std::int64_t d = std::strtoll(ds.c_str(), &end, 10);
        if (*end != '\0') throw DomainError("Rational::parse: bad denominator '" + text + "'");
        return Rational(n, d);
    }

    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.size() > 15) throw DomainError("Rational::parse: too many decimals '" + text + "'");
        bool neg = !whole.empty() && whole[0] == '-';
        std::string digits = (neg || (!whole.empty() && whole[0] == '+')) ? whole.substr(1) : whole;
        std::int64_t den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("Rational::parse: bad decimal '" + text + "'");
            digits += c;
            den *= 10;
        }
        if (digits.empty()) throw DomainError("Rational::parse: bad decimal '" + text + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("Rational::parse: bad decimal '" + text + "'");
        const std::int64_t n = std::strtoll(digits.c_str(), nullptr, 10);
        return Rational(neg ? -n : n, den);
    }

    char* end = nullptr;
    const std::int64_t n = std::strtoll(s.c_str(), &end, 10);
    if (*end != '\0') throw DomainError("Rational::parse: not a rational '" + text + "'");
    return Rational(n);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace kpmn
