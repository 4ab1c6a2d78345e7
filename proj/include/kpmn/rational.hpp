#ifndef KPMN_RATIONAL_HPP
#define KPMN_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <iosfwd>

#include "kpmn/errors.hpp"

namespace kpmn {

// Exact rational number kept in lowest terms with a positive denominator.
// Exponents m, n, q, p are stored this way so that the odd/even numerator
// tests needed for sign-changing profiles are exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }
    bool numerator_even() const { return num_ % 2 == 0; }
    bool numerator_odd() const { return num_ % 2 != 0; }
    bool denominator_even() const { return den_ % 2 == 0; }
    bool denominator_odd() const { return den_ % 2 != 0; }

    bool positive() const { return num_ > 0; }
    bool negative() const { return num_ < 0; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    Rational reciprocal() const;

    std::string str() const;

    // Accepts "3", "-2/5", "9/5", "1.75" and "0.2"; decimal inputs convert
    // exactly (1.75 -> 7/4).
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace kpmn

#endif
