#ifndef KPMN_JET_HPP
#define KPMN_JET_HPP

#include <array>
#include <cmath>

namespace kpmn {

// Truncated Taylor arithmetic of order 4: carries a value and derivatives
// d1..d4 with respect to one scalar variable.  Enough to evaluate the bump
// test functions and their first four derivatives exactly (up to rounding),
// which the weak-form integrals require.
struct Jet4 {
    std::array<double, 5> c{}; // c[j] = j-th derivative (c[0] = value)

    Jet4() = default;
    explicit Jet4(double value) { c[0] = value; }

    static Jet4 variable(double value) {
        Jet4 j(value);
        j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    double deriv(int k) const { return c[static_cast<std::size_t>(k)]; }
};

inline Jet4 operator+(const Jet4& a, const Jet4& b) {
    Jet4 r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

inline Jet4 operator-(const Jet4& a, const Jet4& b) {
    Jet4 r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

inline Jet4 operator-(const Jet4& a) {
    Jet4 r;
    for (int i = 0; i < 5; ++i) r.c[i] = -a.c[i];
    return r;
}

// Leibniz product rule on derivative coefficients.
inline Jet4 operator*(const Jet4& a, const Jet4& b) {
    static constexpr double binom[5][5] = {{1, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0},
                                           {1, 2, 1, 0, 0},
                                           {1, 3, 3, 1, 0},
                                           {1, 4, 6, 4, 1}};
    Jet4 r;
    for (int k = 0; k < 5; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += binom[k][j] * a.c[j] * b.c[k - j];
        r.c[k] = s;
    }
    return r;
}

inline Jet4 operator*(double s, const Jet4& a) {
    Jet4 r;
    for (int i = 0; i < 5; ++i) r.c[i] = s * a.c[i];
    return r;
}

inline Jet4 operator+(const Jet4& a, double s) { return a + Jet4(s); }
inline Jet4 operator-(double s, const Jet4& a) { return Jet4(s) - a; }

// Reciprocal via the recurrence (1/b)^(k) from b * (1/b) = 1.
inline Jet4 reciprocal(const Jet4& b) {
    static constexpr double binom[5][5] = {{1, 0, 0, 0, 0},
                                           {1, 1, 0, 0, 0},
                                           {1, 2, 1, 0, 0},
                                           {1, 3, 3, 1, 0},
                                           {1, 4, 6, 4, 1}};
    Jet4 r;
    r.c[0] = 1.0 / b.c[0];
    for (int k = 1; k < 5; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += binom[k][j] * b.c[j] * r.c[k - j];
        r.c[k] = -s / b.c[0];
    }
    return r;
}

inline Jet4 operator/(const Jet4& a, const Jet4& b) { return a * reciprocal(b); }

// exp via f' = f * g' propagated through the coefficient recurrence.
inline Jet4 exp(const Jet4& g) {
    static constexpr double binom4[4][4] = {
        {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    Jet4 f;
    f.c[0] = std::exp(g.c[0]);
    // f^(k+1) = sum_j C(k,j) g^(j+1) f^(k-j)
    for (int k = 0; k < 4; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += binom4[k][j] * g.c[j + 1] * f.c[k - j];
        f.c[k + 1] = s;
    }
    return f;
}

} // namespace kpmn

#endif
