#pragma once

// Truncated-polynomial (jet) arithmetic.
//
// Jet3 carries a value and derivatives through order 3 with respect to one
// variable; Jet2 carries value, gradient and second partials with respect to
// (x, y). Unary functions chain through Faa di Bruno truncated at the carried
// order.

#include <cmath>

#include "darboux/errors.hpp"

namespace darboux {

struct Jet3 {
    double d0 = 0, d1 = 0, d2 = 0, d3 = 0;

    static Jet3 constant(double c) { return {c, 0, 0, 0}; }
    static Jet3 variable(double x) { return {x, 1, 0, 0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet3 operator-(const Jet3& a) { return {-a.d0, -a.d1, -a.d2, -a.d3}; }
inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3 * a.d2 * b.d1 + 3 * a.d1 * b.d2 + a.d0 * b.d3};
}
inline Jet3 operator/(const Jet3& f, const Jet3& g) {
    if (g.d0 == 0.0) throw DomainError("jet division by zero");
    Jet3 q;
    q.d0 = f.d0 / g.d0;
    q.d1 = (f.d1 - q.d0 * g.d1) / g.d0;
    q.d2 = (f.d2 - q.d0 * g.d2 - 2 * q.d1 * g.d1) / g.d0;
    q.d3 = (f.d3 - q.d0 * g.d3 - 3 * q.d1 * g.d2 - 3 * q.d2 * g.d1) / g.d0;
    return q;
}

// h(u) with derivatives h0..h3 at u.d0, composed with the inner jet.
inline Jet3 chain(const Jet3& u, double h0, double h1, double h2, double h3) {
    Jet3 r;
    r.d0 = h0;
    r.d1 = h1 * u.d1;
    r.d2 = h2 * u.d1 * u.d1 + h1 * u.d2;
    r.d3 = h3 * u.d1 * u.d1 * u.d1 + 3 * h2 * u.d1 * u.d2 + h1 * u.d3;
    return r;
}

inline Jet3 exp(const Jet3& u) {
    const double e = std::exp(u.d0);
    return chain(u, e, e, e, e);
}
inline Jet3 log(const Jet3& u) {
    if (!(u.d0 > 0.0)) throw DomainError("log of non-positive value");
    const double i = 1.0 / u.d0;
    return chain(u, std::log(u.d0), i, -i * i, 2 * i * i * i);
}
inline Jet3 sqrt(const Jet3& u) {
    if (!(u.d0 >= 0.0)) throw DomainError("sqrt of negative value");
    const double s = std::sqrt(u.d0);
    if (s == 0.0) {
        if (u.d1 == 0 && u.d2 == 0 && u.d3 == 0) return Jet3::constant(0.0);
        throw DomainError("sqrt jet is singular at zero");
    }
    return chain(u, s, 0.5 / s, -0.25 / (s * u.d0), 0.375 / (s * u.d0 * u.d0));
}
inline Jet3 sin(const Jet3& u) {
    const double s = std::sin(u.d0), c = std::cos(u.d0);
    return chain(u, s, c, -s, -c);
}
inline Jet3 cos(const Jet3& u) {
    const double s = std::sin(u.d0), c = std::cos(u.d0);
    return chain(u, c, -s, -c, s);
}

struct Jet2 {
    double u = 0, ux = 0, uy = 0, uxx = 0, uxy = 0, uyy = 0;

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_x(double x) { return {x, 1, 0, 0, 0, 0}; }
    static Jet2 var_y(double y) { return {y, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.u + b.u,   a.ux + b.ux,   a.uy + b.uy,
            a.uxx + b.uxx, a.uxy + b.uxy, a.uyy + b.uyy};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.u - b.u,   a.ux - b.ux,   a.uy - b.uy,
            a.uxx - b.uxx, a.uxy - b.uxy, a.uyy - b.uyy};
}
inline Jet2 operator-(const Jet2& a) {
    return {-a.u, -a.ux, -a.uy, -a.uxx, -a.uxy, -a.uyy};
}
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.u * b.u,
            a.ux * b.u + a.u * b.ux,
            a.uy * b.u + a.u * b.uy,
            a.uxx * b.u + 2 * a.ux * b.ux + a.u * b.uxx,
            a.uxy * b.u + a.ux * b.uy + a.uy * b.ux + a.u * b.uxy,
            a.uyy * b.u + 2 * a.uy * b.uy + a.u * b.uyy};
}

inline Jet2 chain(const Jet2& u, double h0, double h1, double h2) {
    Jet2 r;
    r.u = h0;
    r.ux = h1 * u.ux;
    r.uy = h1 * u.uy;
    r.uxx = h2 * u.ux * u.ux + h1 * u.uxx;
    r.uxy = h2 * u.ux * u.uy + h1 * u.uxy;
    r.uyy = h2 * u.uy * u.uy + h1 * u.uyy;
    return r;
}

inline Jet2 operator/(const Jet2& f, const Jet2& g) {
    if (g.u == 0.0) throw DomainError("jet division by zero");
    const double i = 1.0 / g.u;
    return f * chain(g, i, -i * i, 2 * i * i * i);
}

inline Jet2 exp(const Jet2& u) {
    const double e = std::exp(u.u);
    return chain(u, e, e, e);
}
inline Jet2 log(const Jet2& u) {
    if (!(u.u > 0.0)) throw DomainError("log of non-positive value");
    const double i = 1.0 / u.u;
    return chain(u, std::log(u.u), i, -i * i);
}
inline Jet2 sqrt(const Jet2& u) {
    if (!(u.u >= 0.0)) throw DomainError("sqrt of negative value");
    const double s = std::sqrt(u.u);
    if (s == 0.0) {
        if (u.ux == 0 && u.uy == 0 && u.uxx == 0 && u.uxy == 0 && u.uyy == 0)
            return Jet2::constant(0.0);
        throw DomainError("sqrt jet is singular at zero");
    }
    return chain(u, s, 0.5 / s, -0.25 / (s * u.u));
}
inline Jet2 sin(const Jet2& u) {
    return chain(u, std::sin(u.u), std::cos(u.u), -std::sin(u.u));
}
inline Jet2 cos(const Jet2& u) {
    return chain(u, std::cos(u.u), -std::sin(u.u), -std::cos(u.u));
}

// Integer powers work for any base; the general case goes through exp(g ln f).
template <class J>
J jet_pow(const J& base, const J& expo, bool expo_is_const, double expo_value) {
    if (expo_is_const && expo_value == std::floor(expo_value) &&
        std::abs(expo_value) <= 64.0) {
        long n = static_cast<long>(expo_value);
        if (n == 0) return J::constant(1.0);
        bool neg = n < 0;
        n = neg ? -n : n;
        J acc = J::constant(1.0);
        J b = base;
        while (n) {
            if (n & 1) acc = acc * b;
            b = b * b;
            n >>= 1;
        }
        return neg ? J::constant(1.0) / acc : acc;
    }
    return exp(expo * log(base));
}

}  // namespace darboux
