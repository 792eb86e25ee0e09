#pragma once

// Dense integer and rational vectors with exact arithmetic. Comparison is
// lexicographic everywhere, which doubles as the canonical ordering for
// vertex lists, lattice points and witnesses.

#include "latnorm/scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace latnorm {

struct ZVec {
    std::vector<Int> c;

    ZVec() = default;
    explicit ZVec(std::size_t n) : c(n, Int(0)) {}
    ZVec(std::initializer_list<long> xs) {
        c.reserve(xs.size());
        for (long x : xs) c.emplace_back(x);
    }
    explicit ZVec(std::vector<Int> xs) : c(std::move(xs)) {}

    std::size_t size() const { return c.size(); }
    Int& operator[](std::size_t i) { return c[i]; }
    const Int& operator[](std::size_t i) const { return c[i]; }

    friend bool operator==(const ZVec& a, const ZVec& b) { return a.c == b.c; }
    friend bool operator<(const ZVec& a, const ZVec& b) { return a.c < b.c; }
};

struct QVec {
    std::vector<Rat> c;

    QVec() = default;
    explicit QVec(std::size_t n) : c(n, Rat(0)) {}
    QVec(std::initializer_list<long> xs) {
        c.reserve(xs.size());
        for (long x : xs) c.emplace_back(x);
    }
    explicit QVec(std::vector<Rat> xs) : c(std::move(xs)) {}

    std::size_t size() const { return c.size(); }
    Rat& operator[](std::size_t i) { return c[i]; }
    const Rat& operator[](std::size_t i) const { return c[i]; }

    friend bool operator==(const QVec& a, const QVec& b) { return a.c == b.c; }
    friend bool operator<(const QVec& a, const QVec& b) { return a.c < b.c; }
};

inline QVec to_qvec(const ZVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool is_integral(const QVec& v) {
    for (const Rat& x : v.c)
        if (!is_integer(x)) return false;
    return true;
}

inline ZVec to_zvec(const QVec& v) {
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument("to_zvec: non-integral coordinate");
        r[i] = numerator(v[i]);
    }
    return r;
}

inline ZVec operator+(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline ZVec operator-(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline ZVec operator-(const ZVec& a) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
inline ZVec operator*(const Int& s, const ZVec& a) {
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline QVec operator*(const Rat& s, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const ZVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}
inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm_sq(const QVec& a) { return dot(a, a); }
inline Int norm_sq(const ZVec& a) { return dot(a, a); }

inline bool is_zero(const ZVec& v) {
    return std::all_of(v.c.begin(), v.c.end(), [](const Int& x) { return x == 0; });
}
inline bool is_zero(const QVec& v) {
    return std::all_of(v.c.begin(), v.c.end(), [](const Rat& x) { return x == 0; });
}

inline Int content(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v.c) g = boost::multiprecision::gcd(g, x);
    return g;
}

// v / gcd of its entries; the zero vector maps to itself. Preserves
// orientation (no sign normalization).
inline ZVec primitive_part(const ZVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

// Clears denominators: returns the primitive integer vector pointing the same
// way as v (zero stays zero).
inline ZVec scale_to_primitive(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v.c) l = boost::multiprecision::lcm(l, denominator(x));
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = numerator(v[i]) * (l / denominator(v[i]));
    return primitive_part(r);
}

inline std::string vec_str(const ZVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}
inline std::string vec_str(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_str(v[i]);
    }
    return s + ")";
}

}  // namespace latnorm
