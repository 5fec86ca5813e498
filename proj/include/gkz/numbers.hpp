#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational is not an integer");
    return num(q);
}

inline int sgn(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sgn(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// floor(a/b) for exact integers, b != 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// representative of a mod m in [0, m), m > 0
inline Int mod_pos(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Rat frac_part(const Rat& q) {
    Int fl = floor_div(num(q), den(q));
    return q - Rat(fl);
}

inline ZVec operator+(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ZVec operator-(const ZVec& a, const ZVec& b) {
    ZVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline ZVec operator*(const Int& c, const ZVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline ZVec negate(const ZVec& v) { return Int(-1) * v; }

inline Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const ZVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const ZVec& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

inline QVec to_qvec(const ZVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec operator*(const Rat& c, const QVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline bool is_integral(const QVec& v) {
    for (const auto& q : v) if (!is_integer(q)) return false;
    return true;
}

inline ZVec to_zvec(const QVec& v) {
    ZVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = to_int(v[i]);
    return r;
}

// "p/q" or "p"; throws on malformed input or zero denominator
Rat parse_rational(const std::string& s);

std::string to_string(const Rat& q);
std::string to_string(const QVec& v);
std::string to_string(const ZVec& v);

} // namespace gkz
