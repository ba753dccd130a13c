#pragma once

// Reference computations in long double, written without the library so that
// tests compare against an independent route.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace oracle {

using LD = long double;
using Vec = std::vector<LD>;
using Cx = std::complex<LD>;

inline Vec lift(std::span<const double> x) { return Vec(x.begin(), x.end()); }

inline LD dot(const Vec& a, const Vec& b) {
    LD s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline LD norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec neg(Vec a) {
    for (auto& x : a) x = -x;
    return a;
}

/// Einstein sum as a Lorentz boost: boost the 4-velocity gamma_v (1, v) by u
/// and read off the spatial velocity.
inline Vec einstein_add(const Vec& u, const Vec& v) {
    const LD uu = dot(u, u);
    const LD vv = dot(v, v);
    const LD gu = 1 / std::sqrt(1 - uu);
    const LD gv = 1 / std::sqrt(1 - vv);
    const LD uv = dot(u, v);
    const LD t = gu * (gv + gv * uv);
    Vec x(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const LD par = uu > 0 ? (gu - 1) * gv * uv / uu * u[i] : 0;
        x[i] = gv * v[i] + par + gu * gv * u[i];
    }
    for (auto& c : x) c /= t;
    return x;
}

inline Vec mobius_add(const Vec& u, const Vec& v) {
    const LD uv = dot(u, v), uu = dot(u, u), vv = dot(v, v);
    const LD den = 1 + 2 * uv + uu * vv;
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = ((1 + 2 * uv + vv) * u[i] + (1 - uu) * v[i]) / den;
    return out;
}

inline Cx disk_add(Cx a, Cx b) { return (a + b) / (LD(1) + std::conj(a) * b); }

inline LD poincare(Cx w, Cx z) { return 2 * std::atanh(std::abs((w - z) / (LD(1) - std::conj(w) * z))); }

/// Poincare distance on the n-ball via the cosh formula.
inline LD poincare_ball(const Vec& u, const Vec& v) {
    Vec d(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) d[i] = u[i] - v[i];
    const LD arg = 1 + 2 * dot(d, d) / ((1 - dot(u, u)) * (1 - dot(v, v)));
    return std::acosh(arg);
}

/// Cayley-Klein distance on the Einstein ball:
/// cosh d = (1 - <u,v>) / sqrt((1 - |u|^2)(1 - |v|^2)).
inline LD klein_ball(const Vec& u, const Vec& v) {
    return std::acosh((1 - dot(u, v)) / std::sqrt((1 - dot(u, u)) * (1 - dot(v, v))));
}

inline Vec phi(const Vec& v) {
    const LD s = 2 / (1 + dot(v, v));
    Vec out = v;
    for (auto& c : out) c *= s;
    return out;
}

/// Right-translated Poincare distance for x = 0, y = r, a = i s.
inline LD right_translate_witness(LD r, LD s) {
    const LD m = r * (1 + s * s) / std::sqrt((1 - s * s) * (1 - s * s) + 4 * r * r * s * s);
    return 2 * std::atanh(m);
}

inline LD max_abs_diff(std::span<const double> a, const Vec& b) {
    LD m = 0;
    for (std::size_t i = 0; i < b.size(); ++i) m = std::max(m, std::abs(LD(a[i]) - b[i]));
    return m;
}

}  // namespace oracle
