#include "gyro/vector_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gyro/errors.hpp"
#include "gyro/rng.hpp"

namespace gyro {

bool Tolerance::close(double a, double b) const noexcept {
    return std::abs(a - b) <= atol + rtol * std::max(std::abs(a), std::abs(b));
}

bool Tolerance::close(std::span<const double> a, std::span<const double> b) const noexcept {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!close(a[i], b[i])) return false;
    }
    return true;
}

bool Tolerance::at_most(double lhs, double rhs) const noexcept {
    return lhs <= rhs + atol + rtol * std::max(std::abs(lhs), std::abs(rhs));
}

RealVector::RealVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("RealVector: dimension must be at least 1");
    for (double c : coords_) {
        if (!std::isfinite(c)) throw DomainError("RealVector: non-finite coordinate");
    }
}

RealVector::RealVector(std::initializer_list<double> coords) : RealVector(std::vector<double>(coords)) {}

RealVector RealVector::zeros(std::size_t n) { return RealVector(std::vector<double>(n, 0.0)); }

RealVector operator+(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) throw DimensionError(a.size(), b.size());
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return RealVector(std::move(out));
}

RealVector operator-(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) throw DimensionError(a.size(), b.size());
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return RealVector(std::move(out));
}

RealVector operator-(const RealVector& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
    return RealVector(std::move(out));
}

RealVector operator*(double s, const RealVector& a) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
    return RealVector(std::move(out));
}

BallPoint::BallPoint(RealVector v) : v_(std::move(v)), norm_(euclidean_norm(v_)) {
    if (!(norm_ < 1.0 - kBoundaryGuard)) throw BoundaryError("BallPoint", norm_);
}

BallPoint::BallPoint(std::initializer_list<double> coords) : BallPoint(RealVector(coords)) {}

BallPoint BallPoint::origin(std::size_t n) { return BallPoint(RealVector::zeros(n)); }

double inner_product(const RealVector& u, const RealVector& v) {
    if (u.size() != v.size()) throw DimensionError(u.size(), v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) sum += u[i] * v[i];
    return sum;
}

double euclidean_norm(const RealVector& v) {
    return std::sqrt(inner_product(v, v));
}

double lorentz_gamma(const BallPoint& v) {
    const double r = v.norm();
    return 1.0 / std::sqrt(1.0 - r * r);
}

double atanh_guarded(double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError("atanh_guarded: argument must be nonnegative, got " + std::to_string(x));
    if (x >= 1.0 - kBoundaryGuard) throw BoundaryError("atanh_guarded", x);
    return std::atanh(x);
}

double scalar_einstein_add(double r, double s) {
    if (!(std::abs(r) < 1.0) || !(std::abs(s) < 1.0)) {
        throw DomainError("scalar_einstein_add: arguments must lie in (-1, 1)");
    }
    return (r + s) / (1.0 + r * s);
}

RealVector sample_in_ball(std::size_t n, Rng& rng, double radius) {
    if (n == 0) throw DomainError("sample_in_ball: dimension must be at least 1");
    // Direction: a symmetric deviate in the cube, kept only inside the unit
    // ball (rejection makes it rotation invariant), then normalized.
    std::vector<double> dir(n);
    double len = 0.0;
    do {
        double sq = 0.0;
        for (double& c : dir) {
            c = rng.symmetric();
            sq += c * c;
        }
        len = std::sqrt(sq);
    } while (!(len > 0.0 && len <= 1.0));

    const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
    for (double& c : dir) c = c / len * r;
    return RealVector(std::move(dir));
}

BallPoint sample_ball_point(std::size_t n, Rng& rng, double cap) {
    return BallPoint(sample_in_ball(n, rng, cap));
}

}  // namespace gyro
