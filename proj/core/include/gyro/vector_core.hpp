#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gyro {

/// Points with Euclidean norm >= 1 - kBoundaryGuard are rejected.
inline constexpr double kBoundaryGuard = 1e-12;
/// Radius cap used by the samplers feeding the property suites.
inline constexpr double kSampleRadiusCap = 0.95;

/// Mixed absolute/relative comparison: |a - b| <= atol + rtol * max(|a|, |b|).
struct Tolerance {
    double atol = 1e-9;
    double rtol = 1e-9;

    bool close(double a, double b) const noexcept;
    /// Coordinatewise; spans of different length never compare close.
    bool close(std::span<const double> a, std::span<const double> b) const noexcept;
    /// lhs <= rhs up to the same slack.
    bool at_most(double lhs, double rhs) const noexcept;

    friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Finite real coordinates, n >= 1.
class RealVector {
public:
    explicit RealVector(std::vector<double> coords);
    RealVector(std::initializer_list<double> coords);

    static RealVector zeros(std::size_t n);

    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }
    const std::vector<double>& values() const noexcept { return coords_; }

    friend RealVector operator+(const RealVector& a, const RealVector& b);
    friend RealVector operator-(const RealVector& a, const RealVector& b);
    friend RealVector operator-(const RealVector& a);
    friend RealVector operator*(double s, const RealVector& a);

    friend bool operator==(const RealVector&, const RealVector&) = default;

private:
    std::vector<double> coords_;
};

/// A vector strictly inside the open unit ball, with the rim guard applied.
class BallPoint {
public:
    /// Throws BoundaryError when ||v|| >= 1 - kBoundaryGuard.
    explicit BallPoint(RealVector v);
    BallPoint(std::initializer_list<double> coords);

    static BallPoint origin(std::size_t n);

    std::size_t size() const noexcept { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    const RealVector& vec() const noexcept { return v_; }
    std::span<const double> coords() const noexcept { return v_.coords(); }
    double norm() const noexcept { return norm_; }

    friend BallPoint operator-(const BallPoint& p) { return BallPoint(-p.v_); }
    friend bool operator==(const BallPoint& a, const BallPoint& b) { return a.v_ == b.v_; }

private:
    RealVector v_;
    double norm_;
};

double inner_product(const RealVector& u, const RealVector& v);
double euclidean_norm(const RealVector& v);
inline double euclidean_norm(const BallPoint& v) { return v.norm(); }

/// 1 / sqrt(1 - ||v||^2).
double lorentz_gamma(const BallPoint& v);

/// Inverse hyperbolic tangent on [0, 1 - kBoundaryGuard).
double atanh_guarded(double x);

/// (r + s) / (1 + r s) on the open interval (-1, 1).
double scalar_einstein_add(double r, double s);

class Rng;

/// Direction uniform on the sphere, radius = cap * u^(1/n).
BallPoint sample_ball_point(std::size_t n, Rng& rng, double cap = kSampleRadiusCap);

/// Same distribution as sample_ball_point without the ball invariant (any radius > 0).
RealVector sample_in_ball(std::size_t n, Rng& rng, double radius);

}  // namespace gyro
