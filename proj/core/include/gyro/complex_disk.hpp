#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "gyro/gyrogroup.hpp"

namespace gyro {

/// Complex number as an explicit real pair.
struct Complex {
    double re = 0.0;
    double im = 0.0;

    friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(Complex a) { return {-a.re, -a.im}; }
    friend Complex operator*(Complex a, Complex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(Complex a, Complex b);
    friend bool operator==(const Complex&, const Complex&) = default;
};

Complex conj(Complex z);
double abs(Complex z);

/// A point of the open unit disk (|z| < 1 - kBoundaryGuard).
class DiskPoint {
public:
    DiskPoint() = default;
    /// Throws BoundaryError on or outside the guarded rim.
    DiskPoint(double re, double im);
    explicit DiskPoint(Complex z) : DiskPoint(z.re, z.im) {}

    double re() const noexcept { return c_[0]; }
    double im() const noexcept { return c_[1]; }
    Complex value() const noexcept { return {c_[0], c_[1]}; }
    double modulus() const noexcept;
    std::span<const double> coords() const noexcept { return c_; }

    friend DiskPoint operator-(const DiskPoint& z) { return DiskPoint(-z.re(), -z.im()); }
    friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

private:
    std::array<double, 2> c_{0.0, 0.0};
};

/// a + b = (a + b) / (1 + conj(a) b).
DiskPoint cmobius_add(const DiskPoint& a, const DiskPoint& b);

/// Unimodular rotation factor of gyr[a,b]: (1 + a conj(b)) / (1 + conj(a) b).
Complex cmobius_gyr_factor(const DiskPoint& a, const DiskPoint& b);

/// d_P(w, z) = 2 atanh |(w - z) / (1 - conj(w) z)|.
double poincare_metric(const DiskPoint& w, const DiskPoint& z);

/// ||z|| = d_P(0, z) = 2 atanh |z|.
double disk_gyronorm(const DiskPoint& z);

/// z -> (a + z) / (1 + conj(a) z), an isometry of d_P.
DiskPoint mobius_transformation(const DiskPoint& a, const DiskPoint& z);

/// Accepts "re,im", "re+imi", "re-imi", "imi" and "re".
DiskPoint parse_disk_point(std::string_view text);

class DiskModel {
public:
    using Element = DiskPoint;

    std::string name() const { return "poincare-disk"; }
    std::size_t dim() const noexcept { return 2; }

    DiskPoint identity() const { return {}; }
    DiskPoint add(const DiskPoint& a, const DiskPoint& b) const { return cmobius_add(a, b); }
    DiskPoint neg(const DiskPoint& a) const { return -a; }
    /// Closed-form disk rotation.
    DiskPoint gyr(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c) const {
        return DiskPoint(cmobius_gyr_factor(a, b) * c.value());
    }

    DiskPoint sample(Rng& rng) const;
    DiskPoint from_coords(std::span<const double> c) const;

    /// Through the identification x + iy <-> (x, y) onto the 2-D Moebius ball.
    TransportedGyration transport_gyration(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c) const;
};

/// The disk with the gyronorm recovered from d_P. Left invariance of d_P is
/// verified on `checks` triples drawn from `seed` before the norm is built.
NormedModel<DiskModel> disk_poincare(std::uint64_t seed = 42, std::size_t checks = 256);

}  // namespace gyro
