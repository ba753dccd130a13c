#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "gyro/gyrogroup.hpp"
#include "gyro/vector_core.hpp"

namespace gyro {

/// Moebius addition on the open unit ball:
///
///   u + v = ((1 + 2<u,v> + |v|^2) u + (1 - |u|^2) v) / (1 + 2<u,v> + |u|^2 |v|^2)
BallPoint mobius_add(const BallPoint& u, const BallPoint& v);

/// Gyrator identity -(a + b) + (a + (b + c)) evaluated in long double. Near
/// the rim the double-precision composition loses up to 1e-8.
BallPoint mobius_gyr(const BallPoint& a, const BallPoint& b, const BallPoint& c);

/// Gyrogroup isomorphism Moebius -> Einstein, v -> 2v / (1 + |v|^2).
BallPoint phi(const BallPoint& v);

/// Inverse of phi: w -> (1 - sqrt(1 - |w|^2)) / |w|^2 * w, and w/2 for |w| < 1e-8.
BallPoint phi_inv(const BallPoint& w);

/// ||v||_M = 1/2 ||phi(v)||_E. Equal to atanh|v|, but computed by the definition.
double gyronorm_M(const BallPoint& v);

/// d_M(u, v) = 1/2 atanh ||phi(-u + v)||. Half the Poincare metric.
double rapidity_metric_dM(const BallPoint& u, const BallPoint& v);

class MobiusModel {
public:
    using Element = BallPoint;

    explicit MobiusModel(std::size_t dim);

    std::string name() const { return "mobius"; }
    std::size_t dim() const noexcept { return dim_; }

    BallPoint identity() const { return BallPoint::origin(dim_); }
    BallPoint add(const BallPoint& u, const BallPoint& v) const { return mobius_add(u, v); }
    BallPoint neg(const BallPoint& u) const { return -u; }
    BallPoint gyr(const BallPoint& a, const BallPoint& b, const BallPoint& c) const {
        return mobius_gyr(a, b, c);
    }

    BallPoint sample(Rng& rng) const { return sample_ball_point(dim_, rng); }
    BallPoint from_coords(std::span<const double> c) const;

    /// Through phi onto the Einstein ball.
    TransportedGyration transport_gyration(const BallPoint& a, const BallPoint& b, const BallPoint& c) const;

private:
    std::size_t dim_;
};

NormedModel<MobiusModel> mobius_rapidity(std::size_t dim);

}  // namespace gyro
