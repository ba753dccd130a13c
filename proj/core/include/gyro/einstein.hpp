#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "gyro/gyrogroup.hpp"
#include "gyro/vector_core.hpp"

namespace gyro {

/// Einstein (relativistic velocity) addition on the open unit ball:
///
///   u + v = 1/(1 + <u,v>) * (u + v/gamma_u + gamma_u/(1 + gamma_u) <u,v> u)
///
/// Throws DimensionError on mismatched inputs and BoundaryError if the sum
/// lands on the rim guard.
BallPoint einstein_add(const BallPoint& u, const BallPoint& v);

/// Rapidity gyronorm: atanh ||v||.
double gyronorm_E(const BallPoint& v);

/// d_E(u, v) = atanh ||-u + v||.
double rapidity_metric_dE(const BallPoint& u, const BallPoint& v);

/// d_e(u, v) = ||-u + v||, the metric of the Euclidean norm used as gyronorm.
double gyrometric_de(const BallPoint& u, const BallPoint& v);

class EinsteinModel {
public:
    using Element = BallPoint;

    explicit EinsteinModel(std::size_t dim);

    std::string name() const { return "einstein"; }
    std::size_t dim() const noexcept { return dim_; }

    BallPoint identity() const { return BallPoint::origin(dim_); }
    BallPoint add(const BallPoint& u, const BallPoint& v) const { return einstein_add(u, v); }
    BallPoint neg(const BallPoint& u) const { return -u; }
    /// No closed form; always the gyrator identity.
    BallPoint gyr(const BallPoint& a, const BallPoint& b, const BallPoint& c) const {
        return gyr_via_gyrator_identity(*this, a, b, c);
    }

    BallPoint sample(Rng& rng) const { return sample_ball_point(dim_, rng); }
    BallPoint from_coords(std::span<const double> c) const;

    /// Through the inverse isomorphism onto the Moebius ball.
    TransportedGyration transport_gyration(const BallPoint& a, const BallPoint& b, const BallPoint& c) const;

private:
    std::size_t dim_;
};

NormedModel<EinsteinModel> einstein_rapidity(std::size_t dim);
NormedModel<EinsteinModel> einstein_euclidean(std::size_t dim);

// ---------------------------------------------------------------------------
// d_e and d_E generate the same topology: with delta = tanh(eps),
// B_{d_e}(u, delta) lies in B_{d_E}(u, eps), and since d_e <= d_E,
// B_{d_E}(u, eps) lies in B_{d_e}(u, eps).

struct InclusionTrial {
    double de = 0.0;
    double dE = 0.0;
    bool ordered = true;         // d_e <= d_E
    bool forward = true;         // d_e < tanh(eps)  =>  d_E < eps
    bool reverse = true;         // d_E < eps        =>  d_e < eps

    bool ok() const noexcept { return ordered && forward && reverse; }
};

InclusionTrial ball_inclusion_trial(const BallPoint& u, const BallPoint& w, double eps);

/// Draws w = u + z with ||z|| < tanh(eps), so that d_e(u, w) = ||z||. Half the
/// draws are uniform in the delta-ball, half sit in a thin shell just inside it.
BallPoint draw_in_de_ball(const BallPoint& u, double eps, Rng& rng);

struct InclusionViolation {
    BallPoint w;
    InclusionTrial trial;
};

struct InclusionResult {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<InclusionViolation> first_violation;

    bool passed() const noexcept { return violations == 0; }
};

/// Throws DomainError unless eps > 0.
InclusionResult topology_ball_inclusion(const BallPoint& u, double eps, std::size_t trials, Rng& rng);

}  // namespace gyro
