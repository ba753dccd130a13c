#include "gyro/einstein.hpp"

#include <cmath>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

BallPoint einstein_add(const BallPoint& u, const BallPoint& v) {
    if (u.size() != v.size()) throw DimensionError(u.size(), v.size());
    const double uv = inner_product(u.vec(), v.vec());
    const double gamma = lorentz_gamma(u);
    const double scale = 1.0 / (1.0 + uv);
    const double along_u = 1.0 + gamma / (1.0 + gamma) * uv;
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = scale * (along_u * u[i] + v[i] / gamma);
    }
    return BallPoint(RealVector(std::move(out)));
}

double gyronorm_E(const BallPoint& v) { return atanh_guarded(v.norm()); }

double rapidity_metric_dE(const BallPoint& u, const BallPoint& v) { return gyronorm_E(einstein_add(-u, v)); }

double gyrometric_de(const BallPoint& u, const BallPoint& v) { return einstein_add(-u, v).norm(); }

EinsteinModel::EinsteinModel(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DomainError("einstein: dimension must be at least 1");
}

BallPoint EinsteinModel::from_coords(std::span<const double> c) const {
    if (c.size() != dim_) throw DimensionError(c.size(), dim_);
    return BallPoint(RealVector(std::vector<double>(c.begin(), c.end())));
}

TransportedGyration EinsteinModel::transport_gyration(const BallPoint& a, const BallPoint& b,
                                                      const BallPoint& c) const {
    const MobiusModel target(dim_);
    const BallPoint lhs = phi_inv(gyr(a, b, c));
    const BallPoint rhs = target.gyr(phi_inv(a), phi_inv(b), phi_inv(c));
    return {lhs.vec().values(), rhs.vec().values()};
}

NormedModel<EinsteinModel> einstein_rapidity(std::size_t dim) {
    return {EinsteinModel(dim), "rapidity", [](const BallPoint& v) { return gyronorm_E(v); }};
}

NormedModel<EinsteinModel> einstein_euclidean(std::size_t dim) {
    return {EinsteinModel(dim), "euclidean", [](const BallPoint& v) { return v.norm(); }};
}

InclusionTrial ball_inclusion_trial(const BallPoint& u, const BallPoint& w, double eps) {
    const BallPoint gap = einstein_add(-u, w);
    InclusionTrial t;
    t.de = gap.norm();
    t.dE = atanh_guarded(t.de);
    t.ordered = t.de <= t.dE;
    t.forward = !(t.de < std::tanh(eps)) || t.dE < eps;
    t.reverse = !(t.dE < eps) || t.de < eps;
    return t;
}

BallPoint draw_in_de_ball(const BallPoint& u, double eps, Rng& rng) {
    const double delta = std::tanh(eps);
    const bool shell = rng.uniform() < 0.5;
    RealVector z = sample_in_ball(u.size(), rng, delta);
    if (shell) {
        const double r = delta * (1.0 - 1e-6 * (0.01 + 0.99 * rng.uniform()));
        const double len = euclidean_norm(z);
        if (len > 0.0) z = (r / len) * z;
    }
    return einstein_add(u, BallPoint(std::move(z)));
}

InclusionResult topology_ball_inclusion(const BallPoint& u, double eps, std::size_t trials, Rng& rng) {
    if (!(eps > 0.0)) throw DomainError("topology_ball_inclusion: eps must be positive");
    InclusionResult result;
    for (std::size_t i = 0; i < trials; ++i) {
        BallPoint w = draw_in_de_ball(u, eps, rng);
        const InclusionTrial t = ball_inclusion_trial(u, w, eps);
        ++result.trials;
        if (!t.ok()) {
            ++result.violations;
            if (!result.first_violation) result.first_violation = InclusionViolation{std::move(w), t};
        }
    }
    return result;
}

}  // namespace gyro
