#include "gyro/mobius.hpp"

#include <cmath>
#include <vector>

#include "gyro/einstein.hpp"
#include "gyro/errors.hpp"

namespace gyro {

BallPoint mobius_add(const BallPoint& u, const BallPoint& v) {
    if (u.size() != v.size()) throw DimensionError(u.size(), v.size());
    const double uv = inner_product(u.vec(), v.vec());
    const double uu = u.norm() * u.norm();
    const double vv = v.norm() * v.norm();
    const double cu = 1.0 + 2.0 * uv + vv;
    const double cv = 1.0 - uu;
    const double den = 1.0 + 2.0 * uv + uu * vv;
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (cu * u[i] + cv * v[i]) / den;
    return BallPoint(RealVector(std::move(out)));
}

namespace {

using WideVec = std::vector<long double>;

WideVec wide_add(const WideVec& u, const WideVec& v) {
    long double uv = 0, uu = 0, vv = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        uv += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
    }
    const long double cu = 1 + 2 * uv + vv;
    const long double cv = 1 - uu;
    const long double den = 1 + 2 * uv + uu * vv;
    WideVec out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (cu * u[i] + cv * v[i]) / den;
    return out;
}

WideVec widen(const BallPoint& p) { return WideVec(p.coords().begin(), p.coords().end()); }

}  // namespace

BallPoint mobius_gyr(const BallPoint& a, const BallPoint& b, const BallPoint& c) {
    if (a.size() != b.size()) throw DimensionError(a.size(), b.size());
    if (a.size() != c.size()) throw DimensionError(a.size(), c.size());
    const WideVec wa = widen(a), wb = widen(b);
    WideVec ab = wide_add(wa, wb);
    for (auto& x : ab) x = -x;
    const WideVec g = wide_add(ab, wide_add(wa, wide_add(wb, widen(c))));
    return BallPoint(RealVector(std::vector<double>(g.begin(), g.end())));
}

BallPoint phi(const BallPoint& v) {
    const double r = v.norm();
    return BallPoint((2.0 / (1.0 + r * r)) * v.vec());
}

BallPoint phi_inv(const BallPoint& w) {
    const double r = w.norm();
    if (r < 1e-8) return BallPoint(0.5 * w.vec());
    // (1 - sqrt(1 - r^2)) / r^2, rationalized to avoid cancellation.
    return BallPoint((1.0 / (1.0 + std::sqrt(1.0 - r * r))) * w.vec());
}

double gyronorm_M(const BallPoint& v) { return 0.5 * gyronorm_E(phi(v)); }

double rapidity_metric_dM(const BallPoint& u, const BallPoint& v) { return gyronorm_M(mobius_add(-u, v)); }

MobiusModel::MobiusModel(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DomainError("mobius: dimension must be at least 1");
}

BallPoint MobiusModel::from_coords(std::span<const double> c) const {
    if (c.size() != dim_) throw DimensionError(c.size(), dim_);
    return BallPoint(RealVector(std::vector<double>(c.begin(), c.end())));
}

TransportedGyration MobiusModel::transport_gyration(const BallPoint& a, const BallPoint& b,
                                                    const BallPoint& c) const {
    const EinsteinModel target(dim_);
    const BallPoint lhs = phi(gyr(a, b, c));
    const BallPoint rhs = target.gyr(phi(a), phi(b), phi(c));
    return {lhs.vec().values(), rhs.vec().values()};
}

NormedModel<MobiusModel> mobius_rapidity(std::size_t dim) {
    return {MobiusModel(dim), "rapidity", [](const BallPoint& v) { return gyronorm_M(v); }};
}

}  // namespace gyro
