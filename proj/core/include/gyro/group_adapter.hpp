#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gyro/gyrogroup.hpp"
#include "gyro/vector_core.hpp"

namespace gyro {

/// (R^n, +) viewed as a gyrogroup: every gyration is the identity map.
class GroupModel {
public:
    using Element = RealVector;

    explicit GroupModel(std::size_t dim);

    std::string name() const { return "group"; }
    std::size_t dim() const noexcept { return dim_; }

    RealVector identity() const { return RealVector::zeros(dim_); }
    RealVector add(const RealVector& a, const RealVector& b) const { return a + b; }
    RealVector neg(const RealVector& a) const { return -a; }
    RealVector gyr(const RealVector&, const RealVector&, const RealVector& c) const { return c; }

    /// Uniform in the Euclidean ball of radius 2; the carrier is all of R^n.
    RealVector sample(Rng& rng) const { return sample_in_ball(dim_, rng, 2.0); }
    RealVector from_coords(std::span<const double> c) const;

    /// Homomorphism x -> 2x into the same group.
    TransportedGyration transport_gyration(const RealVector& a, const RealVector& b, const RealVector& c) const;

private:
    std::size_t dim_;
};

/// The group adapter with the Euclidean norm as gyronorm.
NormedModel<GroupModel> group_adapter(std::size_t n);

}  // namespace gyro
