#include "gyro/group_adapter.hpp"

#include "gyro/errors.hpp"

namespace gyro {

GroupModel::GroupModel(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DomainError("group_adapter: dimension must be at least 1");
}

RealVector GroupModel::from_coords(std::span<const double> c) const {
    if (c.size() != dim_) throw DimensionError(c.size(), dim_);
    return RealVector(std::vector<double>(c.begin(), c.end()));
}

TransportedGyration GroupModel::transport_gyration(const RealVector& a, const RealVector& b,
                                                   const RealVector& c) const {
    return {(2.0 * gyr(a, b, c)).values(), gyr(2.0 * a, 2.0 * b, 2.0 * c).values()};
}

NormedModel<GroupModel> group_adapter(std::size_t n) {
    return {GroupModel(n), "euclidean", [](const RealVector& x) { return euclidean_norm(x); }};
}

}  // namespace gyro
