#include "gyro/errors.hpp"

#include <sstream>
#include <utility>

namespace gyro {

namespace {

std::string dimension_message(std::size_t lhs, std::size_t rhs) {
    std::ostringstream os;
    os << "dimension mismatch: " << lhs << " vs " << rhs;
    return os.str();
}

std::string boundary_message(const std::string& what, double value) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": value " << value << " reaches the unit-ball boundary guard";
    return os.str();
}

std::string lookup_message(const std::string& kind, const std::string& name, const std::vector<std::string>& valid) {
    std::string msg = "unknown " + kind + " '" + name + "'; valid: ";
    for (std::size_t i = 0; i < valid.size(); ++i) {
        if (i != 0) msg += ", ";
        msg += valid[i];
    }
    return msg;
}

}  // namespace

DimensionError::DimensionError(std::size_t lhs, std::size_t rhs)
    : Error(dimension_message(lhs, rhs)), lhs_(lhs), rhs_(rhs) {}

BoundaryError::BoundaryError(const std::string& what, double value)
    : Error(boundary_message(what, value)), value_(value) {}

LookupError::LookupError(const std::string& kind, const std::string& name, const std::vector<std::string>& valid)
    : Error(lookup_message(kind, name, valid)), valid_(valid) {}

PreconditionError::PreconditionError(const std::string& what, std::vector<std::vector<double>> inputs, double lhs,
                                     double rhs)
    : Error(what), inputs_(std::move(inputs)), lhs_(lhs), rhs_(rhs) {}

}  // namespace gyro
