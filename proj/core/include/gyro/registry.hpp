#pragma once

// Name-based access to the registered models, gyronorms and suites; the
// surface the command-line tool is built on.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gyro/property_engine.hpp"
#include "gyro/report.hpp"

namespace gyro {

/// "einstein", "mobius", "poincare-disk", "group".
std::vector<std::string> model_names();

/// Gyronorms registered for `model`; the first is the default. Throws LookupError.
std::vector<std::string> gyronorm_names(const std::string& model);

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

struct SuiteRequest {
    std::string model = "einstein";
    /// Empty selects the model's default gyronorm.
    std::string gyronorm;
    std::size_t dim = 2;
    std::string suite = "axioms";
    CheckConfig cfg;
};

/// Dispatches to the property suites. Throws LookupError for unknown names and
/// DomainError for an invalid dimension (poincare-disk is always 2-D).
CheckReport run_suite(const SuiteRequest& request);

/// d_e / d_E ball inclusions for eps in {0.1, 0.5, 1.0} on the Einstein ball.
CheckReport check_topology(std::size_t dim, const CheckConfig& cfg);

// Point-level operations in a named model. Dimension comes from the inputs;
// points must have the model's dimension (2 for poincare-disk).

std::vector<double> model_add(const std::string& model, std::span<const double> u, std::span<const double> v);
std::vector<double> model_gyr(const std::string& model, std::span<const double> a, std::span<const double> b,
                              std::span<const double> c);
double model_distance(const std::string& model, const std::string& gyronorm, std::span<const double> u,
                      std::span<const double> v);

/// Routes: mobius <-> einstein (phi, phi^-1, any dimension) and
/// poincare-disk <-> mobius (identification, dimension 2). Identity routes are
/// accepted. Anything else throws LookupError.
std::vector<double> convert_point(const std::string& from, const std::string& to, std::span<const double> point);

}  // namespace gyro
