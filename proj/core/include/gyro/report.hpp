#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gyro/vector_core.hpp"

namespace gyro {

/// A side of a checked relation: a scalar or a point (coordinates).
using Value = std::variant<double, std::vector<double>>;

struct Counterexample {
    std::string property;
    std::size_t sample_index = 0;
    std::vector<std::vector<double>> inputs;
    std::vector<int> tags;
    Value lhs;
    Value rhs;
    double diff = 0.0;
};

enum class Status { pass, fail, skipped };

const char* to_string(Status s) noexcept;

struct PropertyResult {
    std::string name;
    Status status = Status::pass;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    /// At most CheckConfig::max_witnesses, ordered by sample index.
    std::vector<Counterexample> failures;
    std::string note;
};

struct CheckReport {
    std::string suite;
    std::string model;
    std::string gyronorm;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    Tolerance tolerance;
    std::size_t skipped = 0;
    std::vector<PropertyResult> properties;

    /// No property failed (skipped properties do not count as failures).
    bool passed() const noexcept;
    /// Samples skipped on boundary errors are at most 1% of those attempted.
    bool sampling_healthy() const noexcept;
    /// nullptr when absent.
    const PropertyResult* find(const std::string& name) const noexcept;
};

/// Structured document with a fixed key order; byte-stable for equal reports.
std::string to_json(const CheckReport& report);

/// Short human-readable summary, one line per property.
std::string to_text(const CheckReport& report);

}  // namespace gyro
