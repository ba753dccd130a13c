#include "gyro/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "gyro/text.hpp"

namespace gyro {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "unknown";
}

bool CheckReport::passed() const noexcept {
    for (const auto& p : properties) {
        if (p.status == Status::fail) return false;
    }
    return true;
}

bool CheckReport::sampling_healthy() const noexcept {
    std::size_t attempted = 0;
    std::size_t skips = 0;
    for (const auto& p : properties) {
        attempted += p.checked + p.skipped;
        skips += p.skipped;
    }
    return skips * 100 <= attempted;
}

const PropertyResult* CheckReport::find(const std::string& name) const noexcept {
    for (const auto& p : properties) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

namespace {

ordered_json value_json(const Value& v) {
    if (const double* x = std::get_if<double>(&v)) return *x;
    return std::get<std::vector<double>>(v);
}

ordered_json counterexample_json(const Counterexample& c) {
    ordered_json j;
    j["inputs"] = c.inputs;
    if (!c.tags.empty()) j["tags"] = c.tags;
    j["lhs"] = value_json(c.lhs);
    j["rhs"] = value_json(c.rhs);
    j["diff"] = c.diff;
    return j;
}

}  // namespace

std::string to_json(const CheckReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["model"] = r.model;
    j["gyronorm"] = r.gyronorm;
    j["dim"] = r.dim;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["tolerance"] = ordered_json{{"abs", r.tolerance.atol}, {"rel", r.tolerance.rtol}};
    j["skipped"] = r.skipped;
    ordered_json props = ordered_json::array();
    for (const auto& p : r.properties) {
        ordered_json pj;
        pj["name"] = p.name;
        pj["status"] = to_string(p.status);
        pj["checked"] = p.checked;
        pj["failed"] = p.failed;
        if (!p.note.empty()) pj["note"] = p.note;
        ordered_json failures = ordered_json::array();
        for (const auto& c : p.failures) failures.push_back(counterexample_json(c));
        pj["failures"] = std::move(failures);
        props.push_back(std::move(pj));
    }
    j["properties"] = std::move(props);
    return j.dump(2) + "\n";
}

std::string to_text(const CheckReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << " on " << r.model << " (" << r.gyronorm << ", dim " << r.dim << "), seed " << r.seed
       << ", " << r.samples << " samples, tol abs " << format_real(r.tolerance.atol) << " rel "
       << format_real(r.tolerance.rtol) << "\n";
    for (const auto& p : r.properties) {
        os << "  " << to_string(p.status) << "  " << p.name << "  checked=" << p.checked;
        if (p.failed != 0) os << " failed=" << p.failed;
        if (p.skipped != 0) os << " skipped=" << p.skipped;
        if (!p.note.empty()) os << "  (" << p.note << ")";
        os << "\n";
        if (!p.failures.empty()) {
            const auto& c = p.failures.front();
            os << "        witness #" << c.sample_index << ":";
            for (const auto& in : c.inputs) os << " [" << format_point(in) << "]";
            os << " diff=" << format_real(c.diff) << "\n";
        }
    }
    os << (r.passed() ? "PASS" : "FAIL") << (r.sampling_healthy() ? "" : " (sampling health: too many skips)") << "\n";
    return os.str();
}

}  // namespace gyro
