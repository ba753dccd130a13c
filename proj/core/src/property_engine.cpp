#include "gyro/property_engine.hpp"

namespace gyro {

PropertyResult equivalence_verdict(const std::string& name, const PropertyRun& first, const PropertyRun& second) {
    PropertyResult r;
    r.name = name;
    std::size_t divergent = 0;
    for (std::size_t i = 0; i < std::min(first.states.size(), second.states.size()); ++i) {
        const SampleState a = first.states[i];
        const SampleState b = second.states[i];
        if (a == SampleState::skipped || b == SampleState::skipped) continue;
        ++r.checked;
        if (a != b) ++divergent;
    }
    const bool first_holds = first.result.failed == 0;
    const bool second_holds = second.result.failed == 0;
    r.status = first_holds == second_holds ? Status::pass : Status::fail;
    r.note = first.result.name + (first_holds ? " holds" : " violated") + ", " + second.result.name +
             (second_holds ? " holds" : " violated") + "; samples where the two verdicts differ: " +
             std::to_string(divergent);
    if (r.status == Status::fail) {
        r.failed = 1;
        const PropertyRun& broken = first_holds ? second : first;
        if (!broken.result.failures.empty()) r.failures.push_back(broken.result.failures.front());
    }
    return r;
}

CheckReport assemble_report(const ReportHeader& header, const CheckConfig& cfg, std::vector<PropertyResult> results) {
    CheckReport report;
    report.suite = header.suite;
    report.model = header.model;
    report.gyronorm = header.gyronorm;
    report.dim = header.dim;
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    report.tolerance = cfg.tol;
    report.properties = std::move(results);
    for (const auto& p : report.properties) report.skipped += p.skipped;
    return report;
}

}  // namespace gyro
