#include "gyro/registry.hpp"

#include <algorithm>
#include <variant>

#include "gyro/complex_disk.hpp"
#include "gyro/einstein.hpp"
#include "gyro/errors.hpp"
#include "gyro/group_adapter.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

namespace {

using AnyNormed = std::variant<NormedModel<EinsteinModel>, NormedModel<MobiusModel>, NormedModel<DiskModel>,
                               NormedModel<GroupModel>>;

void require_model(const std::string& model) {
    const auto names = model_names();
    if (std::find(names.begin(), names.end(), model) == names.end()) throw LookupError("model", model, names);
}

std::string resolve_gyronorm(const std::string& model, const std::string& gyronorm) {
    const auto names = gyronorm_names(model);
    if (gyronorm.empty()) return names.front();
    if (std::find(names.begin(), names.end(), gyronorm) == names.end()) {
        throw LookupError("gyronorm for " + model, gyronorm, names);
    }
    return gyronorm;
}

AnyNormed make_normed(const std::string& model, const std::string& requested_norm, std::size_t dim,
                      std::uint64_t seed) {
    require_model(model);
    const std::string norm = resolve_gyronorm(model, requested_norm);
    if (dim == 0) throw DomainError("dimension must be at least 1");
    if (model == "einstein") {
        if (norm == "rapidity") return einstein_rapidity(dim);
        if (norm == "euclidean") return einstein_euclidean(dim);
        return discrete_gyronorm(EinsteinModel(dim));
    }
    if (model == "mobius") {
        if (norm == "rapidity") return mobius_rapidity(dim);
        return discrete_gyronorm(MobiusModel(dim));
    }
    if (model == "poincare-disk") {
        if (dim != 2) throw DomainError("poincare-disk is two-dimensional, got dimension " + std::to_string(dim));
        if (norm == "poincare") return disk_poincare(seed);
        return discrete_gyronorm(DiskModel{});
    }
    if (norm == "euclidean") return group_adapter(dim);
    return discrete_gyronorm(GroupModel(dim));
}

template <GyrogroupModel M>
CheckReport dispatch_suite(const NormedModel<M>& nm, const std::string& suite, const CheckConfig& cfg) {
    auto relabel = [&](CheckReport r) {
        r.gyronorm = nm.norm_name;
        return r;
    };
    if (suite == "axioms") return relabel(check_axioms(nm.model, cfg));
    if (suite == "identities") return relabel(check_identities(nm.model, cfg));
    if (suite == "gyronorm") return check_gyronorm(nm, cfg);
    if (suite == "metric") return check_metric(nm, cfg);
    if (suite == "left-invariance") return check_left_invariance(nm, cfg);
    if (suite == "automorphism-isometry") {
        Rng rng = Rng::substream(cfg.seed, stream_key("tau"), 0);
        try {
            const auto [a, b] = find_nonidentity_gyration(nm.model, rng, cfg.probes, 64, cfg.tol);
            return check_automorphism_isometry(nm, a, b, cfg);
        } catch (const DegeneracyError&) {
            // Groups: any gyration is the identity map, which is trivially an isometry.
            const auto e = nm.model.identity();
            return check_automorphism_isometry(nm, e, e, cfg);
        }
    }
    if (suite == "klee") return check_right_inequality_and_klee(nm, cfg);
    if (suite == "commutative-like") return check_commutative_like(nm, cfg);
    if (suite == "mazur-ulam") return check_random_mazur_ulam(nm, cfg);
    if (suite == "homogeneity-isotropy") return check_homogeneity_isotropy(nm, cfg);
    throw LookupError("suite", suite, suite_names());
}

std::vector<double> copy(std::span<const double> c) { return {c.begin(), c.end()}; }

BallPoint ball(std::span<const double> c) { return BallPoint(RealVector(copy(c))); }

DiskPoint disk(std::span<const double> c) {
    if (c.size() != 2) throw DimensionError(c.size(), 2);
    return DiskPoint(c[0], c[1]);
}

void same_dims(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionError(a.size(), b.size());
}

}  // namespace

std::vector<std::string> model_names() { return {"einstein", "mobius", "poincare-disk", "group"}; }

std::vector<std::string> gyronorm_names(const std::string& model) {
    require_model(model);
    if (model == "einstein") return {"rapidity", "euclidean", "discrete"};
    if (model == "mobius") return {"rapidity", "discrete"};
    if (model == "poincare-disk") return {"poincare", "discrete"};
    return {"euclidean", "discrete"};
}

std::vector<std::string> suite_names() {
    return {"axioms", "identities", "gyronorm", "metric", "left-invariance", "automorphism-isometry",
            "klee", "commutative-like", "mazur-ulam", "homogeneity-isotropy", "topology"};
}

CheckReport check_topology(std::size_t dim, const CheckConfig& cfg) {
    const EinsteinModel m(dim);
    std::vector<Property<BallPoint>> props;
    for (const double eps : {0.1, 0.5, 1.0}) {
        std::string name = "ball_inclusion_eps_" + format_real(eps);
        auto draw = [m, eps](Rng& rng) {
            Instance<BallPoint> s;
            s.points.push_back(m.sample(rng));
            s.points.push_back(draw_in_de_ball(s.points[0], eps, rng));
            return s;
        };
        auto eval = [eps](const Instance<BallPoint>& s) {
            const InclusionTrial t = ball_inclusion_trial(s.points[0], s.points[1], eps);
            return Outcome{t.dE, eps, std::max(0.0, t.dE - eps), t.ok()};
        };
        props.push_back({std::move(name), {}, 0, 0, std::move(draw), std::move(eval)});
    }
    return assemble_report({"topology", m.name(), "rapidity", dim}, cfg, run_all(props, model_sampler(m), cfg));
}

CheckReport run_suite(const SuiteRequest& request) {
    const auto suites = suite_names();
    if (std::find(suites.begin(), suites.end(), request.suite) == suites.end()) {
        throw LookupError("suite", request.suite, suites);
    }
    AnyNormed nm = make_normed(request.model, request.gyronorm, request.dim, request.cfg.seed);
    if (request.suite == "topology") {
        if (request.model != "einstein") throw LookupError("suite for " + request.model, "topology", {"einstein"});
        return check_topology(request.dim, request.cfg);
    }
    return std::visit([&](const auto& normed) { return dispatch_suite(normed, request.suite, request.cfg); }, nm);
}

std::vector<double> model_add(const std::string& model, std::span<const double> u, std::span<const double> v) {
    require_model(model);
    same_dims(u, v);
    if (model == "einstein") return einstein_add(ball(u), ball(v)).vec().values();
    if (model == "mobius") return mobius_add(ball(u), ball(v)).vec().values();
    if (model == "poincare-disk") return to_vector(cmobius_add(disk(u), disk(v)));
    const GroupModel g(u.size());
    return g.add(g.from_coords(u), g.from_coords(v)).values();
}

std::vector<double> model_gyr(const std::string& model, std::span<const double> a, std::span<const double> b,
                              std::span<const double> c) {
    require_model(model);
    same_dims(a, b);
    same_dims(a, c);
    if (model == "einstein") return EinsteinModel(a.size()).gyr(ball(a), ball(b), ball(c)).vec().values();
    if (model == "mobius") return MobiusModel(a.size()).gyr(ball(a), ball(b), ball(c)).vec().values();
    if (model == "poincare-disk") return to_vector(DiskModel{}.gyr(disk(a), disk(b), disk(c)));
    const GroupModel g(a.size());
    return g.gyr(g.from_coords(a), g.from_coords(b), g.from_coords(c)).values();
}

double model_distance(const std::string& model, const std::string& gyronorm, std::span<const double> u,
                      std::span<const double> v) {
    same_dims(u, v);
    AnyNormed nm = make_normed(model, gyronorm, u.size(), 42);
    return std::visit(
        [&](const auto& normed) { return normed.distance(normed.model.from_coords(u), normed.model.from_coords(v)); },
        nm);
}

std::vector<double> convert_point(const std::string& from, const std::string& to, std::span<const double> point) {
    require_model(from);
    require_model(to);
    const std::vector<std::string> routes = {"mobius->einstein", "einstein->mobius", "poincare-disk->mobius",
                                             "mobius->poincare-disk"};
    if (from == to) {
        if (from == "poincare-disk") return to_vector(disk(point));
        if (from == "group") return GroupModel(point.size()).from_coords(point).values();
        return ball(point).vec().values();
    }
    if (from == "mobius" && to == "einstein") return phi(ball(point)).vec().values();
    if (from == "einstein" && to == "mobius") return phi_inv(ball(point)).vec().values();
    if (from == "poincare-disk" && to == "mobius") return ball(to_vector(disk(point))).vec().values();
    if (from == "mobius" && to == "poincare-disk") {
        if (point.size() != 2) throw DimensionError(point.size(), 2);
        return to_vector(disk(ball(point).coords()));
    }
    throw LookupError("conversion route", from + "->" + to, routes);
}

}  // namespace gyro
