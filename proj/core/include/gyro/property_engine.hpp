#pragma once

// Seeded, tolerance-aware property checks for any gyrogroup model.
//
// Every sample draws its inputs from its own substream
// Rng::substream(seed, stream_key(property stream), sample index), so results
// do not depend on how samples are spread across workers, and properties that
// share a stream name see identical inputs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/report.hpp"
#include "gyro/rng.hpp"
#include "gyro/text.hpp"
#include "gyro/vector_core.hpp"

namespace gyro {

struct CheckConfig {
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    Tolerance tol{};
    /// Probe points per instance for pointwise function-equality claims.
    std::size_t probes = 32;
    std::size_t workers = 1;
    std::size_t max_witnesses = 3;
    /// norm(x) below this must mean x is the identity.
    double positivity_floor = 1e-7;
};

/// Result of evaluating one relation on one instance.
struct Outcome {
    Value lhs;
    Value rhs;
    double diff = 0.0;
    bool holds = true;
};

inline Outcome equal_values(double lhs, double rhs, const Tolerance& tol) {
    return {lhs, rhs, std::abs(lhs - rhs), tol.close(lhs, rhs)};
}

inline Outcome at_most(double lhs, double rhs, const Tolerance& tol) {
    return {lhs, rhs, std::max(0.0, lhs - rhs), tol.at_most(lhs, rhs)};
}

inline Outcome equal_coords(std::vector<double> lhs, std::vector<double> rhs, const Tolerance& tol) {
    double sq = 0.0;
    for (std::size_t i = 0; i < std::min(lhs.size(), rhs.size()); ++i) sq += (lhs[i] - rhs[i]) * (lhs[i] - rhs[i]);
    const bool ok = tol.close(lhs, rhs);
    return {std::move(lhs), std::move(rhs), std::sqrt(sq), ok};
}

template <class E>
Outcome equal_points(const E& lhs, const E& rhs, const Tolerance& tol) {
    return equal_coords(to_vector(lhs), to_vector(rhs), tol);
}

template <class E>
struct Instance {
    std::vector<E> points;
    std::vector<int> tags;
};

template <class E>
struct Property {
    std::string name;
    /// Substream name; empty means `name`.
    std::string stream;
    /// Points drawn per sample when `draw` is unset.
    std::size_t arity = 0;
    /// When nonzero, `eval` sees the drawn points plus one probe point and is
    /// run once per probe; the worst failing probe is reported.
    std::size_t probes = 0;
    std::function<Instance<E>(Rng&)> draw;
    std::function<Outcome(const Instance<E>&)> eval;
};

template <class E>
using Sampler = std::function<E(Rng&)>;

enum class SampleState : unsigned char { passed, failed, skipped };

struct PropertyRun {
    PropertyResult result;
    std::vector<SampleState> states;
};

namespace detail {

template <class E>
std::vector<std::vector<double>> serialize_points(const std::vector<E>& points) {
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(to_vector(p));
    return out;
}

struct SampleRecord {
    SampleState state = SampleState::passed;
    std::optional<Counterexample> witness;
};

template <class E>
SampleRecord evaluate_sample(const Property<E>& p, const Sampler<E>& sampler, const CheckConfig& cfg,
                             std::size_t index) {
    const std::string& stream = p.stream.empty() ? p.name : p.stream;
    Rng rng = Rng::substream(cfg.seed, stream_key(stream), index);
    SampleRecord rec;
    try {
        Instance<E> inst;
        if (p.draw) {
            inst = p.draw(rng);
        } else {
            inst.points.reserve(p.arity + 1);
            for (std::size_t k = 0; k < p.arity; ++k) inst.points.push_back(sampler(rng));
        }

        auto fail_with = [&](Instance<E> const& where, Outcome o) {
            rec.state = SampleState::failed;
            rec.witness = Counterexample{p.name, index, serialize_points(where.points), where.tags,
                                         std::move(o.lhs), std::move(o.rhs), o.diff};
        };

        if (p.probes == 0) {
            Outcome o = p.eval(inst);
            if (!o.holds) fail_with(inst, std::move(o));
            return rec;
        }

        std::vector<E> probe_points;
        probe_points.reserve(p.probes);
        for (std::size_t k = 0; k < p.probes; ++k) probe_points.push_back(sampler(rng));
        std::optional<Outcome> worst;
        std::size_t worst_probe = 0;
        for (std::size_t k = 0; k < probe_points.size(); ++k) {
            inst.points.push_back(probe_points[k]);
            Outcome o = p.eval(inst);
            inst.points.pop_back();
            if (!o.holds && (!worst || o.diff > worst->diff)) {
                worst = std::move(o);
                worst_probe = k;
            }
        }
        if (worst) {
            inst.points.push_back(probe_points[worst_probe]);
            fail_with(inst, std::move(*worst));
        }
    } catch (const BoundaryError&) {
        rec = SampleRecord{SampleState::skipped, std::nullopt};
    }
    return rec;
}

}  // namespace detail

/// Evaluates `p` on cfg.samples instances, possibly across cfg.workers threads.
template <class E>
PropertyRun run_property(const Property<E>& p, const Sampler<E>& sampler, const CheckConfig& cfg) {
    std::vector<detail::SampleRecord> records(cfg.samples);
    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, cfg.samples));
    if (workers == 1) {
        for (std::size_t i = 0; i < cfg.samples; ++i) records[i] = detail::evaluate_sample(p, sampler, cfg, i);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            const std::size_t chunk = (cfg.samples + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        const std::size_t end = std::min(cfg.samples, (w + 1) * chunk);
                        for (std::size_t i = w * chunk; i < end; ++i) {
                            records[i] = detail::evaluate_sample(p, sampler, cfg, i);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    PropertyRun run;
    run.result.name = p.name;
    run.states.reserve(records.size());
    for (auto& rec : records) {
        run.states.push_back(rec.state);
        switch (rec.state) {
            case SampleState::passed: ++run.result.checked; break;
            case SampleState::skipped: ++run.result.skipped; break;
            case SampleState::failed:
                ++run.result.checked;
                ++run.result.failed;
                if (run.result.failures.size() < cfg.max_witnesses) run.result.failures.push_back(std::move(*rec.witness));
                break;
        }
    }
    run.result.status = run.result.failed == 0 ? Status::pass : Status::fail;
    return run;
}

/// Re-evaluates a recorded witness. `rebuild` maps stored coordinates back to elements.
template <class E, class Rebuild>
Outcome replay(const Property<E>& p, const Counterexample& c, Rebuild&& rebuild) {
    Instance<E> inst;
    inst.tags = c.tags;
    for (const auto& coords : c.inputs) inst.points.push_back(rebuild(std::span<const double>(coords)));
    return p.eval(inst);
}

template <GyrogroupModel M>
Outcome replay(const M& m, const Property<typename M::Element>& p, const Counterexample& c) {
    return replay(p, c, [&](std::span<const double> coords) { return m.from_coords(coords); });
}

template <GyrogroupModel M>
Sampler<typename M::Element> model_sampler(const M& m) {
    return [m](Rng& rng) { return m.sample(rng); };
}

/// Pass when both conditions agree at suite level (both hold everywhere, or
/// both fail somewhere). Per-sample disagreement is reported in the note only.
PropertyResult equivalence_verdict(const std::string& name, const PropertyRun& first, const PropertyRun& second);

struct ReportHeader {
    std::string suite;
    std::string model;
    std::string gyronorm;
    std::size_t dim = 0;
};

CheckReport assemble_report(const ReportHeader& header, const CheckConfig& cfg, std::vector<PropertyResult> results);

template <class E>
std::vector<PropertyResult> run_all(const std::vector<Property<E>>& props, const Sampler<E>& sampler,
                                    const CheckConfig& cfg) {
    std::vector<PropertyResult> out;
    out.reserve(props.size());
    for (const auto& p : props) out.push_back(run_property(p, sampler, cfg).result);
    return out;
}

// ---------------------------------------------------------------------------
// Property builders. Each returns the properties of one suite so that callers
// (and tests) can run them, or replay a single witness by name.

/// G1-G4 and automorphism-ness of gyr[a,b].
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> axiom_properties(const M& m, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"G1_left_identity", {}, 1, 0, {}, [m, tol](const Instance<E>& s) {
                         const E& a = s.points[0];
                         return equal_points(m.add(m.identity(), a), a, tol);
                     }});
    props.push_back({"G2_left_inverse", {}, 1, 0, {}, [m, tol](const Instance<E>& s) {
                         const E& a = s.points[0];
                         return equal_points(m.add(m.neg(a), a), m.identity(), tol);
                     }});
    props.push_back({"G3_left_gyroassociative", {}, 3, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &c = s.points[2];
                         return equal_points(m.add(a, m.add(b, c)), m.add(m.add(a, b), m.gyr(a, b, c)), tol);
                     }});
    props.push_back({"G4_left_loop", {}, 2, cfg.probes, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2];
                         return equal_points(m.gyr(m.add(a, b), b, x), m.gyr(a, b, x), tol);
                     }});
    props.push_back({"gyr_automorphism", {}, 4, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2], &y = s.points[3];
                         return equal_points(m.gyr(a, b, m.add(x, y)), m.add(m.gyr(a, b, x), m.gyr(a, b, y)), tol);
                     }});
    return props;
}

/// The nine algebraic identities, one property each.
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> identity_properties(const M& m, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"involution_of_inversion", {}, 1, 0, {}, [m, tol](const Instance<E>& s) {
                         return equal_points(m.neg(m.neg(s.points[0])), s.points[0], tol);
                     }});
    props.push_back({"left_cancellation", {}, 2, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &x = s.points[1];
                         return equal_points(m.add(m.neg(a), m.add(a, x)), x, tol);
                     }});
    props.push_back({"gyrator_identity", {}, 3, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &c = s.points[2];
                         return equal_points(m.gyr(a, b, c), gyr_via_gyrator_identity(m, a, b, c), tol);
                     }});
    props.push_back({"inverse_of_sum", {}, 2, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1];
                         return equal_points(m.neg(m.add(a, b)), m.gyr(a, b, m.add(m.neg(b), m.neg(a))), tol);
                     }});
    props.push_back({"left_quotient_chain", {}, 3, 0, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &c = s.points[2];
                         const E na = m.neg(a);
                         const E lhs = m.add(m.add(na, b), m.gyr(na, b, m.add(m.neg(b), c)));
                         return equal_points(lhs, m.add(na, c), tol);
                     }});
    props.push_back({"even_property", {}, 2, cfg.probes, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2];
                         return equal_points(m.gyr(m.neg(a), m.neg(b), x), m.gyr(a, b, x), tol);
                     }});
    props.push_back({"inversive_symmetry", {}, 2, cfg.probes, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2];
                         return equal_points(m.gyr(b, a, m.gyr(a, b, x)), x, tol);
                     }});
    if constexpr (HasGyrationTransport<M>) {
        props.push_back({"gyration_preserved_by_homomorphism", {}, 3, 0, {}, [m, tol](const Instance<E>& s) {
                             auto t = m.transport_gyration(s.points[0], s.points[1], s.points[2]);
                             return equal_coords(std::move(t.lhs), std::move(t.rhs), tol);
                         }});
    }
    props.push_back({"composition_law", {}, 2, cfg.probes, {}, [m, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2];
                         return equal_points(m.add(a, m.add(b, x)), m.add(m.add(a, b), m.gyr(a, b, x)), tol);
                     }});
    return props;
}

/// Positivity, inverse invariance, subadditivity and gyration invariance.
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> gyronorm_properties(const NormedModel<M>& nm, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    const double floor = cfg.positivity_floor;
    std::vector<Property<E>> props;
    props.push_back({"positivity", {}, 1, 0, {}, [nm, tol, floor](const Instance<E>& s) {
                         const E& x = s.points[0];
                         const E e = nm.model.identity();
                         const double at_identity = nm.norm(e);
                         const double nx = nm.norm(x);
                         if (!tol.close(at_identity, 0.0)) return Outcome{at_identity, 0.0, std::abs(at_identity), false};
                         if (nx < 0.0) return Outcome{nx, 0.0, -nx, false};
                         if (nx < floor && !same_point(x, e, tol)) {
                             return Outcome{nx, floor, carrier_distance(x, e), false};
                         }
                         return Outcome{nx, 0.0, 0.0, true};
                     }});
    props.push_back({"inverse_invariance", {}, 1, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E& x = s.points[0];
                         return equal_values(nm.norm(nm.model.neg(x)), nm.norm(x), tol);
                     }});
    props.push_back({"subadditivity", {}, 2, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1];
                         return at_most(nm.norm(nm.model.add(x, y)), nm.norm(x) + nm.norm(y), tol);
                     }});
    props.push_back({"gyration_invariance", {}, 3, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &a = s.points[0], &b = s.points[1], &x = s.points[2];
                         return equal_values(nm.norm(nm.model.gyr(a, b, x)), nm.norm(x), tol);
                     }});
    return props;
}

/// Metric axioms of an arbitrary distance function.
template <class E>
std::vector<Property<E>> metric_properties(Metric<E> d, const CheckConfig& cfg) {
    const Tolerance tol = cfg.tol;
    const double floor = cfg.positivity_floor;
    std::vector<Property<E>> props;
    props.push_back({"nonnegativity", {}, 2, 0, {}, [d, tol](const Instance<E>& s) {
                         return at_most(0.0, d(s.points[0], s.points[1]), tol);
                     }});
    props.push_back({"identity_of_indiscernibles", {}, 2, 0, {}, [d, tol, floor](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1];
                         const double self = d(x, x);
                         if (!tol.close(self, 0.0)) return Outcome{self, 0.0, std::abs(self), false};
                         const double dxy = d(x, y);
                         if (dxy < floor && !same_point(x, y, tol)) return Outcome{dxy, floor, carrier_distance(x, y), false};
                         return Outcome{self, 0.0, 0.0, true};
                     }});
    props.push_back({"symmetry", {}, 2, 0, {}, [d, tol](const Instance<E>& s) {
                         return equal_values(d(s.points[0], s.points[1]), d(s.points[1], s.points[0]), tol);
                     }});
    props.push_back({"triangle_inequality", {}, 3, 0, {}, [d, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1], &z = s.points[2];
                         return at_most(d(x, z), d(x, y) + d(y, z), tol);
                     }});
    return props;
}

/// d(a + x, a + y) = d(x, y).
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> left_invariance_properties(const NormedModel<M>& nm, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    return {{"left_gyrotranslation_invariance", {}, 3, 0, {}, [nm, tol](const Instance<E>& s) {
                 const E &a = s.points[0], &x = s.points[1], &y = s.points[2];
                 return equal_values(nm.distance(nm.model.add(a, x), nm.model.add(a, y)), nm.distance(x, y), tol);
             }}};
}

/// tau = gyr[a,b] preserves the gyronorm and the induced metric.
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> automorphism_isometry_properties(const NormedModel<M>& nm,
                                                                            const typename M::Element& a,
                                                                            const typename M::Element& b,
                                                                            const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"tau_preserves_norm", {}, 1, 0, {}, [nm, a, b, tol](const Instance<E>& s) {
                         const E& x = s.points[0];
                         return equal_values(nm.norm(nm.model.gyr(a, b, x)), nm.norm(x), tol);
                     }});
    props.push_back({"tau_is_isometry", {}, 2, 0, {}, [nm, a, b, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1];
                         const E tx = nm.model.gyr(a, b, x);
                         const E ty = nm.model.gyr(a, b, y);
                         return equal_values(nm.distance(tx, ty), nm.distance(x, y), tol);
                     }});
    return props;
}

/// (I) d(x + a, y + a) <= d(x, y) and (II) d(x + y, a + b) <= d(x, a) + d(y, b)
/// on one shared stream of (x, y, a, b).
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> right_klee_properties(const NormedModel<M>& nm, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"right_gyrotranslation_inequality", "right_klee", 4, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1], &a = s.points[2];
                         return at_most(nm.distance(nm.model.add(x, a), nm.model.add(y, a)), nm.distance(x, y), tol);
                     }});
    props.push_back({"klee_condition", "right_klee", 4, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1], &a = s.points[2], &b = s.points[3];
                         return at_most(nm.distance(nm.model.add(x, y), nm.model.add(a, b)),
                                        nm.distance(x, a) + nm.distance(y, b), tol);
                     }});
    return props;
}

/// (I) ||(a + x) + gyr[a,x](y - a)|| = ||x + y|| and (II) bi-invariance, on one
/// shared stream of (a, x, y).
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> commutative_like_properties(const NormedModel<M>& nm,
                                                                       const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"commutative_like", "commutative_like", 3, 0, {}, [nm, tol](const Instance<E>& s) {
                         const auto& m = nm.model;
                         const E &a = s.points[0], &x = s.points[1], &y = s.points[2];
                         const E lhs = m.add(m.add(a, x), m.gyr(a, x, m.add(y, m.neg(a))));
                         return equal_values(nm.norm(lhs), nm.norm(m.add(x, y)), tol);
                     }});
    props.push_back({"bi_gyrotranslation_invariance", "commutative_like", 3, 0, {}, [nm, tol](const Instance<E>& s) {
                         const auto& m = nm.model;
                         const E &a = s.points[0], &x = s.points[1], &y = s.points[2];
                         const double base = nm.distance(x, y);
                         const double right = nm.distance(m.add(x, a), m.add(y, a));
                         const double left = nm.distance(m.add(a, x), m.add(a, y));
                         if (!tol.close(right, base)) return equal_values(right, base, tol);
                         return equal_values(left, base, tol);
                     }});
    return props;
}

namespace detail {

template <GyrogroupModel M>
Outcome rho_fixes_identity(const NormedModel<M>& nm, const MazurUlamDecomposition<typename M::Element>& dec,
                           const Tolerance& tol) {
    const auto e = nm.model.identity();
    return equal_points(apply_isometry(nm.model, dec.rho, e), e, tol);
}

template <GyrogroupModel M>
Outcome rho_is_isometry(const NormedModel<M>& nm, const MazurUlamDecomposition<typename M::Element>& dec,
                        const typename M::Element& x, const typename M::Element& y, const Tolerance& tol) {
    const auto rx = apply_isometry(nm.model, dec.rho, x);
    const auto ry = apply_isometry(nm.model, dec.rho, y);
    return equal_values(nm.distance(rx, ry), nm.distance(x, y), tol);
}

template <GyrogroupModel M>
Outcome decomposition_reproduces(const NormedModel<M>& nm, const IsometrySpec<typename M::Element>& f,
                                 const MazurUlamDecomposition<typename M::Element>& dec,
                                 const typename M::Element& x, const Tolerance& tol) {
    const double gap = nm.distance(apply_isometry(nm.model, f, x), recompose(nm.model, dec, x));
    return at_most(gap, 0.0, tol);
}

/// Instance layout: tags = step kinds (0 = left translation, 1 = gyration);
/// points = step parameters in order, then x, then y.
template <class E>
IsometrySpec<E> decode_isometry(const Instance<E>& s) {
    IsometrySpec<E> f;
    std::size_t k = 0;
    for (int kind : s.tags) {
        if (kind == 0) {
            f.steps.push_back(LeftTranslation<E>{s.points.at(k)});
            k += 1;
        } else {
            f.steps.push_back(Gyration<E>{s.points.at(k), s.points.at(k + 1)});
            k += 2;
        }
    }
    return f;
}

}  // namespace detail

/// Random 1-4 step composition of left gyrotranslations and gyrations.
template <GyrogroupModel M>
Instance<typename M::Element> draw_isometry_instance(const M& m, Rng& rng) {
    Instance<typename M::Element> s;
    const std::size_t steps = 1 + static_cast<std::size_t>(rng.below(4));
    for (std::size_t i = 0; i < steps; ++i) {
        const int kind = static_cast<int>(rng.below(2));
        s.tags.push_back(kind);
        s.points.push_back(m.sample(rng));
        if (kind == 1) s.points.push_back(m.sample(rng));
    }
    s.points.push_back(m.sample(rng));
    s.points.push_back(m.sample(rng));
    return s;
}

/// Decomposition of a fixed isometry f; each sample is a probe pair (x, y).
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> mazur_ulam_properties(const NormedModel<M>& nm,
                                                                 const IsometrySpec<typename M::Element>& f,
                                                                 const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    const auto dec = mazur_ulam_decompose(nm, f);
    std::vector<Property<E>> props;
    props.push_back({"rho_fixes_identity", "mazur_ulam", 2, 0, {}, [nm, dec, tol](const Instance<E>&) {
                         return detail::rho_fixes_identity(nm, dec, tol);
                     }});
    props.push_back({"rho_is_isometry", "mazur_ulam", 2, 0, {}, [nm, dec, tol](const Instance<E>& s) {
                         return detail::rho_is_isometry(nm, dec, s.points[0], s.points[1], tol);
                     }});
    props.push_back({"decomposition_reproduces_f", "mazur_ulam", 2, 0, {}, [nm, f, dec, tol](const Instance<E>& s) {
                         return detail::decomposition_reproduces(nm, f, dec, s.points[0], tol);
                     }});
    return props;
}

/// As mazur_ulam_properties, but every sample draws its own random isometry.
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> random_mazur_ulam_properties(const NormedModel<M>& nm,
                                                                        const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    auto draw = [m = nm.model](Rng& rng) { return draw_isometry_instance(m, rng); };
    auto probe = [](const Instance<E>& s, std::size_t back) -> const E& { return s.points[s.points.size() - back]; };
    std::vector<Property<E>> props;
    props.push_back({"rho_fixes_identity", "mazur_ulam", 0, 0, draw, [nm, tol](const Instance<E>& s) {
                         return detail::rho_fixes_identity(nm, mazur_ulam_decompose(nm, detail::decode_isometry(s)), tol);
                     }});
    props.push_back({"rho_is_isometry", "mazur_ulam", 0, 0, draw, [nm, tol, probe](const Instance<E>& s) {
                         const auto dec = mazur_ulam_decompose(nm, detail::decode_isometry(s));
                         return detail::rho_is_isometry(nm, dec, probe(s, 2), probe(s, 1), tol);
                     }});
    props.push_back({"decomposition_reproduces_f", "mazur_ulam", 0, 0, draw, [nm, tol, probe](const Instance<E>& s) {
                         const auto f = detail::decode_isometry(s);
                         return detail::decomposition_reproduces(nm, f, mazur_ulam_decompose(nm, f), probe(s, 2), tol);
                     }});
    return props;
}

inline constexpr std::size_t kIsotropyProbes = 8;

template <GyrogroupModel M>
std::vector<Property<typename M::Element>> homogeneity_properties(const NormedModel<M>& nm, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    std::vector<Property<E>> props;
    props.push_back({"homogeneity_maps_x_to_y", "homogeneity", 4, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1];
                         return equal_points(apply_isometry(nm.model, homogeneity_witness(nm.model, x, y), x), y, tol);
                     }});
    props.push_back({"homogeneity_isometry", "homogeneity", 4, 0, {}, [nm, tol](const Instance<E>& s) {
                         const E &x = s.points[0], &y = s.points[1], &u = s.points[2], &v = s.points[3];
                         const auto t = homogeneity_witness(nm.model, x, y);
                         return equal_values(nm.distance(apply_isometry(nm.model, t, u), apply_isometry(nm.model, t, v)),
                                             nm.distance(u, v), tol);
                     }});
    return props;
}

/// Instance layout: p, a, b, u, v, then kIsotropyProbes probe points.
template <GyrogroupModel M>
std::vector<Property<typename M::Element>> isotropy_properties(const NormedModel<M>& nm, const CheckConfig& cfg) {
    using E = typename M::Element;
    const Tolerance tol = cfg.tol;
    auto probes = [](const Instance<E>& s) { return std::span<const E>(s.points).subspan(5); };
    auto witness = [nm, tol, probes](const Instance<E>& s) {
        return isotropy_witness(nm.model, s.points[0], s.points[1], s.points[2], probes(s), tol);
    };
    auto degenerate = [tol](const Instance<E>&) { return Outcome{0.0, tol.atol, 0.0, false}; };
    std::vector<Property<E>> props;
    props.push_back({"isotropy_fixes_p", "isotropy", 5 + kIsotropyProbes, 0, {},
                     [nm, tol, witness, degenerate](const Instance<E>& s) {
                         try {
                             const E& p = s.points[0];
                             return equal_points(apply_isometry(nm.model, witness(s), p), p, tol);
                         } catch (const DegeneracyError&) {
                             return degenerate(s);
                         }
                     }});
    props.push_back({"isotropy_isometry", "isotropy", 5 + kIsotropyProbes, 0, {},
                     [nm, tol, witness, degenerate](const Instance<E>& s) {
                         try {
                             const auto t = witness(s);
                             const E &u = s.points[3], &v = s.points[4];
                             return equal_values(
                                 nm.distance(apply_isometry(nm.model, t, u), apply_isometry(nm.model, t, v)),
                                 nm.distance(u, v), tol);
                         } catch (const DegeneracyError&) {
                             return degenerate(s);
                         }
                     }});
    props.push_back({"isotropy_nonidentity", "isotropy", 5 + kIsotropyProbes, 0, {},
                     [nm, tol, witness, degenerate, probes](const Instance<E>& s) {
                         try {
                             const auto t = witness(s);
                             double moved = 0.0;
                             bool any = false;
                             for (const E& q : probes(s)) {
                                 const E tq = apply_isometry(nm.model, t, q);
                                 moved = std::max(moved, carrier_distance(tq, q));
                                 any = any || !same_point(tq, q, tol);
                             }
                             return Outcome{moved, tol.atol, moved, any};
                         } catch (const DegeneracyError&) {
                             return degenerate(s);
                         }
                     }});
    return props;
}

// ---------------------------------------------------------------------------
// Suites

template <GyrogroupModel M>
CheckReport check_axioms(const M& m, const CheckConfig& cfg, const std::string& norm_label = "") {
    return assemble_report({"axioms", m.name(), norm_label, m.dim()}, cfg,
                           run_all(axiom_properties(m, cfg), model_sampler(m), cfg));
}

template <GyrogroupModel M>
CheckReport check_identities(const M& m, const CheckConfig& cfg, const std::string& norm_label = "") {
    return assemble_report({"identities", m.name(), norm_label, m.dim()}, cfg,
                           run_all(identity_properties(m, cfg), model_sampler(m), cfg));
}

template <GyrogroupModel M>
CheckReport check_gyronorm(const NormedModel<M>& nm, const CheckConfig& cfg) {
    return assemble_report({"gyronorm", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           run_all(gyronorm_properties(nm, cfg), model_sampler(nm.model), cfg));
}

template <class E>
CheckReport check_metric(Metric<E> d, Sampler<E> sampler, const CheckConfig& cfg, const ReportHeader& header) {
    ReportHeader h = header;
    h.suite = "metric";
    return assemble_report(h, cfg, run_all(metric_properties(std::move(d), cfg), sampler, cfg));
}

template <GyrogroupModel M>
CheckReport check_metric(const NormedModel<M>& nm, const CheckConfig& cfg) {
    return check_metric<typename M::Element>(induced_metric(nm), model_sampler(nm.model), cfg,
                                             {"metric", nm.model.name(), nm.norm_name, nm.model.dim()});
}

template <GyrogroupModel M>
CheckReport check_left_invariance(const NormedModel<M>& nm, const CheckConfig& cfg) {
    return assemble_report({"left-invariance", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           run_all(left_invariance_properties(nm, cfg), model_sampler(nm.model), cfg));
}

template <GyrogroupModel M>
CheckReport check_automorphism_isometry(const NormedModel<M>& nm, const typename M::Element& a,
                                        const typename M::Element& b, const CheckConfig& cfg) {
    auto results = run_all(automorphism_isometry_properties(nm, a, b, cfg), model_sampler(nm.model), cfg);
    results.front().note = "tau = gyr[a,b] with a = (" + format_point(a.coords()) + "), b = (" +
                           format_point(b.coords()) + ")";
    return assemble_report({"automorphism-isometry", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           std::move(results));
}

template <GyrogroupModel M>
CheckReport check_right_inequality_and_klee(const NormedModel<M>& nm, const CheckConfig& cfg) {
    const auto props = right_klee_properties(nm, cfg);
    const auto sampler = model_sampler(nm.model);
    PropertyRun right = run_property(props[0], sampler, cfg);
    PropertyRun klee = run_property(props[1], sampler, cfg);
    PropertyResult verdict = equivalence_verdict("equivalence_consistent", right, klee);
    return assemble_report({"klee", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           {std::move(right.result), std::move(klee.result), std::move(verdict)});
}

template <GyrogroupModel M>
CheckReport check_commutative_like(const NormedModel<M>& nm, const CheckConfig& cfg) {
    const auto props = commutative_like_properties(nm, cfg);
    const auto sampler = model_sampler(nm.model);
    PropertyRun comm = run_property(props[0], sampler, cfg);
    PropertyRun bi = run_property(props[1], sampler, cfg);
    PropertyResult verdict = equivalence_verdict("equivalence_consistent", comm, bi);
    return assemble_report({"commutative-like", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           {std::move(comm.result), std::move(bi.result), std::move(verdict)});
}

template <GyrogroupModel M>
CheckReport check_mazur_ulam(const NormedModel<M>& nm, const IsometrySpec<typename M::Element>& f,
                             const CheckConfig& cfg) {
    return assemble_report({"mazur-ulam", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           run_all(mazur_ulam_properties(nm, f, cfg), model_sampler(nm.model), cfg));
}

/// Every sample decomposes its own random 1-4 step isometry.
template <GyrogroupModel M>
CheckReport check_random_mazur_ulam(const NormedModel<M>& nm, const CheckConfig& cfg) {
    return assemble_report({"mazur-ulam", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           run_all(random_mazur_ulam_properties(nm, cfg), model_sampler(nm.model), cfg));
}

/// Isotropy properties are reported as skipped (with the reason) when no
/// nonidentity gyration can be found, i.e. the model is a group.
template <GyrogroupModel M>
CheckReport check_homogeneity_isotropy(const NormedModel<M>& nm, const CheckConfig& cfg) {
    const auto sampler = model_sampler(nm.model);
    auto results = run_all(homogeneity_properties(nm, cfg), sampler, cfg);
    const auto iso = isotropy_properties(nm, cfg);
    try {
        Rng rng = Rng::substream(cfg.seed, stream_key("isotropy_degeneracy_probe"), 0);
        find_nonidentity_gyration(nm.model, rng, cfg.probes, 64, cfg.tol);
        for (auto& r : run_all(iso, sampler, cfg)) results.push_back(std::move(r));
    } catch (const DegeneracyError& err) {
        for (const auto& p : iso) {
            PropertyResult r;
            r.name = p.name;
            r.status = Status::skipped;
            r.note = std::string("degenerate: ") + err.what();
            results.push_back(std::move(r));
        }
    }
    return assemble_report({"homogeneity-isotropy", nm.model.name(), nm.norm_name, nm.model.dim()}, cfg,
                           std::move(results));
}

}  // namespace gyro
