#pragma once

// Abstract gyrogroup / gyronorm interfaces and the constructions that work on
// any model: gyration from the gyrator identity, the induced metric, gyronorm
// recovery from a left-invariant metric, isometry specs and their
// Mazur-Ulam decomposition, homogeneity and isotropy witnesses.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/rng.hpp"
#include "gyro/vector_core.hpp"

namespace gyro {

/// A gyrogroup over a point type with a coordinate view.
///
/// Element equality is tolerance based and uses the coordinates, so every
/// element type exposes `coords()`. `from_coords` rebuilds an element (used
/// for parsing and counterexample replay) and validates carrier membership.
template <class M>
concept GyrogroupModel = requires(const M& m, const typename M::Element& x, Rng& rng,
                                  std::span<const double> c) {
    typename M::Element;
    { m.name() } -> std::convertible_to<std::string>;
    { m.dim() } -> std::convertible_to<std::size_t>;
    { m.identity() } -> std::same_as<typename M::Element>;
    { m.add(x, x) } -> std::same_as<typename M::Element>;
    { m.neg(x) } -> std::same_as<typename M::Element>;
    { m.gyr(x, x, x) } -> std::same_as<typename M::Element>;
    { m.sample(rng) } -> std::same_as<typename M::Element>;
    { m.from_coords(c) } -> std::same_as<typename M::Element>;
    { x.coords() } -> std::convertible_to<std::span<const double>>;
};

/// Both sides of phi(gyr[a,b]c) = gyr[phi a, phi b](phi c) for a homomorphism
/// phi into another model, as coordinates in the target carrier.
struct TransportedGyration {
    std::vector<double> lhs;
    std::vector<double> rhs;
};

/// Models that know a gyrogroup homomorphism out of themselves.
template <class M>
concept HasGyrationTransport = GyrogroupModel<M> && requires(const M& m, const typename M::Element& x) {
    { m.transport_gyration(x, x, x) } -> std::same_as<TransportedGyration>;
};

template <class E>
using Gyronorm = std::function<double(const E&)>;

template <class E>
using Metric = std::function<double(const E&, const E&)>;

template <class E>
std::vector<double> to_vector(const E& x) {
    auto c = x.coords();
    return {c.begin(), c.end()};
}

template <class E>
bool same_point(const E& a, const E& b, const Tolerance& tol) {
    return tol.close(a.coords(), b.coords());
}

/// Euclidean distance between carrier coordinates.
template <class E>
double carrier_distance(const E& a, const E& b) {
    auto x = a.coords();
    auto y = b.coords();
    if (x.size() != y.size()) throw DimensionError(x.size(), y.size());
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sq += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(sq);
}

/// gyr[a,b]c = -(a + b) + (a + (b + c)).
template <GyrogroupModel M>
typename M::Element gyr_via_gyrator_identity(const M& m, const typename M::Element& a,
                                             const typename M::Element& b, const typename M::Element& c) {
    return m.add(m.neg(m.add(a, b)), m.add(a, m.add(b, c)));
}

/// A gyrogroup together with a gyronorm.
template <GyrogroupModel M>
struct NormedModel {
    using Element = typename M::Element;

    M model;
    std::string norm_name;
    Gyronorm<Element> norm;

    /// d(x, y) = ||-x + y||.
    double distance(const Element& x, const Element& y) const { return norm(model.add(model.neg(x), y)); }
};

template <GyrogroupModel M>
Metric<typename M::Element> induced_metric(const NormedModel<M>& nm) {
    return [nm](const typename M::Element& x, const typename M::Element& y) { return nm.distance(x, y); };
}

/// ||x|| = d(e, x) for a metric invariant under left gyrotranslation.
///
/// Invariance is checked on `checks` sampled triples (a, x, y) first; a
/// violation raises PreconditionError with the offending triple.
template <GyrogroupModel M>
Gyronorm<typename M::Element> gyronorm_from_metric(const M& m, Metric<typename M::Element> d, Rng& rng,
                                                   std::size_t checks = 256, const Tolerance& tol = {}) {
    for (std::size_t i = 0; i < checks; ++i) {
        const auto a = m.sample(rng);
        const auto x = m.sample(rng);
        const auto y = m.sample(rng);
        const double moved = d(m.add(a, x), m.add(a, y));
        const double base = d(x, y);
        if (!tol.close(moved, base)) {
            throw PreconditionError("gyronorm_from_metric: metric is not invariant under left gyrotranslation",
                                    {to_vector(a), to_vector(x), to_vector(y)}, moved, base);
        }
    }
    return [e = m.identity(), d = std::move(d)](const typename M::Element& x) { return d(e, x); };
}

/// ||x|| = 0 at the identity (within tolerance) and 1 elsewhere.
template <GyrogroupModel M>
NormedModel<M> discrete_gyronorm(M m, const Tolerance& tol = {}) {
    auto norm = [e = m.identity(), tol](const typename M::Element& x) { return same_point(x, e, tol) ? 0.0 : 1.0; };
    return NormedModel<M>{std::move(m), "discrete", std::move(norm)};
}

// ---------------------------------------------------------------------------
// Isometry specs

template <class E>
struct LeftTranslation {
    E by;
};

template <class E>
struct Gyration {
    E a;
    E b;
};

template <class E>
using IsometryStep = std::variant<LeftTranslation<E>, Gyration<E>>;

/// Steps are applied in order: steps[0] first. Empty is the identity map.
template <class E>
struct IsometrySpec {
    std::vector<IsometryStep<E>> steps;
};

template <GyrogroupModel M>
typename M::Element apply_isometry(const M& m, const IsometrySpec<typename M::Element>& f,
                                   typename M::Element x) {
    using E = typename M::Element;
    for (const auto& step : f.steps) {
        x = std::visit(
            [&](const auto& s) -> E {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LeftTranslation<E>>) {
                    return m.add(s.by, x);
                } else {
                    return m.gyr(s.a, s.b, x);
                }
            },
            step);
    }
    return x;
}

template <GyrogroupModel M>
typename M::Element apply_isometry(const NormedModel<M>& nm, const IsometrySpec<typename M::Element>& f,
                                   typename M::Element x) {
    return apply_isometry(nm.model, f, std::move(x));
}

/// T = L_y o L_{-x}; maps x to y.
template <GyrogroupModel M>
IsometrySpec<typename M::Element> homogeneity_witness(const M& m, const typename M::Element& x,
                                                      const typename M::Element& y) {
    using E = typename M::Element;
    return {{LeftTranslation<E>{m.neg(x)}, LeftTranslation<E>{y}}};
}

/// True when gyr[a,b] moves at least one probe by more than the tolerance.
template <GyrogroupModel M>
bool gyration_is_nonidentity(const M& m, const typename M::Element& a, const typename M::Element& b,
                             std::span<const typename M::Element> probes, const Tolerance& tol) {
    for (const auto& q : probes) {
        if (!same_point(m.gyr(a, b, q), q, tol)) return true;
    }
    return false;
}

/// T = L_p o gyr[a,b] o L_{-p}; fixes p. Throws DegeneracyError if gyr[a,b]
/// is the identity on every probe.
template <GyrogroupModel M>
IsometrySpec<typename M::Element> isotropy_witness(const M& m, const typename M::Element& p,
                                                   const typename M::Element& a, const typename M::Element& b,
                                                   std::span<const typename M::Element> probes,
                                                   const Tolerance& tol = {}) {
    using E = typename M::Element;
    if (!gyration_is_nonidentity(m, a, b, probes, tol)) {
        throw DegeneracyError("isotropy_witness: gyr[a,b] is the identity on all probe points");
    }
    return {{LeftTranslation<E>{m.neg(p)}, Gyration<E>{a, b}, LeftTranslation<E>{p}}};
}

/// Searches sampled pairs for a nonidentity gyration. Throws DegeneracyError
/// after `attempts` pairs with trivial gyrations (groups).
template <GyrogroupModel M>
std::pair<typename M::Element, typename M::Element> find_nonidentity_gyration(const M& m, Rng& rng,
                                                                              std::size_t probe_count = 32,
                                                                              std::size_t attempts = 64,
                                                                              const Tolerance& tol = {}) {
    using E = typename M::Element;
    std::vector<E> probes;
    probes.reserve(probe_count);
    for (std::size_t i = 0; i < probe_count; ++i) probes.push_back(m.sample(rng));
    for (std::size_t i = 0; i < attempts; ++i) {
        auto a = m.sample(rng);
        auto b = m.sample(rng);
        if (gyration_is_nonidentity(m, a, b, std::span<const E>(probes), tol)) return {std::move(a), std::move(b)};
    }
    throw DegeneracyError("model " + std::string(m.name()) + " has only identity gyrations on sampled pairs");
}

/// f = L_t o rho with t = f(e) and rho = L_{-t} o f fixing e.
template <class E>
struct MazurUlamDecomposition {
    E translation;
    IsometrySpec<E> rho;
};

template <GyrogroupModel M>
MazurUlamDecomposition<typename M::Element> mazur_ulam_decompose(const M& m,
                                                                  const IsometrySpec<typename M::Element>& f) {
    using E = typename M::Element;
    E t = apply_isometry(m, f, m.identity());
    IsometrySpec<E> rho = f;
    rho.steps.push_back(LeftTranslation<E>{m.neg(t)});
    return {std::move(t), std::move(rho)};
}

template <GyrogroupModel M>
MazurUlamDecomposition<typename M::Element> mazur_ulam_decompose(const NormedModel<M>& nm,
                                                                  const IsometrySpec<typename M::Element>& f) {
    return mazur_ulam_decompose(nm.model, f);
}

/// L_t(rho(x)); equals f(x) for a valid decomposition.
template <GyrogroupModel M>
typename M::Element recompose(const M& m, const MazurUlamDecomposition<typename M::Element>& dec,
                              const typename M::Element& x) {
    return m.add(dec.translation, apply_isometry(m, dec.rho, x));
}

}  // namespace gyro
