#include "gyro/complex_disk.hpp"

#include <cmath>
#include <string>

#include "gyro/errors.hpp"
#include "gyro/mobius.hpp"
#include "gyro/text.hpp"

namespace gyro {

Complex operator/(Complex a, Complex b) {
    const double den = b.re * b.re + b.im * b.im;
    if (den == 0.0) throw DomainError("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Complex conj(Complex z) { return {z.re, -z.im}; }

double abs(Complex z) { return std::hypot(z.re, z.im); }

DiskPoint::DiskPoint(double re, double im) : c_{re, im} {
    if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("DiskPoint: non-finite coordinate");
    const double r = modulus();
    if (!(r < 1.0 - kBoundaryGuard)) throw BoundaryError("DiskPoint", r);
}

double DiskPoint::modulus() const noexcept { return std::hypot(c_[0], c_[1]); }

DiskPoint cmobius_add(const DiskPoint& a, const DiskPoint& b) {
    const Complex one{1.0, 0.0};
    return DiskPoint((a.value() + b.value()) / (one + conj(a.value()) * b.value()));
}

Complex cmobius_gyr_factor(const DiskPoint& a, const DiskPoint& b) {
    const Complex one{1.0, 0.0};
    return (one + a.value() * conj(b.value())) / (one + conj(a.value()) * b.value());
}

double poincare_metric(const DiskPoint& w, const DiskPoint& z) {
    const Complex one{1.0, 0.0};
    const Complex ratio = (w.value() - z.value()) / (one - conj(w.value()) * z.value());
    return 2.0 * atanh_guarded(abs(ratio));
}

double disk_gyronorm(const DiskPoint& z) { return poincare_metric(DiskPoint{}, z); }

DiskPoint mobius_transformation(const DiskPoint& a, const DiskPoint& z) { return cmobius_add(a, z); }

DiskPoint parse_disk_point(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty disk point");

    if (text.find(',') != std::string_view::npos) {
        const auto parts = parse_real_list(text);
        if (parts.size() != 2) throw DimensionError(parts.size(), 2);
        return DiskPoint(parts[0], parts[1]);
    }
    if (text.back() != 'i') return DiskPoint(parse_real(text), 0.0);

    const std::string_view body = text.substr(0, text.size() - 1);
    // The real/imaginary split is the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imaginary = [&](std::string_view s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split == std::string_view::npos) return DiskPoint(0.0, imaginary(body));
    return DiskPoint(parse_real(body.substr(0, split)), imaginary(body.substr(split)));
}

DiskPoint DiskModel::sample(Rng& rng) const {
    const RealVector v = sample_in_ball(2, rng, kSampleRadiusCap);
    return DiskPoint(v[0], v[1]);
}

DiskPoint DiskModel::from_coords(std::span<const double> c) const {
    if (c.size() != 2) throw DimensionError(c.size(), 2);
    return DiskPoint(c[0], c[1]);
}

TransportedGyration DiskModel::transport_gyration(const DiskPoint& a, const DiskPoint& b,
                                                  const DiskPoint& c) const {
    const MobiusModel target(2);
    auto embed = [](const DiskPoint& z) { return BallPoint{z.re(), z.im()}; };
    const DiskPoint lhs = gyr(a, b, c);
    const BallPoint rhs = target.gyr(embed(a), embed(b), embed(c));
    return {{lhs.re(), lhs.im()}, rhs.vec().values()};
}

NormedModel<DiskModel> disk_poincare(std::uint64_t seed, std::size_t checks) {
    DiskModel model;
    Rng rng = Rng::substream(seed, stream_key("disk_poincare"), 0);
    Gyronorm<DiskPoint> norm = gyronorm_from_metric<DiskModel>(
        model, [](const DiskPoint& w, const DiskPoint& z) { return poincare_metric(w, z); }, rng, checks);
    return {model, "poincare", std::move(norm)};
}

}  // namespace gyro
