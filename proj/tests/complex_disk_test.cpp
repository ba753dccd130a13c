#include <gtest/gtest.h>

#include <cmath>

#include "gyro/complex_disk.hpp"
#include "gyro/errors.hpp"
#include "gyro/mobius.hpp"
#include "gyro/rng.hpp"
#include "oracles.hpp"

namespace gyro {
namespace {

oracle::Cx lift(const DiskPoint& z) { return {z.re(), z.im()}; }

TEST(Disk, AddExamples) {
    const DiskPoint s = cmobius_add({0.5, 0.0}, {0.0, 0.5});
    EXPECT_NEAR(s.re(), 0.5882352941176471, 1e-15);
    EXPECT_NEAR(s.im(), 0.35294117647058826, 1e-15);
    EXPECT_EQ(cmobius_add({0.0, 0.0}, {0.3, 0.1}), DiskPoint(0.3, 0.1));
    EXPECT_NEAR(cmobius_add({0.5, 0.0}, {0.5, 0.0}).re(), 0.8, 1e-15);
}

TEST(Disk, AddMatchesComplexOracle) {
    const DiskModel m;
    Rng rng(1);
    for (int i = 0; i < 2000; ++i) {
        const DiskPoint a = m.sample(rng), b = m.sample(rng);
        const auto ref = oracle::disk_add(lift(a), lift(b));
        const DiskPoint s = cmobius_add(a, b);
        EXPECT_NEAR(s.re(), static_cast<double>(ref.real()), 1e-13);
        EXPECT_NEAR(s.im(), static_cast<double>(ref.imag()), 1e-13);
    }
}

TEST(Disk, AgreesWithTwoDimensionalMobius) {
    const DiskModel m;
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        const DiskPoint a = m.sample(rng), b = m.sample(rng);
        const DiskPoint s = cmobius_add(a, b);
        const BallPoint t = mobius_add({a.re(), a.im()}, {b.re(), b.im()});
        EXPECT_NEAR(s.re(), t[0], 1e-13);
        EXPECT_NEAR(s.im(), t[1], 1e-13);
    }
}

TEST(Disk, Boundary) {
    EXPECT_THROW(DiskPoint(1.0, 0.0), BoundaryError);
    EXPECT_THROW(DiskPoint(0.8, 0.6), BoundaryError);
    EXPECT_THROW(cmobius_add({0.9999999, 0.0}, {0.9999999, 0.0}), BoundaryError);
}

TEST(Disk, GyrFactorExample) {
    const Complex f = cmobius_gyr_factor({0.5, 0.0}, {0.0, 0.5});
    EXPECT_NEAR(f.re, 0.8823529411764706, 1e-15);
    EXPECT_NEAR(f.im, -0.47058823529411764, 1e-15);
    EXPECT_NEAR(abs(f), 1.0, 1e-15);
}

TEST(Disk, ClosedFormGyrationMatchesGyratorIdentity) {
    const DiskModel m;
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        const DiskPoint a = m.sample(rng), b = m.sample(rng), c = m.sample(rng);
        const auto ca = lift(a), cb = lift(b), cc = lift(c);
        const auto ref = oracle::disk_add(-oracle::disk_add(ca, cb), oracle::disk_add(ca, oracle::disk_add(cb, cc)));
        const DiskPoint g = m.gyr(a, b, c);
        EXPECT_NEAR(g.re(), static_cast<double>(ref.real()), 1e-11);
        EXPECT_NEAR(g.im(), static_cast<double>(ref.imag()), 1e-11);
    }
}

TEST(Disk, PoincareMetricExamples) {
    EXPECT_NEAR(poincare_metric({0.0, 0.0}, {0.5, 0.0}), 2 * std::atanh(0.5), 1e-12);
    EXPECT_NEAR(poincare_metric({0.5, 0.0}, {-0.5, 0.0}), 2.1972245773362196, 1e-12);
    EXPECT_NEAR(disk_gyronorm({0.0, 0.5}), 1.0986122886681098, 1e-12);
}

TEST(Disk, PoincareIsTwiceMobiusRapidity) {
    const DiskModel m;
    Rng rng(4);
    for (int i = 0; i < 10000; ++i) {
        const DiskPoint w = m.sample(rng), z = m.sample(rng);
        const double dm = rapidity_metric_dM({w.re(), w.im()}, {z.re(), z.im()});
        ASSERT_NEAR(poincare_metric(w, z), 2 * dm, 1e-10);
    }
}

TEST(Disk, MobiusTransformationIsIsometry) {
    const DiskModel m;
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const DiskPoint a = m.sample(rng), w = m.sample(rng), z = m.sample(rng);
        EXPECT_NEAR(poincare_metric(mobius_transformation(a, w), mobius_transformation(a, z)), poincare_metric(w, z),
                    1e-9);
    }
}

TEST(Disk, RightTranslationWitness) {
    const DiskPoint x{0.0, 0.0}, y{0.5, 0.0}, a{0.0, 0.5};
    const double moved = poincare_metric(cmobius_add(x, a), cmobius_add(y, a));
    EXPECT_NEAR(moved, static_cast<double>(oracle::right_translate_witness(0.5L, 0.5L)), 1e-12);
    EXPECT_NEAR(moved, static_cast<double>(oracle::poincare(oracle::disk_add(0, {0, 0.5L}),
                                                            oracle::disk_add({0.5L, 0}, {0, 0.5L}))),
                1e-12);
    EXPECT_GT(moved, poincare_metric(x, y));
}

TEST(Disk, GyronormFromMetric) {
    const auto nm = disk_poincare();
    EXPECT_EQ(nm.norm_name, "poincare");
    EXPECT_NEAR(nm.norm({0.5, 0.0}), 2 * std::atanh(0.5), 1e-12);
    EXPECT_NEAR(nm.distance({0.1, 0.2}, {-0.3, 0.4}), poincare_metric({0.1, 0.2}, {-0.3, 0.4}), 1e-12);
}

TEST(DiskParse, Forms) {
    EXPECT_EQ(parse_disk_point("0.3,0.1"), DiskPoint(0.3, 0.1));
    EXPECT_EQ(parse_disk_point("0.3+0.1i"), DiskPoint(0.3, 0.1));
    EXPECT_EQ(parse_disk_point("0.3-0.1i"), DiskPoint(0.3, -0.1));
    EXPECT_EQ(parse_disk_point("-0.3-0.1i"), DiskPoint(-0.3, -0.1));
    EXPECT_EQ(parse_disk_point("0.5i"), DiskPoint(0.0, 0.5));
    EXPECT_EQ(parse_disk_point("-0.5i"), DiskPoint(0.0, -0.5));
    EXPECT_EQ(parse_disk_point("0.5"), DiskPoint(0.5, 0.0));
    EXPECT_EQ(parse_disk_point("1e-1+2e-1i"), DiskPoint(0.1, 0.2));
    EXPECT_EQ(parse_disk_point("1e-1-2e-1i"), DiskPoint(0.1, -0.2));
    EXPECT_THROW(parse_disk_point("abc"), DomainError);
    EXPECT_THROW(parse_disk_point("0.1,0.2,0.3"), DimensionError);
    EXPECT_THROW(parse_disk_point("0.9+0.9i"), BoundaryError);
}

}  // namespace
}  // namespace gyro
