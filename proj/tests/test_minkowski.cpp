#include "relspin/minkowski.hpp"
#include "relspin/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace relspin;

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vec3 v(normal(rng), normal(rng), normal(rng));
    while (v.norm() < 1e-3) v = Vec3(normal(rng), normal(rng), normal(rng));
    return v.normalized();
}

// Generic proper orthochronous element: rotation * boost * rotation.
TransformPair random_transform(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, kPi);
    std::uniform_real_distribution<double> rapidity(0.0, 1.5);
    TransformPair t = rotation(random_unit(rng), angle(rng));
    t = compose(t, boost(random_unit(rng), rapidity(rng)));
    return compose(t, rotation(random_unit(rng), angle(rng)));
}

MassiveMomentum random_momentum(std::mt19937_64& rng, double m = 1.0) {
    std::normal_distribution<double> normal(0.0, 1.0);
    return MassiveMomentum(Vec3(normal(rng), normal(rng), normal(rng)), m);
}

double lorentz_defect(const LorentzTransform& l) {
    Eigen::Matrix4d g = Eigen::Matrix4d::Identity();
    g(1, 1) = g(2, 2) = g(3, 3) = -1.0;
    return (l.transpose() * g * l - g).cwiseAbs().maxCoeff();
}

double su2_defect(const SpinorMap& w) {
    return std::max((w.adjoint() * w - SpinorMap::Identity()).cwiseAbs().maxCoeff(),
                    std::abs(w.determinant() - Complex(1, 0)));
}

} // namespace

TEST_CASE("minkowski_dot basic contractions") {
    CHECK(minkowski_dot(FourVector(1, 0, 0, 0), FourVector(1, 0, 0, 0)) == 1.0);
    CHECK(minkowski_dot(FourVector(1, 0, 0, 1), FourVector(1, 0, 0, 1)) == 0.0);
    CHECK(minkowski_dot(FourVector(1, 0, 0, 1), FourVector(1, 0, 0, -1)) == 2.0);
}

TEST_CASE("boost: identity, rest-mass image, null eigenvector") {
    const TransformPair id = boost(Vec3(0, 0, 1), 0.0);
    CHECK((id.vector - LorentzTransform::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((id.spinor - SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const double m = 1.7;
    const TransformPair b = boost(Vec3(0, 0, 1), 1.0);
    const FourVector image = b.vector * FourVector(m, 0, 0, 0);
    CHECK(image(0) == doctest::Approx(m * std::cosh(1.0)).epsilon(1e-12));
    CHECK(image(3) == doctest::Approx(m * std::sinh(1.0)).epsilon(1e-12));
    CHECK(image(0) == doctest::Approx(m * 1.543081).epsilon(1e-6));
    CHECK(image(3) == doctest::Approx(m * 1.175201).epsilon(1e-6));
    CHECK(std::abs(image(1)) < 1e-14);
    CHECK(std::abs(image(2)) < 1e-14);

    const FourVector null_dir(1, 0, 0, 1);
    CHECK((b.vector * null_dir - std::exp(1.0) * null_dir).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(boost(Vec3(1, 1, 0), 1.0), std::invalid_argument);
}

TEST_CASE("rotation: identity, double cover, quarter turn") {
    const TransformPair id = rotation(Vec3(1, 0, 0), 0.0);
    CHECK((id.vector - LorentzTransform::Identity()).cwiseAbs().maxCoeff() < 1e-15);

    const TransformPair full = rotation(Vec3(0, 0, 1), 2.0 * kPi);
    CHECK((full.vector - LorentzTransform::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((full.spinor + SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    const TransformPair quarter = rotation(Vec3(0, 0, 1), kPi / 2.0);
    const FourVector image = quarter.vector * FourVector(0, 1, 0, 0);
    CHECK((image - FourVector(0, 0, 1, 0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("sl2c_to_lorentz: kernel and constructor cross-check") {
    CHECK((sl2c_to_lorentz(SpinorMap::Identity()) - LorentzTransform::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);
    CHECK((sl2c_to_lorentz(-SpinorMap::Identity()) - LorentzTransform::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    const TransformPair b = boost(Vec3(0, 0, 1), 1.0);
    CHECK((sl2c_to_lorentz(b.spinor) - b.vector).cwiseAbs().maxCoeff() < 1e-10);

    CHECK_THROWS_AS(sl2c_to_lorentz(2.0 * SpinorMap::Identity()), std::invalid_argument);
}

TEST_CASE("sl2c_to_lorentz is a homomorphism") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const TransformPair a = random_transform(rng);
        const TransformPair b = random_transform(rng);
        const LorentzTransform lhs = sl2c_to_lorentz(a.spinor * b.spinor);
        const LorentzTransform rhs = sl2c_to_lorentz(a.spinor) * sl2c_to_lorentz(b.spinor);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(lorentz_defect(a.vector) < 1e-12);
        CHECK(a.vector(0, 0) >= 1.0);
        CHECK(std::abs(a.vector.determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("standard_boost: rest, collinear rapidity, hermiticity") {
    const double m = 0.8;
    const TransformPair rest = standard_boost(MassiveMomentum(Vec3(0, 0, 0), m));
    CHECK((rest.spinor - SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-14);

    const MassiveMomentum q(Vec3(0, 0, 1.3), m);
    const double eta = std::acosh(q.energy() / m);
    const TransformPair direct = boost(Vec3(0, 0, 1), eta);
    const TransformPair canonical = standard_boost(q);
    CHECK((canonical.vector - direct.vector).cwiseAbs().maxCoeff() < 1e-12);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const MassiveMomentum qq = random_momentum(rng, 1.3);
        const SpinorMap l = standard_boost(qq).spinor;
        CHECK((l - l.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(l.determinant() - Complex(1, 0)) < 1e-12);
        const FourVector mapped = standard_boost(qq).vector * FourVector(qq.m, 0, 0, 0);
        CHECK((mapped - qq.four_momentum()).cwiseAbs().maxCoeff() < 1e-10);
    }

    CHECK_THROWS_AS(MassiveMomentum(Vec3(1, 0, 0), -1.0), std::invalid_argument);
}

TEST_CASE("wigner_rotation: trivial cases") {
    const MassiveMomentum q(Vec3(0.4, -0.2, 0.9), 1.0);
    const TransformPair id{LorentzTransform::Identity(), SpinorMap::Identity()};
    CHECK((wigner_rotation(id, q) - SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    // Pure boost from rest: L(Lambda k) = Lambda exactly.
    const TransformPair b = boost(Vec3(1, 0, 0), 0.9);
    const MassiveMomentum rest(Vec3(0, 0, 0), 2.0);
    CHECK((wigner_rotation(b, rest) - SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    // A rotation Wigner-rotates every momentum by itself.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        const TransformPair r = rotation(random_unit(rng), 1.1);
        const MassiveMomentum p = random_momentum(rng);
        CHECK((wigner_rotation(r, p) - r.spinor).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("wigner_rotation satisfies the cocycle identity") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const TransformPair l1 = random_transform(rng);
        const TransformPair l2 = random_transform(rng);
        const MassiveMomentum p = random_momentum(rng, 0.9);
        const SpinorMap composed = wigner_rotation(compose(l2, l1), p);
        const SpinorMap chained =
            wigner_rotation(l2, transform_momentum(l1.vector, p)) * wigner_rotation(l1, p);
        CHECK((composed - chained).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(su2_defect(composed) < 1e-12);
    }
}

TEST_CASE("mass shell is preserved") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        const TransformPair l = random_transform(rng);
        const MassiveMomentum p = random_momentum(rng, 1.7);
        const FourVector image = l.vector * p.four_momentum();
        CHECK(minkowski_dot(image, image) ==
              doctest::Approx(p.m * p.m).epsilon(1e-10));
    }
}

TEST_CASE("wigner angle matches the closed-form oracle on the grid") {
    const double rapidities[] = {0.25, 0.5, 1.0, 2.0};
    for (double xi : rapidities) {
        for (double eta : rapidities) {
            for (int k = 0; k <= 6; ++k) {
                const double theta = k * kPi / 6.0;
                const Vec3 dir(std::sin(theta), 0.0, std::cos(theta));
                const MassiveMomentum q(std::sinh(eta) * dir, 1.0);
                const double composed = rotation_angle(wigner_rotation(boost(Vec3(0, 0, 1), xi), q));
                CHECK(std::abs(composed - wigner_angle_oracle(xi, eta, theta)) < 1e-10);
            }
        }
    }

    CHECK(wigner_angle_oracle(0.0, 1.0, 1.0) == 0.0);
    CHECK(wigner_angle_oracle(1.0, 1.0, 0.0) == 0.0);
    // Frozen spot value, cross-checked against the matrix route above.
    CHECK(std::abs(wigner_angle_oracle(1.0, 1.0, kPi / 2) - 0.420783961638073) < 1e-12);
}

TEST_CASE("null_eigenvectors: boost, rotation, identity") {
    const auto from_boost = null_eigenvectors(boost(Vec3(0, 0, 1), 0.7).vector);
    REQUIRE(from_boost.size() == 2);
    CHECK(from_boost[0].eigenvalue == doctest::Approx(std::exp(-0.7)).epsilon(1e-12));
    CHECK((from_boost[0].direction - FourVector(1, 0, 0, -1)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(from_boost[1].eigenvalue == doctest::Approx(std::exp(0.7)).epsilon(1e-12));
    CHECK((from_boost[1].direction - FourVector(1, 0, 0, 1)).cwiseAbs().maxCoeff() < 1e-10);

    const auto from_rotation = null_eigenvectors(rotation(Vec3(0, 0, 1), 1.2).vector);
    REQUIRE(from_rotation.size() == 2);
    CHECK(from_rotation[0].eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((from_rotation[0].direction - FourVector(1, 0, 0, -1)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((from_rotation[1].direction - FourVector(1, 0, 0, 1)).cwiseAbs().maxCoeff() < 1e-8);

    CHECK_THROWS_AS(null_eigenvectors(LorentzTransform::Identity()), numerical_error);

    // Oblique axes as well.
    const Vec3 axis = Vec3(1, 2, -1).normalized();
    const auto oblique = null_eigenvectors(boost(axis, 1.3).vector);
    REQUIRE(oblique.size() == 2);
    for (const auto& ev : oblique) {
        CHECK(std::abs(minkowski_dot(ev.direction, ev.direction)) < 1e-10);
        CHECK((boost(axis, 1.3).vector * ev.direction - ev.eigenvalue * ev.direction)
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("inverse and compose are group operations") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 20; ++i) {
        const TransformPair t = random_transform(rng);
        const TransformPair round = compose(t, inverse(t));
        CHECK((round.vector - LorentzTransform::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((round.spinor - SpinorMap::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
}
