#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "beansub/bean.hpp"
#include "beansub/errors.hpp"
#include "beansub/subordination.hpp"
#include "test_support.hpp"

using namespace beansub;

namespace {

std::vector<Complex> random_coeffs(std::mt19937_64& rng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<Complex> c;
    for (int k = 0; k <= degree; ++k) {
        c.emplace_back(u(rng), u(rng));
    }
    return c;
}

std::vector<Complex> geometric_ratio_coeffs(int degree) {
    // z / (1 - z) truncated: [0, 1, 1, ..., 1]
    std::vector<Complex> c(degree + 1, Complex{1.0, 0.0});
    c[0] = 0.0;
    return c;
}

}  // namespace

TEST_CASE("polynomial jet agrees with finite differences") {
    std::mt19937_64 rng(31);
    const double h = 1e-4;
    for (int i = 0; i < 20; ++i) {
        const Polynomial p(random_coeffs(rng, 6, 1.0));
        const Complex z = testing::random_in_disk(rng, 0.9);
        const auto j = p.jet(z);
        const auto jp = p.jet(z + h), jm = p.jet(z - h);
        CHECK(std::abs((jp.value - jm.value) / (2 * h) - j.d1) < 1e-6);
        CHECK(std::abs((jp.d1 - jm.d1) / (2 * h) - j.d2) < 1e-6);
        CHECK(std::abs((jp.d2 - jm.d2) / (2 * h) - j.d3) < 1e-5);
        CHECK(p(z) == j.value);
    }
}

TEST_CASE("ratio_transform examples") {
    const NormalizedFunction geo(geometric_ratio_coeffs(12));
    const auto v = ratio_transform(geo, {0.3, 0.0});
    REQUIRE(v.has_value());
    CHECK(v->p.real() == doctest::Approx(1.42856505127603942).epsilon(1e-12));
    CHECK(std::abs(v->p - 1.0 / 0.7) < 1e-5);

    const NormalizedFunction f({0.0, 1.0, 0.5});
    const auto w = ratio_transform(f, {0.2, 0.0});
    REQUIRE(w.has_value());
    CHECK(w->p.real() == doctest::Approx(1.2 / 1.1).epsilon(1e-14));
    CHECK(std::abs(w->p.imag()) < 1e-15);

    const auto zero = ratio_transform(f, {0.0, 0.0});
    REQUIRE(zero.has_value());
    CHECK(zero->p == Complex{1.0, 0.0});
    CHECK(zero->zp_prime == Complex{0.0, 0.0});
}

TEST_CASE("ratio_transform is undefined at zeros of f and f'") {
    // f = z + z^2 / 2: f'(-1) = 0; f(-2) = 0 lies outside the disk but is still reported.
    const NormalizedFunction f({0.0, 1.0, 0.5});
    CHECK_FALSE(ratio_transform(f, {-1.0, 0.0}).has_value());
    CHECK_FALSE(ratio_transform(f, {-2.0, 0.0}).has_value());
}

TEST_CASE("property: z p' matches a centred finite difference") {
    std::mt19937_64 rng(32);
    const double h = 1e-4;
    for (int i = 0; i < 20; ++i) {
        auto c = random_coeffs(rng, 5, 0.1);
        c[0] = 0.0;
        c[1] = 1.0;
        const NormalizedFunction f(c);
        for (int k = 0; k < 64; ++k) {
            const Complex z = testing::random_in_disk(rng, 0.8);
            if (std::abs(z) < 0.05) {
                continue;
            }
            const auto v = ratio_transform(f, z);
            const auto vp = ratio_transform(f, z + h);
            const auto vm = ratio_transform(f, z - h);
            REQUIRE((v && vp && vm));
            const Complex fd = z * (vp->p - vm->p) / (2.0 * h);
            CHECK(std::abs(fd - v->zp_prime) <= 1e-6);
        }
    }
}

TEST_CASE("ratio jet: z^2 p'' matches finite differences of z p'") {
    std::mt19937_64 rng(33);
    const double h = 1e-4;
    for (int i = 0; i < 10; ++i) {
        auto c = random_coeffs(rng, 5, 0.1);
        c[0] = 0.0;
        c[1] = 1.0;
        const auto g = AnalyticFunction::ratio(NormalizedFunction(c));
        for (int k = 0; k < 32; ++k) {
            const Complex z = testing::random_in_disk(rng, 0.8);
            if (std::abs(z) < 0.05) {
                continue;
            }
            const auto j = g.evaluate(z);
            const auto jp = g.evaluate(z + h);
            const auto jm = g.evaluate(z - h);
            REQUIRE((j && jp && jm));
            const Complex p2 = (jp->p - 2.0 * j->p + jm->p) / (h * h);
            CHECK(std::abs(z * z * p2 - j->z2pp) <= 1e-5);
        }
    }
}

TEST_CASE("bean_composed jet agrees with finite differences") {
    std::mt19937_64 rng(34);
    const double h = 1e-4;
    for (int i = 0; i < 10; ++i) {
        auto c = random_coeffs(rng, 4, 0.2);
        c[0] = 0.0;
        const auto g = AnalyticFunction::bean_composed(c);
        const Complex z = testing::random_in_disk(rng, 0.9);
        const auto j = g.evaluate(z), jp = g.evaluate(z + h), jm = g.evaluate(z - h);
        REQUIRE((j && jp && jm));
        CHECK(std::abs(z * (jp->p - jm->p) / (2.0 * h) - j->zp) < 1e-6);
        CHECK(std::abs(z * z * (jp->p - 2.0 * j->p + jm->p) / (h * h) - j->z2pp) < 1e-5);
    }
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Polynomial({1.0, Complex{NAN, 0.0}}), PreconditionError);
    CHECK_THROWS_AS(NormalizedFunction({0.0, 2.0}), PreconditionError);
    CHECK_THROWS_AS(NormalizedFunction({1.0}), PreconditionError);
    CHECK_THROWS_AS(AnalyticFunction::polynomial({}), PreconditionError);
    CHECK_THROWS_AS(AnalyticFunction::polynomial({2.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(AnalyticFunction::bean_composed({0.1, 0.5}), PreconditionError);
    CHECK_THROWS_AS(AnalyticFunction::bean_composed({0.0, 0.7, 0.4}), PreconditionError);
    CHECK_NOTHROW(AnalyticFunction::bean_composed({0.0, 0.6, 0.4}));
}

TEST_CASE("check_subordination examples") {
    const std::vector<double> radii{0.5, 0.9, 0.99};
    SUBCASE("B(z^2) lies in the bean") {
        const auto report = check_subordination(AnalyticFunction::bean_composed({0.0, 0.0, 1.0}),
                                                DomainPredicate::bean(), radii, 256);
        CHECK(report.pass);
        CHECK(report.grid_size == 3u * 256u);
        CHECK(report.notes.empty());
    }
    SUBCASE("constant 1 lies in the lemniscate domain") {
        const auto report =
            check_subordination(AnalyticFunction::polynomial({1.0}), DomainPredicate::lemniscate(), radii, 256);
        CHECK(report.pass);
        CHECK(report.worst_margin == doctest::Approx(1.0));
    }
    SUBCASE("1 + 0.9 z leaves the bean near z = -0.99") {
        const auto report =
            check_subordination(AnalyticFunction::polynomial({1.0, 0.9}), DomainPredicate::bean(), radii, 256);
        CHECK_FALSE(report.pass);
        CHECK(report.worst_margin == doctest::Approx(-3.12000375910381085).epsilon(1e-9));
        CHECK(std::abs(report.witness - Complex{-0.99, 0.0}) < 1e-15);
        CHECK(report.witness_radius == 0.99);
        CHECK(std::abs(report.witness_image - Complex{0.109, 0.0}) < 1e-12);
    }
}

TEST_CASE("check_subordination preconditions and singular samples") {
    const auto one = AnalyticFunction::polynomial({1.0});
    const std::vector<double> bad{0.5, 1.0};
    const std::vector<double> ok{0.5};
    CHECK_THROWS_AS(check_subordination(one, DomainPredicate::bean(), bad, 128), PreconditionError);
    CHECK_THROWS_AS(check_subordination(one, DomainPredicate::bean(), ok, 10), PreconditionError);
    CHECK_THROWS_AS(check_subordination(one, DomainPredicate::bean(), std::vector<double>{}, 128),
                    PreconditionError);

    // f = z - z^2: f'(1/2) = 0, hit exactly by the phi = 0 sample on |z| = 0.5.
    const auto g = AnalyticFunction::ratio(NormalizedFunction({0.0, 1.0, -1.0}));
    const auto report = check_subordination(g, DomainPredicate::bean(), ok, 128);
    CHECK_FALSE(report.pass);
    CHECK(std::isinf(report.worst_margin));
    REQUIRE(report.notes.size() == 1);
    CHECK(report.notes[0].find("singular") != std::string::npos);
}

TEST_CASE("property: random bean compositions stay in the bean") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::vector<double> radii{0.3, 0.6, 0.9, 0.999};
    for (int i = 0; i < 50; ++i) {
        std::vector<Complex> c{0.0};
        double budget = 1.0;
        for (int k = 1; k <= 4; ++k) {
            const double mag = budget * u(rng);
            budget -= mag;
            c.push_back(std::polar(mag, 2.0 * M_PI * u(rng)));
        }
        const auto report = check_subordination(AnalyticFunction::bean_composed(c), DomainPredicate::bean(), radii, 256);
        CHECK(report.pass);
    }
}

TEST_CASE("check_implication: constant function satisfies premise and conclusion") {
    const std::vector<double> radii{0.5, 0.9};
    const auto one = AnalyticFunction::polynomial({1.0});
    for (auto id : {TheoremId::BeanPower, TheoremId::LemniscateMobius, TheoremId::JanowskiSecondOrder}) {
        const auto spec = TheoremSpec::at_threshold(id, TheoremParams{});
        const auto report = check_implication(spec, one, radii, 128);
        CHECK(report.premise.pass);
        CHECK(report.conclusion.pass);
        CHECK_FALSE(report.counterexample());
    }
    const auto weak = TheoremSpec::make(TheoremId::BeanPower, TheoremParams{}, 1.0);
    CHECK_THROWS_AS(check_implication(weak, one, radii, 128), HypothesisError);
}

TEST_CASE("property: no counterexamples among random polynomials") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::vector<double> radii{0.25, 0.5, 0.75, 0.95};
    int premise_passes = 0;
    for (auto id : all_theorems()) {
        const auto spec = TheoremSpec::at_threshold(id, TheoremParams{});
        for (int i = 0; i < 20; ++i) {
            const double scale = std::pow(10.0, -3.0 * (u(rng) + 1.0) / 2.0);
            std::vector<Complex> c{1.0};
            for (int k = 1; k <= 3; ++k) {
                c.emplace_back(scale * u(rng), scale * u(rng));
            }
            const auto report = check_implication(spec, AnalyticFunction::polynomial(c), radii, 128);
            INFO(theorem_name(id), " sample ", i);
            CHECK_FALSE(report.counterexample());
            premise_passes += report.premise.pass ? 1 : 0;
        }
    }
    CHECK(premise_passes > 0);
}
