#include "doctest.h"

#include <cmath>
#include <string>

#include "beansub/boundary.hpp"
#include "beansub/constants.hpp"
#include "beansub/errors.hpp"
#include "beansub/theorem.hpp"

using namespace beansub;

namespace {

// Threshold oracles evaluated independently at 50-digit precision.
constexpr double kPowerN1D0 = 15.9334578678922317;
constexpr double kPowerN1D1 = 18.7053182458137781;
constexpr double kPowerN2D0 = 100.709445431809548;
constexpr double kQuotientN1D0 = 21.1476915197689502;
constexpr double kJanowskiPowerA1B0 = 18.9618812689901002;
constexpr double kBeanMobius = 0.0534607316945167981;
constexpr double kInverseD0 = 6.32062708966336672;

TheoremParams with(int n, int delta, double A = 1.0, double B = 0.0) { return TheoremParams{n, delta, A, B}; }

}  // namespace

TEST_CASE("threshold matches independent oracles") {
    CHECK(threshold(TheoremId::BeanPower, with(1, 0)) == doctest::Approx(kPowerN1D0).epsilon(1e-12));
    CHECK(threshold(TheoremId::BeanPower, with(1, 1)) == doctest::Approx(kPowerN1D1).epsilon(1e-9));
    CHECK(threshold(TheoremId::BeanPower, with(2, 0)) == doctest::Approx(kPowerN2D0).epsilon(1e-12));
    CHECK(threshold(TheoremId::BeanQuotient, with(1, 0)) == doctest::Approx(kQuotientN1D0).epsilon(1e-12));
    CHECK(threshold(TheoremId::JanowskiPower, with(1, 0, 1.0, 0.0)) ==
          doctest::Approx(kJanowskiPowerA1B0).epsilon(1e-12));
    CHECK(threshold(TheoremId::BeanMobius, with(1, 1)) == doctest::Approx(kBeanMobius).epsilon(1e-9));
}

TEST_CASE("power thresholds scale by 1/d(0) per unit of n") {
    for (auto id : {TheoremId::BeanPower, TheoremId::JanowskiPower, TheoremId::LemniscatePower}) {
        for (int n = 1; n <= 5; ++n) {
            const double ratio = threshold(id, with(n + 1, 0)) / threshold(id, with(n, 0));
            CHECK(ratio == doctest::Approx(kInverseD0).epsilon(1e-9));
        }
    }
}

TEST_CASE("delta = 1 thresholds exceed delta = 0 thresholds") {
    for (auto id : all_theorems()) {
        if (operator_form(id) == OperatorForm::Mobius) {
            continue;
        }
        CHECK(threshold(id, with(1, 1)) > threshold(id, with(1, 0)));
    }
}

TEST_CASE("Janowski thresholds coincide with bean ones when (1+A)/(1+B) = R0") {
    const double A = 0.5;
    const double B = (1.0 + A) / constants::R0 - 1.0;
    const TheoremId pairs[][2] = {{TheoremId::JanowskiPower, TheoremId::BeanPower},
                                  {TheoremId::JanowskiQuotient, TheoremId::BeanQuotient},
                                  {TheoremId::JanowskiMobius, TheoremId::BeanMobius},
                                  {TheoremId::JanowskiSecondOrder, TheoremId::BeanSecondOrder}};
    for (const auto& pair : pairs) {
        for (int delta : {0, 1}) {
            CHECK(threshold(pair[0], with(1, delta, A, B)) ==
                  doctest::Approx(threshold(pair[1], with(1, delta))).epsilon(1e-12));
        }
    }
}

TEST_CASE("names round-trip") {
    for (auto id : all_theorems()) {
        const auto parsed = parse_theorem(theorem_name(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(parse_theorem("bean-cubic").has_value());
    CHECK(all_theorems().size() == 12);
    CHECK(operator_form(TheoremId::LemniscateMobius) == OperatorForm::Mobius);
    CHECK(target_kind(TheoremId::JanowskiSecondOrder) == DomainKind::Janowski);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(threshold(TheoremId::BeanPower, with(1, 2)), PreconditionError);
    CHECK_THROWS_AS(threshold(TheoremId::BeanPower, with(0, 0)), PreconditionError);
    CHECK_THROWS_AS(threshold(TheoremId::JanowskiPower, with(1, 0, 0.5, 0.7)), PreconditionError);
    CHECK_THROWS_AS(threshold(TheoremId::JanowskiPower, with(1, 0, 1.5, 0.0)), PreconditionError);
    CHECK_THROWS_AS(TheoremSpec::make(TheoremId::BeanPower, with(1, 0), 0.0), PreconditionError);
    CHECK_THROWS_AS(TheoremSpec::at_threshold(TheoremId::BeanPower, with(1, 0), 0.0), PreconditionError);
}

TEST_CASE("unsupported parameter combinations") {
    CHECK_THROWS_AS(TheoremSpec::make(TheoremId::BeanSecondOrder, with(1, 0), {1.0, 0.5}, 30.0),
                    UnsupportedParameters);
    CHECK_THROWS_AS(TheoremSpec::make(TheoremId::BeanSecondOrder, with(1, 0), -1.0, 30.0), UnsupportedParameters);
    CHECK_THROWS_AS(threshold(TheoremId::BeanQuotient, with(20, 0)), UnsupportedParameters);
    CHECK_NOTHROW(threshold(TheoremId::BeanQuotient, with(19, 0)));
}

TEST_CASE("at_threshold places the coefficients on the threshold") {
    for (auto id : all_theorems()) {
        const auto spec = TheoremSpec::at_threshold(id, with(1, 0));
        CHECK(spec.hypothesis_value() == doctest::Approx(spec.threshold).epsilon(1e-12));
        CHECK(spec.hypothesis_met());
        CHECK_FALSE(TheoremSpec::at_threshold(id, with(1, 0), 0.9).hypothesis_met());
    }
    const auto mobius = TheoremSpec::at_threshold(TheoremId::BeanMobius, with(3, 0));
    CHECK(mobius.params.n == 1);
    CHECK(mobius.params.delta == 1);
}

TEST_CASE("every theorem passes the admissibility scan at its threshold") {
    for (auto id : all_theorems()) {
        for (int delta : {0, 1}) {
            const auto spec = TheoremSpec::at_threshold(id, with(1, delta));
            const auto report = admissibility_scan(spec);
            INFO(theorem_name(id), " delta=", delta, " worst=", report.worst_margin);
            CHECK(report.pass);
            CHECK(report.worst_margin <= 1e-9);
            CHECK(report.grid_size == 4096u * 5u);
            CHECK(std::abs(std::abs(report.witness) - 1.0) < 1e-12);
            CHECK(report.witness_angle >= 0.0);
            CHECK(report.witness_angle < 2.0 * M_PI);
        }
    }
}

TEST_CASE("higher n passes for power and quotient forms") {
    for (auto id : {TheoremId::BeanPower, TheoremId::BeanQuotient, TheoremId::LemniscateQuotient}) {
        for (int n : {2, 3}) {
            CHECK(admissibility_scan(TheoremSpec::at_threshold(id, with(n, 0))).pass);
        }
    }
}

TEST_CASE("scan soundness: extra slack keeps passing") {
    for (auto id : all_theorems()) {
        for (double slack : {1.01, 1.1, 2.0}) {
            CHECK(admissibility_scan(TheoremSpec::at_threshold(id, with(1, 0), slack)).pass);
        }
    }
}

TEST_CASE("complex beta of threshold modulus passes for first-order forms") {
    for (auto id : {TheoremId::BeanPower, TheoremId::BeanQuotient, TheoremId::LemniscatePower}) {
        const double thr = threshold(id, with(1, 0));
        for (double phase : {0.7, 2.0, -2.5}) {
            const auto spec = TheoremSpec::make(id, with(1, 0), std::polar(thr, phase));
            CHECK(admissibility_scan(spec).pass);
        }
    }
}

TEST_CASE("probe mode reports an inside witness below the threshold") {
    const auto spec = TheoremSpec::make(TheoremId::BeanPower, with(1, 0), 0.01);
    CHECK_THROWS_AS(admissibility_scan(spec), HypothesisError);
    ScanOptions probe;
    probe.probe = true;
    const auto report = admissibility_scan(spec, probe);
    CHECK_FALSE(report.pass);
    CHECK(report.worst_margin > 0.0);
    CHECK(DomainPredicate::bean().margin(report.witness_image).inside(1e-9));
    REQUIRE_FALSE(report.notes.empty());
    CHECK(report.notes[0].find("probe") != std::string::npos);
}

TEST_CASE("scan option validation") {
    const auto spec = TheoremSpec::at_threshold(TheoremId::BeanPower, with(1, 0));
    ScanOptions o;
    o.theta_grid = 10;
    CHECK_THROWS_AS(admissibility_scan(spec, o), PreconditionError);
    o = {};
    o.m_values = {0.5};
    CHECK_THROWS_AS(admissibility_scan(spec, o), PreconditionError);
    o = {};
    o.m_values.clear();
    CHECK_THROWS_AS(admissibility_scan(spec, o), PreconditionError);
    o = {};
    o.refine = 0;
    CHECK_THROWS_AS(admissibility_scan(spec, o), PreconditionError);
}

TEST_CASE("power form: each sample obeys the modulus chain") {
    // |psi| >= |beta| |s|^n - |r|^delta >= conclusion bound.
    for (auto id : {TheoremId::BeanPower, TheoremId::JanowskiPower, TheoremId::LemniscatePower}) {
        for (int delta : {0, 1}) {
            const auto spec = TheoremSpec::at_threshold(id, with(1, delta));
            int violations = 0;
            int samples = 0;
            admissibility_scan(spec, {}, [&](const ScanSample& s) {
                ++samples;
                const double lower = std::abs(spec.op.beta) * std::abs(s.s) - std::pow(std::abs(s.r), delta);
                if (lower < spec.conclusion_bound - 1e-9 || std::abs(s.w) < lower - 1e-9) {
                    ++violations;
                }
            });
            CHECK(samples > 4096 * 5);
            CHECK(violations == 0);
        }
    }
}

TEST_CASE("second-order t follows the boundary relation") {
    const auto spec = TheoremSpec::at_threshold(TheoremId::BeanSecondOrder, with(1, 0));
    int checked = 0;
    admissibility_scan(spec, {}, [&](const ScanSample& s) {
        const double g = g_profile(s.theta);
        CHECK(std::abs(s.t - s.s * (s.m * (1.0 + g) - 1.0)) <= 1e-12 * (1.0 + std::abs(s.t)));
        ++checked;
    });
    CHECK(checked > 0);
}
