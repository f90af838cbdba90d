#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "beansub/bean.hpp"
#include "beansub/grid_report.hpp"

namespace beansub {

/// The differential operators psi(r, s, t):
///   Power        r^delta + beta s^n
///   Quotient     r^delta + beta s / r^n
///   Mobius       r + s / (beta r + gamma)
///   SecondOrder  r^delta + gamma s + beta t
enum class OperatorForm { Power, Quotient, Mobius, SecondOrder };

struct OperatorSpec {
    OperatorForm form = OperatorForm::Power;
    int delta = 0;
    int n = 1;
    Complex beta{1.0, 0.0};
    Complex gamma{0.0, 0.0};

    Complex evaluate(Complex r, Complex s, Complex t = {}) const;
};

/// The twelve implications "psi(p, zp', z^2 p'') < h  =>  p < B", one per
/// (operator form, target h) pair.
enum class TheoremId {
    BeanPower,
    BeanQuotient,
    BeanMobius,
    BeanSecondOrder,
    JanowskiPower,
    JanowskiQuotient,
    JanowskiMobius,
    JanowskiSecondOrder,
    LemniscatePower,
    LemniscateQuotient,
    LemniscateMobius,
    LemniscateSecondOrder,
};

std::span<const TheoremId> all_theorems();
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
OperatorForm operator_form(TheoremId id);
DomainKind target_kind(TheoremId id);

struct TheoremParams {
    int n = 1;
    int delta = 0;
    double A = 1.0;  ///< Janowski targets only
    double B = 0.0;
};

/// What the threshold constrains, per operator form.
enum class ThresholdSense {
    MinModulus,       ///< |beta| >= threshold                       (Power, Quotient)
    MaxWeightedSum,   ///< |beta| omega_max + |gamma| <= threshold    (Mobius)
    MinCombination,   ///< gamma + beta g_min >= threshold, real beta, gamma > 0 (SecondOrder)
};

ThresholdSense threshold_sense(OperatorForm form);

/// Closed-form threshold of a theorem. omega_max is the computed maximum of |B| on the
/// circle. Throws PreconditionError on invalid params and UnsupportedParameters when the
/// quotient form's chi_n floor fails for the requested n.
double threshold(TheoremId id, const TheoremParams& params);

struct TheoremSpec {
    TheoremId id;
    TheoremParams params;
    OperatorSpec op;
    DomainPredicate premise;
    double conclusion_bound;  ///< exclusion radius of the premise domain
    double threshold;

    /// Spec with explicit coefficients. Validates params and the form's coefficient
    /// restrictions; does not check the threshold (see hypothesis_met).
    static TheoremSpec make(TheoremId id, TheoremParams params, Complex beta, Complex gamma = {});

    /// Spec with real positive coefficients placed on the threshold. slack > 1 moves the
    /// coefficients strictly inside the hypothesis region, slack < 1 outside it.
    static TheoremSpec at_threshold(TheoremId id, TheoremParams params, double slack = 1.0);

    /// |beta|, |beta| omega_max + |gamma|, or gamma + beta g_min, depending on the form.
    double hypothesis_value() const;
    bool hypothesis_met(double rel_tol = 1e-12) const;
};

struct ScanSample {
    double theta;
    double m;
    Complex r;
    Complex s;
    Complex t;
    Complex w;  ///< psi(r, s, t)
    Margin margin;
};

struct ScanOptions {
    int theta_grid = 4096;
    std::vector<double> m_values{1.0, 1.5, 2.0, 5.0, 10.0};
    int refine = 16;
    bool probe = false;
    double membership_tol = 1e-9;
};

/// Checks the admissibility condition psi(r, s, t) outside the premise domain on the
/// boundary data r = B(zeta), s = m zeta B'(zeta) and, for second order,
/// t = s (m (1 + g(theta)) - 1). worst_margin is the largest premise margin seen,
/// witness_image the psi value there; pass iff worst_margin <= membership_tol.
/// Throws HypothesisError when the coefficients miss the threshold, unless probing.
GridReport admissibility_scan(const TheoremSpec& spec, const ScanOptions& options = {},
                              const std::function<void(const ScanSample&)>& observer = {});

}  // namespace beansub
