#pragma once

#include <functional>

#include "beansub/bean.hpp"
#include "beansub/grid_report.hpp"

namespace beansub {

enum class LemmaKind { BeanRadius, JanowskiRadius, LemniscateRadius };

/// An "outside implies outside" radius lemma: quantity(w) >= required_bound whenever
/// |w| >= claimed_radius.
///   BeanRadius        |log(w^2/(2-w^2))| >= 2   for |w| >= R0 (hypothesis |w| > sqrt 2)
///   JanowskiRadius    |(w-1)/(A-Bw)|     >= 1   for |w| >= (1+A)/(1+B) (hypothesis |w| > 1)
///   LemniscateRadius  |w^2 - 1|          >= 1   for |w| >= sqrt 2 (hypothesis |w| > 1)
class LemmaSpec {
public:
    static LemmaSpec bean();
    static LemmaSpec janowski(double A, double B);
    static LemmaSpec lemniscate();

    LemmaKind kind() const { return kind_; }
    double A() const { return A_; }
    double B() const { return B_; }

    double claimed_radius() const;
    double required_bound() const;
    /// Strict lower bound on |w| assumed by the lemma statement.
    double hypothesis_radius() const;

    /// +infinity at singular points (w^2 = 2 for Bean, A - Bw = 0 for Janowski).
    double quantity(Complex w) const;

    std::string name() const;

private:
    LemmaSpec(LemmaKind kind, double A, double B) : kind_(kind), A_(A), B_(B) {}

    LemmaKind kind_;
    double A_;
    double B_;
};

struct LemmaScanOptions {
    double pass_tol = 1e-9;
};

/// Minimum of spec.quantity over w = radius e^{i phi} on a uniform grid, refined by a
/// golden-section search in the two cells around the coarse argmin.
/// worst_margin is that minimum; pass iff it is >= required_bound - pass_tol.
GridReport verify_radius_lemma(const LemmaSpec& spec, double radius, int grid_size = 4096,
                               LemmaScanOptions options = {});

struct SharpnessOptions {
    int grid_size = 4096;
    int monotonicity_probes = 8;
    LemmaScanOptions scan{};
};

/// Bisection for the point where a verdict switches from fail (at lo) to pass (at hi).
/// `probes` evenly spaced interior points are checked first; a pass followed by a fail
/// raises MonotonicityError.
double bisect_verdict(const std::function<bool(double)>& passes, double lo, double hi, double tol, int probes = 8);

/// Smallest radius in [lo, hi] at which verify_radius_lemma passes, to within tol.
/// Requires a failing verdict at lo and a passing one at hi; throws MonotonicityError
/// if the interior probe radii do not switch from fail to pass exactly once.
double sharpness_bisect(const LemmaSpec& spec, double lo, double hi, double tol, SharpnessOptions options = {});

}  // namespace beansub
