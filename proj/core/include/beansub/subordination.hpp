#pragma once

#include <optional>
#include <span>
#include <vector>

#include "beansub/bean.hpp"
#include "beansub/grid_report.hpp"
#include "beansub/theorem.hpp"

namespace beansub {

/// Value and first three derivatives of a polynomial at one point (Horner).
struct PolynomialJet {
    Complex value;
    Complex d1;
    Complex d2;
    Complex d3;
};

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients, constant term first. Non-finite coefficients are rejected.
    explicit Polynomial(std::vector<Complex> coeffs);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator()(Complex z) const { return jet(z).value; }
    PolynomialJet jet(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

/// f in the normalized class: f(0) = 0, f'(0) = 1, stored as [0, 1, a2, a3, ...].
class NormalizedFunction {
public:
    explicit NormalizedFunction(std::vector<Complex> coeffs);

    const Polynomial& polynomial() const { return poly_; }

private:
    Polynomial poly_;
};

struct RatioValue {
    Complex p;         ///< z f'(z) / f(z)
    Complex zp_prime;  ///< z p'(z) = p (1 + z f''/f' - p)
};

/// p = z f'/f and z p' at z. Returns nullopt when f(z) or f'(z) vanishes (z != 0).
/// At z = 0 the normalization limit p = 1, zp' = 0 is returned.
std::optional<RatioValue> ratio_transform(const NormalizedFunction& f, Complex z);

/// p, z p', z^2 p'' at one point.
struct FunctionJet {
    Complex p;
    Complex zp;
    Complex z2pp;
};

/// Element of the class with p(0) = 1, in one of three concrete representations:
///   polynomial     1 + a1 z + a2 z^2 + ...
///   bean_composed  B(w(z)) for a polynomial Schwarz factor w, w(0) = 0, sum |a_k| <= 1
///   ratio          z f'(z) / f(z) for a normalized polynomial f
class AnalyticFunction {
public:
    enum class Kind { Polynomial, BeanComposed, Ratio };

    static AnalyticFunction polynomial(std::vector<Complex> coeffs);
    static AnalyticFunction bean_composed(std::vector<Complex> inner);
    static AnalyticFunction ratio(NormalizedFunction f);

    Kind kind() const { return kind_; }
    const Polynomial& poly() const { return poly_; }

    /// nullopt when the representation is singular at z (ratio with f(z) = 0 or f'(z) = 0).
    std::optional<FunctionJet> evaluate(Complex z) const;

private:
    AnalyticFunction(Kind kind, Polynomial poly) : kind_(kind), poly_(std::move(poly)) {}

    Kind kind_;
    Polynomial poly_;
};

struct SubordinationOptions {
    double tol = 1e-9;
};

/// Range-containment check of g(z) in `target` on the circles |z| = r, r in radii.
/// worst_margin is the smallest target margin seen; pass iff it exceeds -tol. Singular
/// samples and singular margins count as outside.
GridReport check_subordination(const AnalyticFunction& p, const DomainPredicate& target,
                               std::span<const double> radii, int samples_per_circle,
                               SubordinationOptions options = {});

struct ImplicationReport {
    GridReport premise;     ///< psi(p, zp', z^2 p'') inside the theorem's premise domain
    GridReport conclusion;  ///< p inside the bean
    /// Premise holds but conclusion fails: contradicts the theorem.
    bool counterexample() const { return premise.pass && !conclusion.pass; }
};

/// Builds psi from the function's jet, checks it against the premise domain and checks
/// p against the bean. Throws HypothesisError when spec misses its threshold.
ImplicationReport check_implication(const TheoremSpec& spec, const AnalyticFunction& p,
                                    std::span<const double> radii, int samples_per_circle,
                                    SubordinationOptions options = {});

}  // namespace beansub
