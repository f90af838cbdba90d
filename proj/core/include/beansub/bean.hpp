#pragma once

#include <complex>
#include <string>
#include <vector>

namespace beansub {

using Complex = std::complex<double>;

/// B(z) = sqrt(1 + tanh z) = sqrt(2 / (1 + e^{-2z})), principal branch.
/// Defined on the closed unit disk; throws DomainError for |z| > 1 + radius_slack
/// or non-finite input.
Complex bean_value(Complex z, double radius_slack = 1e-9);

/// B'(z) = sqrt(2) e^{-2z} / (1 + e^{-2z})^{3/2}.
Complex bean_derivative(Complex z, double radius_slack = 1e-9);

/// B''(z) = -sqrt(2) e^{-2z} (2 - e^{-2z}) / (1 + e^{-2z})^{5/2}.
Complex bean_second_derivative(Complex z, double radius_slack = 1e-9);

/// zeta * B'(zeta) for |zeta| = 1 (within unit_tol).
Complex bean_tangent(Complex zeta, double unit_tol = 1e-12);

/// B(e^{i t_k}) for t_k = 2 pi k / num_points, k = 0..num_points-1. Requires num_points >= 3.
std::vector<Complex> bean_image_boundary(int num_points);

/// Signed distance-like margin of a point against a region. Positive means inside,
/// zero is the boundary, and a singular margin means the defining expression blows
/// up (always outside).
class Margin {
public:
    static Margin finite(double value) { return Margin(value, false); }
    static Margin singular();

    bool is_singular() const { return singular_; }
    /// -infinity when singular.
    double value() const { return value_; }

    bool inside(double tol = 0.0) const { return !singular_ && value_ > tol; }
    bool outside(double tol = 0.0) const { return singular_ || value_ < -tol; }

private:
    Margin(double value, bool singular) : value_(value), singular_(singular) {}

    double value_;
    bool singular_;
};

enum class DomainKind { Bean, Janowski, Lemniscate };

/// One of the three univalent target regions, all centred at h(0) = 1:
///   Bean       |log(w^2 / (2 - w^2))| < 2, restricted to Re w > 0
///   Janowski   |(w - 1) / (A - B w)| < 1,  -1 < B <= 0 < A <= 1
///   Lemniscate |w^2 - 1| < 1
class DomainPredicate {
public:
    static DomainPredicate bean();
    static DomainPredicate janowski(double A, double B);
    static DomainPredicate lemniscate();

    DomainKind kind() const { return kind_; }
    double A() const { return A_; }
    double B() const { return B_; }

    Margin margin(Complex w) const;

    /// Radius beyond which every point is outside, by the matching radius lemma:
    /// R0, (1+A)/(1+B) or sqrt(2).
    double exclusion_radius() const;

    std::string name() const;

private:
    DomainPredicate(DomainKind kind, double A, double B) : kind_(kind), A_(A), B_(B) {}

    DomainKind kind_;
    double A_;
    double B_;
};

/// Throws PreconditionError unless -1 < B <= 0 < A <= 1.
void require_janowski_box(double A, double B);

}  // namespace beansub
