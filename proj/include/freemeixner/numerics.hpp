#pragma once

// Floating-point oracles for the exact layer: Gauss quadrature built from
// the Jacobi matrix, panel integration against a law with atoms, and
// Stieltjes inversion of the Cauchy transform.

#include "freemeixner/meixner.hpp"

#include <functional>
#include <vector>

namespace freemeixner {

struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive, summing to 1

    double integrate(const std::function<double(double)>& f) const;
    int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Gauss rule with up to n nodes: eigenvalues of the leading n x n Jacobi
/// block and squared first eigenvector components. When an off-diagonal
/// entry vanishes (b = -1) the measure has finitely many points and the rule
/// stops at that block. Exact for polynomials of degree <= 2n - 1.
/// Throws NumericError if the eigensolver fails.
QuadratureRule gauss_rule(const MeixnerParams<double>& p, int n);

struct IntegrationResult {
    double value;
    double error_estimate;
    int panels;
};

inline constexpr double kIntegrationTolerance = 1e-10;
inline constexpr int kMaxPanels = 1 << 14;

/// int f dmu over the continuous part (composite Gauss-Legendre in the
/// variable x = a + R cos(theta), starting from `panels` panels and doubling
/// until successive estimates agree to `tolerance`) plus the atom sum.
/// Throws NumericError carrying the best estimate when kMaxPanels is reached.
IntegrationResult integrate_against_law(const MeixnerLaw& law, const std::function<double(double)>& f, int panels = 8,
                                        double tolerance = kIntegrationTolerance);

/// Mass of the absolutely continuous part.
double continuous_mass(const MeixnerLaw& law);

/// -Im G(x + i eps) / pi.
double stieltjes_invert(const MeixnerParams<double>& p, double x, double eps);

}  // namespace freemeixner
