#pragma once

#include <span>
#include <string>

#include "glauber/spectral.hpp"

namespace glauber {

/**
 * Outcome of one inequality sweep. worst_margin is the minimum over all
 * checked sites/grid points of (bound - value) on the natural scale of the
 * inequality, so any value >= -tolerance means the inequality held
 * everywhere; witness describes where the minimum was attained.
 */
struct InequalityReport {
    std::string name;
    long n_checks = 0;
    double worst_margin = 0.0;
    std::string witness;

    bool passed(double tolerance = 1e-12) const {
        return worst_margin >= -tolerance;
    }
};

/// Low-temperature growth constants: tau2(beta J) ~ D exp(C beta).
struct AsymptoticConstants {
    double c_rate = 0.0;     // C = 2 (J_max + J_min)
    double d_prefactor = 0.0; // D = (1/2) #{i: J_i = J_max} / #{i: J_i = J_min}
    int max_count = 0;
    int min_count = 0;
};

/// Eigenvector ratio bounds (c_i - 1)/s_i <= x_i/x_{i+1} <= (c_i + 1)/s_i,
/// margins evaluated in complement form so they stay exact at strong coupling.
InequalityReport check_ratio_bounds(const CouplingVector& couplings);

/// x_i/x_{i+1} + x_{i+1}/x_i <= 2 c_i / s_i at every edge.
InequalityReport check_ratio_sum(const CouplingVector& couplings);

/// tau2(J + delta e_site) - tau2(J); strictly positive for delta > 0.
double monotonicity_probe(const CouplingVector& couplings, int site, double delta);

/// Same probe on log tau2; usable when tau2 itself overflows.
double monotonicity_probe_log(const CouplingVector& couplings, int site,
                              double delta);

/// Entrywise J_i(t) = (1/2) asinh(exp(2t) sinh(2 J_i)); switches to the
/// logarithmic form of asinh when the argument would overflow.
/// Satisfies J_i(t) <= J_i + t.
CouplingVector coupling_flow(const CouplingVector& couplings, double t);

/// tau*(J(t)) >= exp(2t) tau*(J) on a grid of t >= 0; margin per point is
/// tau*(J(t)) / (exp(2t) tau*(J)) - 1.
InequalityReport check_flow_inequality(const CouplingVector& couplings,
                                       std::span<const double> t_grid);

/// tau*(J + t) >= exp(2t) tau*(J), same margin convention.
InequalityReport check_shift_inequality(const CouplingVector& couplings,
                                        std::span<const double> t_grid);

/// C and D with tolerance-based max/min membership (1e-12 on J comparisons).
AsymptoticConstants asymptotic_constants(const CouplingVector& couplings);

/// tau2(beta J) / (D exp(C beta)), evaluated as exp(log tau2 - C beta - log D)
/// so that beta of several hundred stays representable. Tends to 1 as
/// beta -> infinity.
double asymptotic_ratio(const CouplingVector& couplings, double beta);

} // namespace glauber
