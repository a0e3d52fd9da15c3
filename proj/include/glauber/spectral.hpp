#pragma once

#include <span>
#include <vector>

#include "glauber/cycle_model.hpp"

namespace glauber {

/**
 * The n x n reduction M of the dynamics to linear spin functions: zero
 * diagonal, cyclically wrapped sub/super diagonals
 *
 *   M(i, i-1) = s_{i-1} / (c_{i-1} + c_i),   M(i, i+1) = s_i / (c_{i-1} + c_i)
 *
 * Every entry lies in [0, 1) at any coupling scale, so the matrix itself is
 * always representable; entries are evaluated with numerator and denominator
 * pre-scaled by exp(-2 max(J_{i-1}, J_i)) to avoid overflow on the way.
 *
 * The source couplings are retained so the eigensolver can rebuild
 * extended-precision scaled hyperbolics.
 */
struct CyclicTridiagonal {
    int n = 0;
    std::vector<double> sub; // sub[i] = M(i, i-1)
    std::vector<double> sup; // sup[i] = M(i, i+1)
    std::vector<double> j;   // source couplings

    std::vector<double> apply(std::span<const double> x) const;
};

/**
 * Dominant eigenpair of M together with the relaxation times derived from it.
 *
 * tau2 = 1/(1 - lambda1) and tau_star = tau2 - 1 are also provided in log
 * form: at strong coupling the gap 1 - lambda1 underflows any native float,
 * while log_tau2 stays finite and fully accurate.  `gap` holds the directly
 * solved 1 - lambda1, which is far more precise than recovering it from the
 * rounded lambda1 once lambda1 approaches 1.
 *
 * delta[i] = x_{i+1}/x_i - 1 carries the eigenvector shape at solver
 * accuracy; near the low-temperature limit the entries of x agree to within
 * less than a double ulp and only the ratios remain informative.
 */
struct SpectralResult {
    double lambda1 = 0.0;
    std::vector<double> x;      // positive dominant eigenvector, unit 2-norm
    double tau2 = 1.0;          // 1/(1 - lambda1); +inf once the gap underflows
    double tau_star = 0.0;      // tau2 - 1
    long iterations = 0;        // power-iteration count
    double residual = 0.0;      // max_i |(M x)_i - lambda1 x_i|
    double gap = 1.0;           // 1 - lambda1
    double log_tau2 = 0.0;      // -log(gap)
    double log_tau_star = 0.0;  // log(lambda1) - log(gap)
    std::vector<double> delta;  // x_{i+1}/x_i - 1
};

/// Builds M. Requires at least one positive coupling (all-zero couplings give
/// the zero matrix, reported as Errc::zero_matrix for the caller to handle).
CyclicTridiagonal build_m(const CouplingVector& couplings);

/**
 * Dominant eigenpair of M.
 *
 * Power iteration on I + S, where S = D^{1/2} M D^{-1/2} with
 * D(i,i) = c_{i-1} + c_i is symmetric with the spectrum of M; the shift makes
 * 1 + lambda1 strictly dominant in magnitude.  The converged pair is then
 * refined by a Newton solve of the eigensystem in ratio form
 * (unknowns x_{i+1}/x_i - 1 and 1 - lambda1) in extended precision, which
 * keeps the gap accurate to full relative precision down to ~1e-4900.  Below
 * that the gap equals sum(c_i - s_i)/sum(c_i) to more digits than a float
 * holds and is taken from that closed form in log arithmetic.
 */
SpectralResult dominant_pair(const CyclicTridiagonal& m, double tol = 1e-13,
                             long max_iter = 1000000);

/// build_m + dominant_pair, with the all-zero-coupling case mapped to the
/// exact answer lambda1 = 0, tau2 = 1.
SpectralResult solve_relaxation(const CouplingVector& couplings,
                                double tol = 1e-13, long max_iter = 1000000);

/// Rayleigh quotient h(y, J) = sum 2 y_i y_{i+1} s_i / sum (y_i^2 + y_{i+1}^2) c_i.
/// h(y, J) <= lambda1 for every y, with equality at the dominant eigenvector.
double rayleigh(std::span<const double> y, const CouplingVector& couplings);

/**
 * Closed-form gradient of lambda1:
 *
 *   d lambda1 / d J_i
 *     = 2 (2 x_i x_{i+1} c_i - (x_i^2 + x_{i+1}^2) s_i lambda1)
 *       / sum_k (x_k^2 + x_{k+1}^2) c_k
 *
 * evaluated in the cancellation-free arrangement
 * 2 x x' ((c_i - s_i) + (1-lambda1) s_i) - (x_i - x_{i+1})^2 s_i lambda1.
 * Every component is strictly positive for strictly positive couplings.
 */
std::vector<double> lambda_gradient(const CouplingVector& couplings);

/// log of each gradient component; finite where the linear-domain component
/// would underflow (strong couplings).
std::vector<double> lambda_gradient_log(const CouplingVector& couplings);

} // namespace glauber
