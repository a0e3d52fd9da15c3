#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "glauber/errors.hpp"

namespace glauber {

/**
 * Ferromagnetic couplings J_i >= 0 on the edges [i, i+1 mod n] of an
 * n-cycle, with the hyperbolic values s_i = sinh(2 J_i), c_i = cosh(2 J_i)
 * cached at construction.
 *
 * s_i and c_i overflow to +inf once 2*J_i exceeds ~710.  Routines that must
 * survive that regime (the spectral solver, the asymptotic sweeps) recompute
 * scaled variants from j directly instead of touching the raw cache.
 */
struct CouplingVector {
    int n = 0;
    std::vector<double> j; // J_i, coupling on edge [i, i+1 mod n]
    std::vector<double> s; // sinh(2 J_i)
    std::vector<double> c; // cosh(2 J_i)

    double max_j() const;
    double min_j() const;
    int zero_count() const;        // number of exactly-zero couplings
    bool all_positive() const { return zero_count() == 0; }
};

/// Validates and builds a CouplingVector. Requires length >= 3 and all
/// entries finite and non-negative.
CouplingVector new_couplings(std::span<const double> values);

/**
 * One spin assignment sigma in {-1,+1}^n, kept both as explicit spins and
 * as a dense index into [0, 2^n).  Bit i of the index set <=> spin i = +1.
 */
struct SpinConfiguration {
    int n = 0;
    std::vector<std::int8_t> spins;
    std::uint64_t index = 0;

    static SpinConfiguration from_index(int n, std::uint64_t index);
    static SpinConfiguration from_spins(std::span<const std::int8_t> spins);

    SpinConfiguration flipped(int site) const;
};

/// log of the unnormalized Gibbs weight, sum_i J_i sigma_i sigma_{i+1}.
/// The partition function is never needed anywhere in this library.
double log_gibbs_weight(const SpinConfiguration& config,
                        const CouplingVector& couplings);

/// Heat-bath acceptance probability for flipping `site`:
///   (1 - sigma_x * tanh(J_{x-1} sigma_{x-1} + J_x sigma_{x+1})) / 2.
/// The tanh form equals pi(sigma^x) / (pi(sigma) + pi(sigma^x)) identically
/// and cannot overflow at large couplings.
double flip_probability(const SpinConfiguration& config, int site,
                        const CouplingVector& couplings);

} // namespace glauber
