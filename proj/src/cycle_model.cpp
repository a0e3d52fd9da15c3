#include "glauber/cycle_model.hpp"

#include <algorithm>
#include <cmath>

namespace glauber {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_size: return "InvalidSize";
        case Errc::invalid_coupling: return "InvalidCoupling";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::zero_matrix: return "ZeroMatrix";
        case Errc::no_convergence: return "NoConvergence";
        case Errc::invalid_input: return "InvalidInput";
        case Errc::not_differentiable: return "NotDifferentiableHere";
        case Errc::requires_positive_couplings: return "RequiresPositiveCouplings";
        case Errc::too_large: return "TooLarge";
        case Errc::numerical_failure: return "NumericalFailure";
        case Errc::closure_violation: return "ClosureViolation";
        case Errc::insufficient_data: return "InsufficientData";
    }
    return "UnknownError";
}

double CouplingVector::max_j() const {
    return *std::max_element(j.begin(), j.end());
}

double CouplingVector::min_j() const {
    return *std::min_element(j.begin(), j.end());
}

int CouplingVector::zero_count() const {
    return static_cast<int>(std::count(j.begin(), j.end(), 0.0));
}

CouplingVector new_couplings(std::span<const double> values) {
    if (values.size() < 3)
        raise(Errc::invalid_size, "need at least 3 couplings, got " +
                                      std::to_string(values.size()));
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0)
            raise(Errc::invalid_coupling,
                  "couplings must be finite and >= 0, got " + std::to_string(v));
    }
    CouplingVector out;
    out.n = static_cast<int>(values.size());
    out.j.assign(values.begin(), values.end());
    out.s.resize(out.n);
    out.c.resize(out.n);
    for (int i = 0; i < out.n; ++i) {
        out.s[i] = std::sinh(2.0 * out.j[i]);
        out.c[i] = std::cosh(2.0 * out.j[i]);
    }
    return out;
}

SpinConfiguration SpinConfiguration::from_index(int n, std::uint64_t index) {
    if (n < 1 || n > 63)
        raise(Errc::invalid_size, "spin count out of range: " + std::to_string(n));
    if (index >> n)
        raise(Errc::index_out_of_range,
              "configuration index " + std::to_string(index) +
                  " does not fit " + std::to_string(n) + " spins");
    SpinConfiguration out;
    out.n = n;
    out.index = index;
    out.spins.resize(n);
    for (int i = 0; i < n; ++i)
        out.spins[i] = (index >> i) & 1 ? 1 : -1;
    return out;
}

SpinConfiguration SpinConfiguration::from_spins(std::span<const std::int8_t> spins) {
    if (spins.size() < 1 || spins.size() > 63)
        raise(Errc::invalid_size,
              "spin count out of range: " + std::to_string(spins.size()));
    SpinConfiguration out;
    out.n = static_cast<int>(spins.size());
    out.spins.assign(spins.begin(), spins.end());
    out.index = 0;
    for (int i = 0; i < out.n; ++i) {
        if (spins[i] != 1 && spins[i] != -1)
            raise(Errc::invalid_input, "spins must be -1 or +1");
        if (spins[i] == 1) out.index |= std::uint64_t(1) << i;
    }
    return out;
}

SpinConfiguration SpinConfiguration::flipped(int site) const {
    if (site < 0 || site >= n)
        raise(Errc::index_out_of_range, "site " + std::to_string(site));
    SpinConfiguration out = *this;
    out.spins[site] = static_cast<std::int8_t>(-out.spins[site]);
    out.index ^= std::uint64_t(1) << site;
    return out;
}

double log_gibbs_weight(const SpinConfiguration& config,
                        const CouplingVector& couplings) {
    if (config.n != couplings.n)
        raise(Errc::dimension_mismatch,
              "configuration has " + std::to_string(config.n) + " spins, couplings " +
                  std::to_string(couplings.n));
    double acc = 0.0;
    for (int i = 0; i < config.n; ++i) {
        int ip = (i + 1 == config.n) ? 0 : i + 1;
        acc += couplings.j[i] * config.spins[i] * config.spins[ip];
    }
    return acc;
}

double flip_probability(const SpinConfiguration& config, int site,
                        const CouplingVector& couplings) {
    if (config.n != couplings.n)
        raise(Errc::dimension_mismatch, "configuration/couplings size mismatch");
    const int n = config.n;
    if (site < 0 || site >= n)
        raise(Errc::index_out_of_range, "site " + std::to_string(site));
    const int im = (site == 0) ? n - 1 : site - 1;
    const int ip = (site + 1 == n) ? 0 : site + 1;
    const double field = couplings.j[im] * config.spins[im] +
                         couplings.j[site] * config.spins[ip];
    return 0.5 * (1.0 - config.spins[site] * std::tanh(field));
}

} // namespace glauber
