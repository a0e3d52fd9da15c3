#include "glauber/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <cfloat>
#include <sstream>

#include "stable_hyperbolic.hpp"

namespace glauber {

namespace {

// Beyond this total exponent the gap cannot be represented even as a long
// double and the closed-form low-temperature limit takes over.
constexpr long double kDeepAsymptoticExponent = 11000.0L;

int prev_idx(int i, int n) { return i == 0 ? n - 1 : i - 1; }
int next_idx(int i, int n) { return i + 1 == n ? 0 : i + 1; }

// Per-edge hyperbolics scaled by exp(-2 jmax) so that every value sits in
// (0, 1]; in this gauge the matrix entries and the reversibility weights are
// plain ratios with no overflow at any coupling scale.
struct ScaledEdges {
    std::vector<double> s, c, e; // sinh, cosh, exp(-2j), all * exp(-2 jmax)
    double jmax = 0.0;
};

ScaledEdges scaled_edges(std::span<const double> j) {
    ScaledEdges out;
    const int n = static_cast<int>(j.size());
    out.jmax = *std::max_element(j.begin(), j.end());
    out.s.resize(n);
    out.c.resize(n);
    out.e.resize(n);
    for (int i = 0; i < n; ++i) {
        const double up = std::exp(2.0 * (j[i] - out.jmax));
        const double dn = std::exp(-2.0 * (j[i] + out.jmax));
        out.s[i] = 0.5 * (up - dn);
        out.c[i] = 0.5 * (up + dn);
        out.e[i] = dn;
    }
    return out;
}

struct ScaledEdgesL {
    std::vector<long double> s, c, e;
    long double jmax = 0.0L;
};

ScaledEdgesL scaled_edges_l(std::span<const double> j) {
    ScaledEdgesL out;
    const int n = static_cast<int>(j.size());
    out.jmax = *std::max_element(j.begin(), j.end());
    out.s.resize(n);
    out.c.resize(n);
    out.e.resize(n);
    for (int i = 0; i < n; ++i) {
        const long double up = std::exp(2.0L * (j[i] - out.jmax));
        const long double dn = std::exp(-2.0L * (static_cast<long double>(j[i]) + out.jmax));
        out.s[i] = 0.5L * (up - dn);
        out.c[i] = 0.5L * (up + dn);
        out.e[i] = dn;
    }
    return out;
}

// Dense LU solve with partial pivoting, long double, for the (n+1)-sized
// Newton systems. a is row-major and overwritten.
bool lu_solve(std::vector<long double>& a, std::vector<long double>& b, int n) {
    std::vector<int> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    for (int k = 0; k < n; ++k) {
        int p = k;
        long double best = std::fabs(a[piv[k] * n + k]);
        for (int r = k + 1; r < n; ++r) {
            const long double v = std::fabs(a[piv[r] * n + k]);
            if (v > best) { best = v; p = r; }
        }
        if (best == 0.0L) return false;
        std::swap(piv[k], piv[p]);
        const long double pivval = a[piv[k] * n + k];
        for (int r = k + 1; r < n; ++r) {
            const long double f = a[piv[r] * n + k] / pivval;
            a[piv[r] * n + k] = f;
            for (int cix = k + 1; cix < n; ++cix)
                a[piv[r] * n + cix] -= f * a[piv[k] * n + cix];
            b[piv[r]] -= f * b[piv[k]];
        }
    }
    std::vector<long double> x(n);
    for (int k = n - 1; k >= 0; --k) {
        long double acc = b[piv[k]];
        for (int cix = k + 1; cix < n; ++cix) acc -= a[piv[k] * n + cix] * x[cix];
        x[k] = acc / a[piv[k] * n + k];
    }
    b = std::move(x);
    return true;
}

struct PowerResult {
    std::vector<double> x; // positive eigenvector of M, unit norm
    double lambda = 0.0;
    long iterations = 0;
};

// Power iteration on I + S, S = D^{1/2} M D^{-1/2} with D(i,i) = c_{i-1}+c_i.
// S shares the spectrum of M and is symmetric, so the Rayleigh value is
// quadratically accurate in the eigenvector error; the +I shift separates
// 1 + lambda1 in magnitude even when the spectrum of M is symmetric about 0.
PowerResult power_iteration(const CyclicTridiagonal& m, double tol, long max_iter) {
    const int n = m.n;
    const ScaledEdges se = scaled_edges(m.j);
    std::vector<double> q(n), ssub(n), ssup(n);
    for (int i = 0; i < n; ++i) q[i] = se.c[prev_idx(i, n)] + se.c[i];
    for (int i = 0; i < n; ++i) {
        const int im = prev_idx(i, n);
        const int ip = next_idx(i, n);
        ssub[i] = se.s[im] / std::sqrt(q[i] * q[im]);
        ssup[i] = se.s[i] / std::sqrt(q[i] * q[ip]);
    }
    auto apply_s = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (int i = 0; i < n; ++i)
            out[i] = ssub[i] * v[prev_idx(i, n)] + ssup[i] * v[next_idx(i, n)];
    };

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> sv(n), w(n);
    double lambda = 0.0;
    double lambda_old = std::numeric_limits<double>::quiet_NaN();
    long it = 0;
    double res = std::numeric_limits<double>::infinity();
    for (it = 1; it <= max_iter; ++it) {
        apply_s(v, sv);
        lambda = std::inner_product(v.begin(), v.end(), sv.begin(), 0.0);
        double nrm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            w[i] = v[i] + sv[i];
            nrm2 += w[i] * w[i];
        }
        const double nrm = std::sqrt(nrm2);
        for (int i = 0; i < n; ++i) w[i] /= nrm;
        apply_s(w, sv);
        res = 0.0;
        for (int i = 0; i < n; ++i)
            res = std::max(res, std::abs(sv[i] - lambda * w[i]));
        v = w;
        if (std::abs(lambda - lambda_old) < tol && res < tol * std::max(1.0, lambda))
            break;
        lambda_old = lambda;
    }
    if (it > max_iter) {
        std::ostringstream msg;
        msg << "power iteration did not converge in " << max_iter
            << " iterations, last residual " << res;
        raise(Errc::no_convergence, msg.str());
    }

    // Map back to an eigenvector of M and fix the Perron sign.
    std::vector<double> x(n);
    double maxabs = 0.0;
    for (int i = 0; i < n; ++i) {
        x[i] = v[i] / std::sqrt(q[i]);
        maxabs = std::max(maxabs, std::abs(x[i]));
    }
    bool has_pos = false, has_neg = false;
    for (double xi : x) {
        if (xi > 1e-12 * maxabs) has_pos = true;
        if (xi < -1e-12 * maxabs) has_neg = true;
    }
    if (has_pos && has_neg)
        raise(Errc::numerical_failure,
              "converged eigenvector has mixed signs; this contradicts "
              "Perron-Frobenius and indicates a defect");
    if (has_neg)
        for (double& xi : x) xi = -xi;
    double nrm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (double& xi : x) xi /= nrm;
    return {std::move(x), lambda, it};
}

// Gap estimate from the rearranged Rayleigh identity
//   1 - lambda1 = [sum c_i (x_i - x_{i+1})^2 + sum 2 x_i x_{i+1} (c_i - s_i)]
//                 / sum (x_i^2 + x_{i+1}^2) c_i
// in the exp(-2 jmax) gauge. Only trustworthy while the squared eigenvector
// differences sit above double rounding noise; the Newton refinement below
// does not depend on its accuracy, it is just a starting point.
double gap_estimate(std::span<const double> x, const ScaledEdges& se) {
    const int n = static_cast<int>(x.size());
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        const double diff = x[i] - x[ip];
        num += se.c[i] * diff * diff + 2.0 * x[i] * x[ip] * se.e[i];
        den += (x[i] * x[i] + x[ip] * x[ip]) * se.c[i];
    }
    return num / den;
}

struct RatioSolve {
    std::vector<long double> d; // x_{i+1}/x_i - 1
    long double u = 0.0L;       // 1 - lambda1
    bool converged = false;
};

// Newton iteration on the eigensystem written in ratio variables:
//   F_i = s_i d_i - s_{i-1} d_{i-1}/(1+d_{i-1}) + u (c_{i-1}+c_i)
//         - (e_{i-1} + e_i) = 0          (eigen equation divided by x_i)
//   F_n = sum_i log(1+d_i) = 0           (cyclic closure of the ratios)
// with e_i = c_i - s_i = exp(-2 J_i), everything in the exp(-2 jmax) gauge.
// The formulation never subtracts nearly-equal eigenvector entries, so u and
// the d_i come out at full relative precision however small they are.
RatioSolve ratio_newton(std::span<const double> j, std::span<const long double> d0,
                        long double u0) {
    const int n = static_cast<int>(j.size());
    const ScaledEdgesL se = scaled_edges_l(j);
    RatioSolve rs;
    rs.d.assign(d0.begin(), d0.end());
    rs.u = u0;
    const int dim = n + 1;
    std::vector<long double> jac(static_cast<size_t>(dim) * dim);
    std::vector<long double> rhs(dim);
    for (int iter = 0; iter < 100; ++iter) {
        std::fill(jac.begin(), jac.end(), 0.0L);
        for (int i = 0; i < n; ++i) {
            const int im = prev_idx(i, n);
            const long double r_im = 1.0L + rs.d[im];
            rhs[i] = se.s[i] * rs.d[i] - se.s[im] * rs.d[im] / r_im +
                     rs.u * (se.c[im] + se.c[i]) - (se.e[im] + se.e[i]);
            jac[static_cast<size_t>(i) * dim + i] += se.s[i];
            jac[static_cast<size_t>(i) * dim + im] += -se.s[im] / (r_im * r_im);
            jac[static_cast<size_t>(i) * dim + n] = se.c[im] + se.c[i];
        }
        rhs[n] = 0.0L;
        for (int i = 0; i < n; ++i) {
            rhs[n] += std::log1p(rs.d[i]);
            jac[static_cast<size_t>(n) * dim + i] = 1.0L / (1.0L + rs.d[i]);
        }
        if (!lu_solve(jac, rhs, dim)) return rs; // singular; caller falls back

        // Damp to keep u > 0 and every ratio positive.
        long double t = 1.0L;
        for (int tries = 0; tries < 60; ++tries) {
            bool ok = (rs.u - t * rhs[n]) > 0.0L;
            for (int i = 0; ok && i < n; ++i)
                ok = (1.0L + (rs.d[i] - t * rhs[i])) > 0.0L;
            if (ok) break;
            t *= 0.5L;
        }
        for (int i = 0; i < n; ++i) rs.d[i] -= t * rhs[i];
        rs.u -= t * rhs[n];
        if (!(rs.u > 0.0L)) return rs;

        if (t == 1.0L) {
            bool small = std::fabs(rhs[n]) <= 1e-16L * rs.u;
            for (int i = 0; small && i < n; ++i)
                small = std::fabs(rhs[i]) <= 1e-10L * (std::fabs(rs.d[i]) + rs.u) + LDBL_TRUE_MIN;
            if (small) {
                rs.converged = true;
                return rs;
            }
        }
    }
    return rs;
}

struct InternalSolve {
    SpectralResult result;
    std::vector<long double> x_ld;  // empty in the deep-asymptotic branch
    std::vector<long double> d_ld;
    long double u_ld = 0.0L;
    bool deep_asymptotic = false;
};

SpectralResult assemble(const CyclicTridiagonal& m, std::span<const long double> d,
                        long double u, long iterations,
                        std::vector<long double>* x_out) {
    const int n = m.n;
    SpectralResult res;
    std::vector<long double> x(n);
    x[0] = 1.0L;
    for (int i = 0; i + 1 < n; ++i) x[i + 1] = x[i] * (1.0L + d[i]);
    long double nrm2 = 0.0L;
    for (int i = 0; i < n; ++i) nrm2 += x[i] * x[i];
    const long double nrm = std::sqrt(nrm2);
    for (int i = 0; i < n; ++i) x[i] /= nrm;

    res.x.resize(n);
    res.delta.resize(n);
    for (int i = 0; i < n; ++i) {
        res.x[i] = static_cast<double>(x[i]);
        res.delta[i] = static_cast<double>(d[i]);
    }
    res.lambda1 = static_cast<double>(1.0L - u);
    res.gap = static_cast<double>(u);
    res.tau2 = static_cast<double>(1.0L / u);
    res.tau_star = static_cast<double>((1.0L - u) / u);
    res.log_tau2 = static_cast<double>(-std::log(u));
    res.log_tau_star = static_cast<double>(std::log1p(-u) - std::log(u));
    res.iterations = iterations;
    res.residual = 0.0;
    for (int i = 0; i < n; ++i) {
        const double mi = m.sub[i] * res.x[prev_idx(i, n)] +
                          m.sup[i] * res.x[next_idx(i, n)];
        res.residual = std::max(res.residual, std::abs(mi - res.lambda1 * res.x[i]));
    }
    if (x_out) *x_out = std::move(x);
    return res;
}

InternalSolve solve_internal_m(const CyclicTridiagonal& m, double tol, long max_iter) {
    const int n = m.n;
    if (n < 3 || static_cast<int>(m.sub.size()) != n ||
        static_cast<int>(m.sup.size()) != n || static_cast<int>(m.j.size()) != n)
        raise(Errc::invalid_input, "malformed cyclic tridiagonal matrix");
    if (!(tol > 0.0)) raise(Errc::invalid_input, "tolerance must be positive");

    int zeros = 0;
    double jmax = 0.0, jmin = std::numeric_limits<double>::infinity();
    for (double ji : m.j) {
        if (ji == 0.0) ++zeros;
        jmax = std::max(jmax, ji);
        jmin = std::min(jmin, ji);
    }
    if (zeros == n) raise(Errc::zero_matrix, "all couplings are zero");
    if (zeros >= 2)
        raise(Errc::invalid_input,
              "two or more zero couplings disconnect the reduced matrix; the "
              "dominant eigenvector is no longer unique");

    InternalSolve out;

    if (2.0L * (static_cast<long double>(jmax) + jmin) > kDeepAsymptoticExponent) {
        // Gap below extended-precision range. The ratio deviations are then
        // of order exp(-2 jmin); insist they are far below rounding so the
        // first-order closed form is exact to every representable digit.
        if (4.0 * jmin < 150.0)
            raise(Errc::numerical_failure,
                  "relaxation time exceeds the representable range but the "
                  "couplings are not uniformly strong enough for the "
                  "closed-form asymptotic gap");
        std::vector<double> lognum(n), logden(n);
        for (int i = 0; i < n; ++i) {
            lognum[i] = -2.0 * m.j[i];
            logden[i] = detail::log_cosh(2.0 * m.j[i]);
        }
        const double log_gap = detail::log_sum_exp(lognum) - detail::log_sum_exp(logden);
        SpectralResult& r = out.result;
        r.x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        r.delta.assign(n, 0.0);
        r.lambda1 = 1.0;
        r.gap = std::exp(log_gap);
        r.tau2 = std::numeric_limits<double>::infinity();
        r.tau_star = r.tau2;
        r.log_tau2 = -log_gap;
        r.log_tau_star = -log_gap;
        r.iterations = 0;
        r.residual = 0.0;
        for (int i = 0; i < n; ++i)
            r.residual = std::max(r.residual,
                                  std::abs(m.sub[i] + m.sup[i] - 1.0) /
                                      std::sqrt(static_cast<double>(n)));
        out.deep_asymptotic = true;
        return out;
    }

    PowerResult pr = power_iteration(m, tol, max_iter);

    std::vector<long double> d0(n);
    for (int i = 0; i < n; ++i)
        d0[i] = static_cast<long double>(pr.x[next_idx(i, n)]) / pr.x[i] - 1.0L;
    const ScaledEdges se = scaled_edges(m.j);
    double u_est = gap_estimate(pr.x, se);
    long double u0;
    if (std::isfinite(u_est) && u_est > 1e-25) {
        u0 = u_est;
    } else {
        // Rayleigh-identity estimate drowned in rounding noise; seed with the
        // all-ones lower bound sum(c_i - s_i)/sum(c_i), which is also the
        // exact leading-order gap. u enters the system linearly, so the
        // first Newton step corrects it completely.
        const ScaledEdgesL sel = scaled_edges_l(m.j);
        long double esum = 0.0L, csum = 0.0L;
        for (int i = 0; i < n; ++i) { esum += sel.e[i]; csum += sel.c[i]; }
        u0 = esum / csum;
    }

    RatioSolve rs = ratio_newton(m.j, d0, u0);
    if (rs.converged && rs.u > 0.0L && rs.u < 1.0L) {
        out.result = assemble(m, rs.d, rs.u, pr.iterations, &out.x_ld);
        out.d_ld = std::move(rs.d);
        out.u_ld = rs.u;
        return out;
    }

    // Newton refinement failed; at desk scale the power-iteration pair
    // already meets every contract, so fall back to it.
    if (std::isfinite(u_est) && u_est > 1e-18) {
        out.result = assemble(m, d0, static_cast<long double>(u_est),
                              pr.iterations, &out.x_ld);
        out.d_ld = std::move(d0);
        out.u_ld = static_cast<long double>(u_est);
        return out;
    }
    raise(Errc::numerical_failure,
          "ratio-form Newton refinement did not converge and the gap is too "
          "small for the double-precision fallback");
}

InternalSolve solve_internal(const CouplingVector& couplings, double tol,
                             long max_iter) {
    if (couplings.zero_count() == couplings.n) {
        InternalSolve out;
        SpectralResult& r = out.result;
        const int n = couplings.n;
        r.x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
        r.delta.assign(n, 0.0);
        r.lambda1 = 0.0;
        r.gap = 1.0;
        r.tau2 = 1.0;
        r.tau_star = 0.0;
        r.log_tau2 = 0.0;
        r.log_tau_star = -std::numeric_limits<double>::infinity();
        out.u_ld = 1.0L;
        out.d_ld.assign(n, 0.0L);
        out.x_ld.assign(n, 1.0L / std::sqrt(static_cast<long double>(n)));
        return out;
    }
    return solve_internal_m(build_m(couplings), tol, max_iter);
}

} // namespace

std::vector<double> CyclicTridiagonal::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n)
        raise(Errc::dimension_mismatch, "vector length does not match matrix size");
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i)
        y[i] = sub[i] * x[prev_idx(i, n)] + sup[i] * x[next_idx(i, n)];
    return y;
}

CyclicTridiagonal build_m(const CouplingVector& couplings) {
    const int n = couplings.n;
    if (couplings.zero_count() == n)
        raise(Errc::zero_matrix, "all couplings are zero, M vanishes");
    CyclicTridiagonal m;
    m.n = n;
    m.j = couplings.j;
    m.sub.resize(n);
    m.sup.resize(n);
    for (int i = 0; i < n; ++i) {
        const int im = prev_idx(i, n);
        // Everything scaled by exp(-2 max(J_{i-1}, J_i)) before dividing.
        const double mref = std::max(couplings.j[im], couplings.j[i]);
        const double am = std::exp(2.0 * (couplings.j[im] - mref));
        const double bm = std::exp(-2.0 * (couplings.j[im] + mref));
        const double ap = std::exp(2.0 * (couplings.j[i] - mref));
        const double bp = std::exp(-2.0 * (couplings.j[i] + mref));
        const double den = am + bm + ap + bp;
        m.sub[i] = (am - bm) / den;
        m.sup[i] = (ap - bp) / den;
    }
    return m;
}

SpectralResult dominant_pair(const CyclicTridiagonal& m, double tol, long max_iter) {
    return solve_internal_m(m, tol, max_iter).result;
}

SpectralResult solve_relaxation(const CouplingVector& couplings, double tol,
                                long max_iter) {
    return solve_internal(couplings, tol, max_iter).result;
}

double rayleigh(std::span<const double> y, const CouplingVector& couplings) {
    const int n = couplings.n;
    if (static_cast<int>(y.size()) != n)
        raise(Errc::dimension_mismatch, "vector length does not match couplings");
    bool nonzero = false;
    for (double v : y)
        if (v != 0.0) { nonzero = true; break; }
    if (!nonzero) raise(Errc::invalid_input, "Rayleigh quotient of the zero vector");
    const ScaledEdges se = scaled_edges(couplings.j);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        num += 2.0 * y[i] * y[ip] * se.s[i];
        den += (y[i] * y[i] + y[ip] * y[ip]) * se.c[i];
    }
    if (!(den > 0.0))
        raise(Errc::invalid_input, "Rayleigh denominator is not positive");
    return num / den;
}

std::vector<double> lambda_gradient(const CouplingVector& couplings) {
    if (!couplings.all_positive())
        raise(Errc::not_differentiable,
              "lambda1 is differentiable only at strictly positive couplings");
    const int n = couplings.n;
    InternalSolve sol = solve_internal(couplings, 1e-13, 1000000);
    if (sol.deep_asymptotic) {
        std::vector<double> g = lambda_gradient_log(couplings);
        for (double& gi : g) gi = std::exp(gi);
        return g;
    }
    const ScaledEdgesL se = scaled_edges_l(couplings.j);
    const std::vector<long double>& x = sol.x_ld;
    long double den = 0.0L;
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        den += (x[i] * x[i] + x[ip] * x[ip]) * se.c[i];
    }
    const long double lambda = 1.0L - sol.u_ld;
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        const long double diff = x[i] * sol.d_ld[i]; // x_{i+1} - x_i
        const long double bracket = 2.0L * x[i] * x[ip] * (se.e[i] + sol.u_ld * se.s[i]) -
                                    diff * diff * se.s[i] * lambda;
        g[i] = static_cast<double>(2.0L * bracket / den);
    }
    return g;
}

std::vector<double> lambda_gradient_log(const CouplingVector& couplings) {
    if (!couplings.all_positive())
        raise(Errc::not_differentiable,
              "lambda1 is differentiable only at strictly positive couplings");
    const int n = couplings.n;
    InternalSolve sol = solve_internal(couplings, 1e-13, 1000000);
    const SpectralResult& r = sol.result;
    const double jmax = couplings.max_j();
    const double log_u = -r.log_tau2;

    // Everything below carries the common exp(-2 jmax) gauge factor, which
    // cancels between numerator and denominator.
    std::vector<double> log_x(n);
    if (sol.deep_asymptotic) {
        std::fill(log_x.begin(), log_x.end(),
                  -0.5 * std::log(static_cast<double>(n)));
    } else {
        for (int i = 0; i < n; ++i) log_x[i] = static_cast<double>(std::log(sol.x_ld[i]));
    }
    std::vector<double> den_terms(n);
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        const double x2 =
            std::exp(2.0 * log_x[i]) + std::exp(2.0 * log_x[ip]);
        den_terms[i] = std::log(x2) + detail::log_cosh(2.0 * couplings.j[i]) -
                       2.0 * jmax;
    }
    const double log_den = detail::log_sum_exp(den_terms);

    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        const int ip = next_idx(i, n);
        const double log_s = detail::log_sinh(2.0 * couplings.j[i]) - 2.0 * jmax;
        const double log_e = -2.0 * (couplings.j[i] + jmax);
        // A = 2 x_i x_{i+1} (e_i + u s_i); B = (x_i d_i)^2 s_i lambda.
        const double log_a = detail::kLn2 + log_x[i] + log_x[ip] +
                             detail::log_sum_exp(log_e, log_u + log_s);
        double ratio_ba = 0.0;
        if (!sol.deep_asymptotic && sol.d_ld[i] != 0.0L) {
            const double log_b = 2.0 * (log_x[i] +
                                        static_cast<double>(std::log(std::fabs(sol.d_ld[i])))) +
                                 log_s + static_cast<double>(std::log1p(-sol.u_ld));
            ratio_ba = std::exp(log_b - log_a);
        }
        if (ratio_ba >= 1.0)
            raise(Errc::numerical_failure,
                  "gradient component lost positivity; this contradicts the "
                  "monotonicity of the dominant eigenvalue");
        g[i] = detail::kLn2 + log_a + std::log1p(-ratio_ba) - log_den;
    }
    return g;
}

} // namespace glauber
