#pragma once

#include <cmath>

#include "qmu/hermite.hpp"
#include "qmu/mu.hpp"

namespace qmu {

/// E(x) = 2 int_0^x e^{-pi z^2} dz
inline double E_func(double x) { return std::erf(std::sqrt(pi) * x); }

/// t = Im tau and a = Im u / Im tau for the completion R(u; tau).
struct CompletionContext {
    cplx u;
    ModularPoint tau;
    double t;
    double a_ratio;

    CompletionContext(cplx u_, const ModularPoint& tau_)
        : u(u_), tau(tau_), t(tau_.tau().imag()), a_ratio(u_.imag() / tau_.tau().imag()) {}

    /// Term of R at nu = m + 1/2. sgn(nu) - E(y) is written as sgn(nu) erfc(sgn(nu) sqrt(pi) y).
    cplx term(long m) const {
        const double nu = static_cast<double>(m) + 0.5;
        const double sg = nu > 0 ? 1.0 : -1.0;
        const double c = std::erfc(sg * std::sqrt(pi) * (nu + a_ratio) * std::sqrt(2.0 * t));
        if (c == 0.0) return 0.0;
        cplx ex = -pi * I * nu * nu * tau.tau() - 2.0 * pi * I * nu * u;
        return (m % 2 == 0 ? 1.0 : -1.0) * sg * std::exp(std::log(c) + ex);
    }
};

/// R(u; tau) = sum_{nu in Z+1/2} {sgn(nu) - E((nu + a) sqrt(2t))} (-1)^{nu-1/2} e^{-pi i nu^2 tau - 2 pi i nu u}
inline EvalResult R_func(cplx u, const ModularPoint& tau, const Truncation& t = {}) {
    CompletionContext c(u, tau);
    return sum_bilateral([&](long m) { return c.term(m); }, t);
}

/// R summed over the fixed window nu = -N + 1/2 .. N - 1/2.
inline cplx R_window(cplx u, const ModularPoint& tau, long N) {
    CompletionContext c(u, tau);
    cplx s = 0.0;
    for (long m = -N; m < N; ++m) s += c.term(m);
    return s;
}

/// mu~(u, v; tau) = mu(u, v; tau) + (i/2) R(u - v; tau)
inline EvalResult mu_tilde(cplx u, cplx v, const ModularPoint& tau, const Truncation& t = {}) {
    EvalResult m = mu_zwegers(u, v, tau, t);
    EvalResult r = R_func(u - v, tau, t);
    return {m.value + 0.5 * I * r.value, m.err_estimate + 0.5 * r.err_estimate, m.terms_used + r.terms_used};
}

namespace detail {

struct NuParts {
    cplx mu_over_F;
    cplx R;
    cplx S;  // sum_{l=1}^k q^l/(q)_l F_{k-l+1}/F_{k+1} H_{l-1}
    double err;
    int terms;
};

inline NuParts nu_parts(cplx u, cplx v, long k, const ModularPoint& tau, const Truncation& t) {
    if (k < 1) throw DomainError("nu_tilde needs k >= 1");
    const cplx q = tau.q();
    const HermiteArg arg{u - v, q};
    cplx F = F_capital(k, arg);
    if (std::abs(F) < pole_threshold * F_capital_scale(k, arg)) throw PoleHit("F_{k+1}(cos pi (u-v)) within 1e-6 of 0");
    auto fact = detail::qfactorials(q, k);
    cplx S = 0.0;
    for (long l = 1; l <= k; ++l) S += ipow(q, l) / fact[l] * F_capital(k - l, arg) / F * hermite_cq(l - 1, arg);
    EvalResult m = mu_general(u, v, static_cast<double>(k + 1), tau, t);
    EvalResult r = R_func(u - v, tau, t);
    return {m.value / F, r.value, S, m.err_estimate / std::abs(F) + 0.5 * r.err_estimate, m.terms_used + r.terms_used};
}

}  // namespace detail

/// R_{k+1}(w; tau) = R(w; tau) + 2 q^{-1/8} sum_{l=1}^k q^l/(q)_l F_{k-l+1}/F_{k+1} H_{l-1}
inline EvalResult R_k1(cplx u, cplx v, long k, const ModularPoint& tau, const Truncation& t = {}) {
    auto p = detail::nu_parts(u, v, k, tau, t);
    return {p.R + 2.0 * tau.qpow(-0.125) * p.S, p.err, p.terms};
}

/// nu~(u, v; k; tau) = mu(u, v; k+1)/F_{k+1}(cos pi (u-v) | q) + (i/2) R_{k+1}(u - v; tau)
inline EvalResult nu_tilde(cplx u, cplx v, long k, const ModularPoint& tau, const Truncation& t = {}) {
    auto p = detail::nu_parts(u, v, k, tau, t);
    cplx Rk = p.R + 2.0 * tau.qpow(-0.125) * p.S;
    return {p.mu_over_F + 0.5 * I * Rk, p.err, p.terms};
}

/// The variant mu(u, v; k+1)/F_{k+1} + (1/2i)(R - 2 q^{-1/8} sum ...); equals mu - (i/2) R.
inline EvalResult nu_tilde_variant(cplx u, cplx v, long k, const ModularPoint& tau, const Truncation& t = {}) {
    auto p = detail::nu_parts(u, v, k, tau, t);
    cplx Rk = p.R - 2.0 * tau.qpow(-0.125) * p.S;
    return {p.mu_over_F + Rk / (2.0 * I), p.err, p.terms};
}

/// Multiplier of the S-transformation: f(u/tau, v/tau; -1/tau) = s_multiplier * f(u, v; tau).
inline cplx s_multiplier(cplx u, cplx v, cplx tau) {
    return -std::sqrt(-I * tau) * std::exp(-pi * I * (u - v) * (u - v) / tau);
}

/// The multiplier -i sqrt(-i tau) e^{pi i (u-v)^2/tau}; fails numerically.
inline cplx s_multiplier_variant(cplx u, cplx v, cplx tau) {
    return -I * std::sqrt(-I * tau) * std::exp(pi * I * (u - v) * (u - v) / tau);
}

}  // namespace qmu
