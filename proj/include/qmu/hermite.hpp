#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmu/hyper.hpp"
#include "qmu/mu.hpp"

namespace qmu {

/// Argument of the continuous q-Hermite family: x = cos(pi w).
struct HermiteArg {
    cplx w;
    cplx q;

    cplx x() const { return std::cos(pi * w); }
};

namespace detail {
/// (q;q)_0 .. (q;q)_n
inline std::vector<cplx> qfactorials(cplx q, long n) {
    std::vector<cplx> f{1.0};
    cplx qj = q;
    for (long j = 1; j <= n; ++j, qj *= q) f.push_back(f.back() * (1.0 - qj));
    return f;
}
}  // namespace detail

/// H_k(cos pi w | q) = sum_l (q)_k / ((q)_l (q)_{k-l}) e^{pi i (k - 2l) w}
inline cplx hermite_cq(long k, const HermiteArg& arg) {
    if (k < 0) throw DomainError("hermite degree must be nonnegative");
    auto f = detail::qfactorials(arg.q, k);
    cplx s = 0.0;
    for (long l = 0; l <= k; ++l)
        s += f[k] / (f[l] * f[k - l]) * std::exp(pi * I * static_cast<double>(k - 2 * l) * arg.w);
    return s;
}

/// mu(u, v; -k), the minus-degree side of the q-Hermite identification.
inline EvalResult mu_negative_degree(long k, cplx u, cplx v, const ModularPoint& tau, const Truncation& t = {}) {
    if (k < 0) throw DomainError("k must be nonnegative");
    return mu_general(u, v, static_cast<double>(-k), tau, t);
}

/// F_{n+1}(cos pi w | q), from the coefficients of (e^{i pi w} r q, e^{-i pi w} r q)_inf.
inline cplx F_capital(long n, const HermiteArg& arg) {
    if (n < 0) throw DomainError("F index must be nonnegative");
    const cplx q = arg.q;
    auto f = detail::qfactorials(q, n);
    auto tri = [](long m) { return m * (m - 1) / 2; };
    cplx s = 0.0;
    for (long k = 0; k <= n; ++k)
        s += ipow(q, tri(k) + tri(n - k)) / (f[k] * f[n - k]) * std::exp(pi * I * static_cast<double>(n - 2 * k) * arg.w);
    return ipow(-q, n) * s;
}

/// F_{n+1} through e^{-pi i n w} 1phi1(q^{-n}; 0; q, e^{2 pi i w} q) (-1)^n q^{n(n+1)/2} / (q)_n.
inline cplx F_capital_phi(long n, const HermiteArg& arg) {
    const cplx q = arg.q;
    EvalResult s = phi({{ipow(q, -n)}, {0.0}, q, e2pi(arg.w) * q});
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return std::exp(-pi * I * static_cast<double>(n) * arg.w) * s.value * sign * ipow(q, n * (n + 1) / 2) /
           qpoch(q, q, n);
}

/// Scale of the coefficient sum behind F_capital, used to judge |F_{n+1}| against rounding.
inline double F_capital_scale(long n, const HermiteArg& arg) {
    const cplx q = arg.q;
    auto f = detail::qfactorials(q, n);
    auto tri = [](long m) { return m * (m - 1) / 2; };
    double s = 0.0;
    for (long k = 0; k <= n; ++k)
        s += std::abs(ipow(q, tri(k) + tri(n - k)) / (f[k] * f[n - k]) *
                      std::exp(pi * I * static_cast<double>(n - 2 * k) * arg.w));
    return std::abs(ipow(q, n)) * s;
}

/// H_n as i q^{1/8} (q)_n / theta11(w) (e^{pi i (1+n) w} 1phi1(q^{1+n};0;q,e^{2 pi i w} q) - (w -> -w)).
inline EvalResult hermite_two_phi(long n, cplx w, const ModularPoint& tau, const Truncation& t = {}) {
    require_off_lattice(w, tau.tau(), "w");
    const cplx q = tau.q();
    cplx b = ipow(q, n + 1);
    EvalResult p1 = phi({{b}, {0.0}, q, e2pi(w) * q}, t);
    EvalResult p2 = phi({{b}, {0.0}, q, e2pi(-w) * q}, t);
    double m = static_cast<double>(1 + n);
    cplx pre = I * tau.qpow(0.125) * qpoch(q, q, n) / theta11(w, tau, t).value;
    cplx v = pre * (std::exp(pi * I * m * w) * p1.value - std::exp(-pi * I * m * w) * p2.value);
    return {v, std::abs(pre) * (p1.err_estimate + p2.err_estimate), p1.terms_used + p2.terms_used};
}

enum class SMethod { Direct, Closed, Appell, MinusDegree };

inline SMethod parse_s_method(const std::string& s) {
    if (s == "direct") return SMethod::Direct;
    if (s == "closed") return SMethod::Closed;
    if (s == "appell") return SMethod::Appell;
    if (s == "minus-degree") return SMethod::MinusDegree;
    throw DomainError("unknown S method '" + s + "'");
}

/// Generating function S(r) = sum_k mu(u, v; k+1) r^k through one of its expressions.
inline EvalResult gen_S(cplx r, cplx u, cplx v, const ModularPoint& tau, const Truncation& t = {},
                        SMethod method = SMethod::Direct) {
    const cplx q = tau.q();
    const cplx w = u - v;
    const cplx ep = std::exp(pi * I * w) * r * q, em = std::exp(-pi * I * w) * r * q;
    switch (method) {
        case SMethod::Direct: {
            cplx rk = 1.0;
            return sum_unilateral(
                [&](long k) {
                    cplx term = mu_general(u, v, static_cast<double>(k + 1), tau, t).value * rk;
                    rk *= r;
                    return term;
                },
                t);
        }
        case SMethod::Closed: {
            EvalResult m = mu_zwegers(u, v, tau, t);
            EvalResult s = phi({{q, ep, em}, {0.0, 0.0}, q, q}, t);
            cplx P = qpoch_inf(ep, q, t).value * qpoch_inf(em, q, t).value;
            cplx c = I * r * tau.qpow(0.875);
            return {P * m.value - c * s.value, std::abs(P) * m.err_estimate + std::abs(c) * s.err_estimate,
                    m.terms_used + s.terms_used};
        }
        case SMethod::Appell: {
            EvalResult m = mu_zwegers(u, v, tau, t);
            EvalResult s = q_appell_phi1(q, 0.0, 0.0, q * q, q, ep, em, t);
            cplx P = qpoch_inf(ep, q, t).value * qpoch_inf(em, q, t).value;
            cplx c = I * r * tau.qpow(0.875) / (1.0 - q);
            return {P * (m.value - c * s.value), std::abs(P) * (m.err_estimate + std::abs(c) * s.err_estimate),
                    m.terms_used + s.terms_used};
        }
        case SMethod::MinusDegree: {
            cplx P = qpoch_inf(ep, q, t).value * qpoch_inf(em, q, t).value;
            cplx c = 1.0;
            EvalResult s = sum_unilateral(
                [&](long m) {
                    if (m > 0) c *= q * r / (1.0 - ipow(q, m));
                    return mu_general(u, v, static_cast<double>(1 - m), tau, t).value * c;
                },
                t);
            return {P * s.value, std::abs(P) * s.err_estimate, s.terms_used};
        }
    }
    return {};
}

/// Quadratic Gauss sum over the full residue system, sum_{k=0}^{2N} e^{2 pi i k^2/(2N+1)}, and the
/// product prod_{j=1}^{N} (e^{i phi_j} - e^{-i phi_j}) with phi_j = 2 pi (2j-1)/(2N+1).
inline std::pair<cplx, cplx> gauss_sum_product(long N) {
    if (N < 1 || N > 500) throw DomainError("gauss_sum_product needs 1 <= N <= 500");
    const double M = static_cast<double>(2 * N + 1);
    cplx s = 0.0;
    for (long k = 0; k <= 2 * N; ++k) {
        // reduce k^2 mod (2N+1) before scaling to keep the phase exact
        long r = (k * k) % (2 * N + 1);
        s += e2pi(static_cast<double>(r) / M);
    }
    cplx p = 1.0;
    for (long j = 1; j <= N; ++j) {
        double ph = 2.0 * pi * static_cast<double>(2 * j - 1) / M;
        p *= std::exp(I * ph) - std::exp(-I * ph);
    }
    return {s, p};
}

}  // namespace qmu
