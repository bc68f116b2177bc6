#pragma once

#include <string>

#include "qmu/core.hpp"
#include "qmu/hyper.hpp"

namespace qmu {

/// Point (u, v, alpha, tau) of the generalized mu-function. x = e^{2 pi i u}, y = e^{2 pi i v}, a = q^alpha.
struct MuPoint {
    cplx u;
    cplx v;
    cplx alpha;
    ModularPoint tau;

    void validate() const {
        require_off_lattice(u - alpha * tau.tau(), tau.tau(), "u - alpha tau");
        require_off_lattice(v, tau.tau(), "v");
    }

    cplx x() const { return e2pi(u); }
    cplx y() const { return e2pi(v); }
    cplx a() const { return tau.qpow(alpha); }
};

/// Zwegers' mu(u, v; tau).
inline EvalResult mu_zwegers(cplx u, cplx v, const ModularPoint& tau, const Truncation& t = {}) {
    require_off_lattice(u, tau.tau(), "u");
    require_off_lattice(v, tau.tau(), "v");
    const cplx tt = tau.tau();
    auto term = [&](long n) {
        double nd = static_cast<double>(n);
        cplx num = e2pi(nd * v + 0.5 * nd * (nd + 1.0) * tt);
        cplx den = 1.0 - e2pi(u + nd * tt);
        return (n % 2 == 0 ? 1.0 : -1.0) * num / den;
    };
    EvalResult s = sum_bilateral(term, t);
    EvalResult th = theta11(v, tau, t);
    cplx pre = std::exp(pi * I * u) / th.value;
    return {pre * s.value, std::abs(pre) * s.err_estimate, s.terms_used + th.terms_used};
}

namespace detail {

/// Returns k when alpha is (numerically) the integer k.
inline std::optional<long> integer_alpha(cplx alpha) {
    double k = std::round(alpha.real());
    if (std::abs(alpha - k) < 1e-12) return static_cast<long>(k);
    return std::nullopt;
}

/// R_n = (x q^{n+1})_inf / (x q^{n+1-alpha})_inf with additive exponents.
inline cplx mu_ratio(long n, cplx u, cplx alpha, const ModularPoint& tau, const Truncation& t) {
    const cplx tt = tau.tau();
    const cplx q = tau.q();
    const double nd = static_cast<double>(n);
    if (auto k = integer_alpha(alpha)) {
        // finite forms: k > 0 gives 1/(x q^{n+1-k})_k, k < 0 gives (x q^{n+1})_{-k}
        cplx p = 1.0;
        if (*k > 0) {
            cplx z = e2pi(u + (nd + 1.0 - static_cast<double>(*k)) * tt);
            for (long j = 0; j < *k; ++j, z *= q) {
                cplx d = 1.0 - z;
                if (std::abs(d) < 1e-14) throw PoleHit("u - alpha tau within 1e-6 of Z+Z tau");
                p /= d;
            }
        } else if (*k < 0) {
            cplx z = e2pi(u + (nd + 1.0) * tt);
            for (long j = 0; j < -*k; ++j, z *= q) p *= 1.0 - z;
        }
        return p;
    }
    cplx A = e2pi(u + (nd + 1.0) * tt);
    cplx B = e2pi(u + (nd + 1.0 - alpha) * tt);
    cplx p = 1.0;
    int below = 0;
    for (int j = 0; j < t.max_terms; ++j, A *= q, B *= q) {
        cplx d = 1.0 - B;
        if (std::abs(d) < 1e-14) throw PoleHit("u - alpha tau within 1e-6 of Z+Z tau");
        p *= (1.0 - A) / d;
        if (std::abs(A) < t.rel_tol && std::abs(B) < t.rel_tol) {
            if (++below >= t.settle_count) return p;
        } else {
            below = 0;
        }
    }
    throw BudgetExceeded("mu: Pochhammer quotient did not settle");
}

}  // namespace detail

/// Generalized mu(u, v; alpha).
inline EvalResult mu_general(const MuPoint& p, const Truncation& t = {}) {
    p.validate();
    const cplx tt = p.tau.tau();
    const auto k = detail::integer_alpha(p.alpha);
    auto term = [&](long n) {
        double nd = static_cast<double>(n);
        cplx e = (nd + 0.5) * p.v + 0.5 * nd * (nd + 1.0) * tt;
        double sign = n % 2 == 0 ? 1.0 : -1.0;
        if (k && *k < 0) {
            // (x q^{n+1})_{-k} with the large factors z folded into the exponent, so the
            // product and the Gaussian weight do not overflow and underflow separately
            cplx f = 1.0;
            for (long j = 0; j < -*k; ++j) {
                cplx ez = p.u + (nd + 1.0 + static_cast<double>(j)) * tt;
                cplx z = e2pi(ez);
                if (std::abs(z) > 1.0) {
                    e += ez;
                    sign = -sign;
                    f *= 1.0 - 1.0 / z;
                } else {
                    f *= 1.0 - z;
                }
            }
            return sign * e2pi(e) * f;
        }
        return sign * e2pi(e) * detail::mu_ratio(n, p.u, p.alpha, p.tau, t);
    };
    EvalResult s = sum_bilateral(term, t);
    EvalResult th = theta11(p.v, p.tau, t);
    cplx pre = std::exp(pi * I * p.alpha * (p.u - p.v)) / th.value;
    return {pre * s.value, std::abs(pre) * s.err_estimate, s.terms_used + th.terms_used};
}

inline EvalResult mu_general(cplx u, cplx v, cplx alpha, const ModularPoint& tau, const Truncation& t = {}) {
    return mu_general(MuPoint{u, v, alpha, tau}, t);
}

enum class MuForm { Def, Alt1, Alt2, Alt3 };

inline MuForm parse_mu_form(const std::string& s) {
    if (s == "def") return MuForm::Def;
    if (s == "alt1") return MuForm::Alt1;
    if (s == "alt2") return MuForm::Alt2;
    if (s == "alt3") return MuForm::Alt3;
    throw DomainError("unknown mu form '" + s + "'");
}

/// mu(u, v; alpha) through one of its bilateral expressions in x, y, a.
inline EvalResult mu_general_expr(const MuPoint& p, MuForm form, const Truncation& t = {}) {
    p.validate();
    const cplx q = p.tau.q();
    const cplx x = p.x(), y = p.y(), a = p.a();
    const cplx pre = -I * p.tau.qpow(-0.125) * std::exp(pi * I * p.alpha * (p.u - p.v));
    auto P = [&](cplx z) { return qpoch_inf(z, q, t).value; };
    auto th = [&](cplx z) { return theta_q(z, q, t).value; };
    EvalResult s;
    cplx f;
    switch (form) {
        case MuForm::Def:
            s = psi({{x / a}, {0.0, x}, q, y}, t);
            f = pre / th(-y) * P(x) / P(x / a);
            break;
        case MuForm::Alt1:
            s = psi({{y / a}, {0.0, y}, q, x}, t);
            f = pre / th(-x / a) * P(a * q / y) / P(q / y);
            break;
        case MuForm::Alt2:
            s = psi({{x / a, y / a}, {0.0, 0.0}, q, a}, t);
            f = pre * P(a) * P(q) * P(a * q / x) * P(a * q / y) / (th(-y) * th(-x / a));
            break;
        case MuForm::Alt3:
            if (lattice_distance(p.u, p.tau.tau()) < pole_threshold) throw PoleHit("u within 1e-6 of Z+Z tau");
            s = psi({{}, {x, y}, q, x * y / a}, t);
            f = pre * P(a) * P(q) * P(x) * P(y) / (th(-y) * th(-x / a));
            break;
    }
    return {f * s.value, std::abs(f) * s.err_estimate, s.terms_used};
}

/// Phi(u, v; alpha) = theta(v - alpha tau) theta(u) / (theta(u - alpha tau) theta(v)) e^{2 pi i alpha (u - v)}.
inline cplx phi_factor(const MuPoint& p, const Truncation& t = {}) {
    const cplx tt = p.tau.tau();
    const cplx at = p.alpha * tt;
    require_off_lattice(p.u, tt, "u");
    require_off_lattice(p.v, tt, "v");
    require_off_lattice(p.u - at, tt, "u - alpha tau");
    require_off_lattice(p.v - at, tt, "v - alpha tau");
    auto th = [&](cplx z) { return theta11(z, p.tau, t).value; };
    return th(p.v - at) * th(p.u) / (th(p.u - at) * th(p.v)) * std::exp(2.0 * pi * I * p.alpha * (p.u - p.v));
}

namespace detail {
inline void require_off_qlattice(cplx z, cplx q, const char* name) {
    if (z == 0.0) throw DomainError(std::string(name) + " must be nonzero");
    long m0 = std::lround(std::log(std::abs(z)) / std::log(std::abs(q)));
    for (long m = m0 - 1; m <= m0 + 1; ++m)
        if (std::abs(1.0 - z / ipow(q, m)) < pole_threshold) throw PoleHit(std::string(name) + " lies on q^Z");
}
}  // namespace detail

/// Kronecker's k(x, y) = (q, q, xy, q/xy)_inf / (x, q/x, y, q/y)_inf.
inline EvalResult kronecker_k(cplx x, cplx y, cplx q, const Truncation& t = {}) {
    require_nome(q);
    detail::require_off_qlattice(x, q, "x");
    detail::require_off_qlattice(y, q, "y");
    auto P = [&](cplx z) { return qpoch_inf(z, q, t).value; };
    cplx v = P(q) * P(q) * P(x * y) * P(q / (x * y)) / (P(x) * P(q / x) * P(y) * P(q / y));
    return {v, t.rel_tol * std::abs(v), 0};
}

/// sum_{n in Z} y^n / (1 - x q^n); oracle for kronecker_k, needs |q| < |y| < 1.
inline EvalResult kronecker_sum(cplx x, cplx y, cplx q, const Truncation& t = {}) {
    require_nome(q);
    auto f = [&](long n) { return ipow(y, n) / (1.0 - x * ipow(q, n)); };
    return sum_bilateral(f, t);
}

/// j(w; alpha) = i q^{1/8} (q)_inf/(q^{1-alpha})_inf e^{pi i (1-alpha) w}/theta11(w) 1phi1(q^{1-alpha}; 0; q, e^{2 pi i w} q).
inline EvalResult j_alpha(cplx w, cplx alpha, const ModularPoint& tau, const Truncation& t = {}) {
    require_off_lattice(w, tau.tau(), "w");
    if (alpha.real() > 0.5 && std::abs(alpha - std::round(alpha.real())) < pole_threshold)
        throw PoleHit("alpha within 1e-6 of a positive integer");
    const cplx q = tau.q();
    cplx b = tau.qpow(1.0 - alpha);
    EvalResult s = phi({{b}, {0.0}, q, e2pi(w + tau.tau())}, t);
    cplx pre = I * tau.qpow(0.125) * qpoch_inf(q, q, t).value / qpoch_inf(b, q, t).value *
               std::exp(pi * I * (1.0 - alpha) * w) / theta11(w, tau, t).value;
    return {pre * s.value, std::abs(pre) * s.err_estimate, s.terms_used};
}

/// j(w; alpha) through the Jackson q-Bessel function J^(2)_{w/tau}(2 i e^{pi i (1-alpha) tau}; q).
inline EvalResult j_alpha_bessel(cplx w, cplx alpha, const ModularPoint& tau, const Truncation& t = {}) {
    require_off_lattice(w, tau.tau(), "w");
    const cplx tt = tau.tau();
    const cplx q = tau.q();
    cplx X = 2.0 * I * std::exp(pi * I * (1.0 - alpha) * tt);
    cplx nu = w / tt;
    cplx half_pow = std::exp(nu * (pi * I / 2.0 + pi * I * (1.0 - alpha) * tt));
    EvalResult J = q_bessel_J2_branch(e2pi(w + tt), half_pow, X, q, t);
    cplx pq = qpoch_inf(q, q, t).value;
    cplx pre = I * tau.qpow(0.125) * pq * pq * std::exp(-pi * I * w / (2.0 * tt)) /
               (theta11(w, tau, t).value * qpoch_inf(tau.qpow(1.0 - alpha), q, t).value);
    return {pre * J.value, std::abs(pre) * J.err_estimate, J.terms_used};
}

/// Universal mock theta function g3(x; q) = sum_{n>=1} q^{n(n-1)} / ((x)_n (q/x)_n).
inline EvalResult g3(cplx x, cplx q, const Truncation& t = {}) {
    require_nome(q);
    if (x == 0.0) throw DomainError("g3 needs x != 0");
    cplx term = 0.0, qn = 1.0;
    auto f = [&](long n) {
        // step from n-1 to n; qn holds q^{n-1}
        cplx d = (1.0 - x * qn) * (1.0 - qn * q / x);
        if (std::abs(d) < 1e-14) throw PoleHit("g3: x on a pole of the series");
        term = (n == 1) ? 1.0 / d : term * qn * qn / d;
        qn *= q;
        return term;
    };
    return sum_unilateral(f, t, 1);
}

enum class MockTheta { f0, phi, psi };

inline MockTheta parse_mock_theta(const std::string& s) {
    if (s == "f0") return MockTheta::f0;
    if (s == "phi") return MockTheta::phi;
    if (s == "psi") return MockTheta::psi;
    throw DomainError("unknown mock theta function '" + s + "'");
}

/// Ramanujan's f0, phi and psi by direct summation.
inline EvalResult mock_theta(MockTheta which, cplx q, const Truncation& t = {}) {
    require_nome(q);
    cplx term = 1.0;
    switch (which) {
        case MockTheta::f0:
            return sum_unilateral(
                [&](long n) {
                    if (n > 0) term *= ipow(q, 2 * n - 1) / (1.0 + ipow(q, n));
                    return term;
                },
                t);
        case MockTheta::phi:
            return sum_unilateral(
                [&](long n) {
                    if (n > 0) term *= ipow(q, 2 * n - 1) / (1.0 + ipow(q, 2 * n));
                    return term;
                },
                t);
        case MockTheta::psi:
            return sum_unilateral(
                [&](long n) {
                    cplx q2 = ipow(q, 2 * n - 1);
                    term = (n == 1) ? q / (1.0 - q) : term * q2 / (1.0 - q2);
                    return term;
                },
                t, 1);
    }
    return {};
}

}  // namespace qmu
