#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmu/hyper.hpp"
#include "qmu/mu.hpp"

namespace qmu {

/// One side-by-side comparison produced by a residual check.
struct IdentityPair {
    std::string label;
    cplx lhs;
    cplx rhs;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N.
struct FormalPowerSeries {
    std::vector<cplx> coeffs;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }

    /// Horner evaluation; err_estimate is |c_N x^N|.
    EvalResult eval(cplx x) const {
        cplx s = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
        double tail = coeffs.empty() ? 0.0 : std::abs(coeffs.back() * ipow(x, order()));
        return {s, tail, static_cast<int>(coeffs.size())};
    }

    /// x^m f(x)
    FormalPowerSeries shift(long m) const {
        FormalPowerSeries r;
        r.coeffs.assign(static_cast<size_t>(m), 0.0);
        r.coeffs.insert(r.coeffs.end(), coeffs.begin(), coeffs.end());
        return r;
    }

    /// (T_x^n f)(x) = f(q^n x)
    FormalPowerSeries dilate(cplx q, long n) const {
        FormalPowerSeries r = *this;
        cplx qn = ipow(q, n), f = 1.0;
        for (auto& c : r.coeffs) {
            c *= f;
            f *= qn;
        }
        return r;
    }
};

/// q-Borel transform B+: c_n -> c_n q^{n(n-1)/2}.
inline FormalPowerSeries q_borel(const FormalPowerSeries& f, cplx q) {
    FormalPowerSeries r = f;
    for (long n = 0; n <= r.order(); ++n) r.coeffs[static_cast<size_t>(n)] *= ipow(q, n * (n - 1) / 2);
    return r;
}

/// Coefficients of the divergent formal solution 2phi0(a, 0; -; q, x/a) up to degree N.
inline FormalPowerSeries hermite_weber_formal(cplx a, cplx q, long N) {
    FormalPowerSeries f;
    cplx c = 1.0;
    for (long n = 0; n <= N; ++n) {
        f.coeffs.push_back(c);
        // ratio of consecutive 2phi0 terms: (1 - a q^n)/(1 - q^{n+1}) (-q^n)^{-1} / a
        c *= (1.0 - a * ipow(q, n)) / (1.0 - ipow(q, n + 1)) / (-ipow(q, n)) / a;
    }
    return f;
}

/// q-Laplace transform L+(f)(x, lambda) = sum_{n in Z} f(lambda q^n) / theta_q(lambda q^n / x).
inline EvalResult q_laplace(const std::function<cplx(cplx)>& f, cplx x, cplx lambda, cplx q,
                            const Truncation& t = {}) {
    require_nome(q);
    if (x == 0.0 || lambda == 0.0) throw DomainError("q-Laplace needs x, lambda != 0");
    detail::require_off_qlattice(-lambda / x, q, "-lambda/x");
    auto term = [&](long n) {
        cplx xi = lambda * ipow(q, n);
        return f(xi) / theta_q(xi / x, q, t).value;
    };
    return sum_bilateral(term, t);
}

/// Parameters of the q-Hermite-Weber equation: a = q^alpha and the Laplace direction lambda.
struct HWParams {
    cplx alpha;
    ModularPoint tau;
    cplx lambda;

    cplx a() const { return tau.qpow(alpha); }
};

/// f0 at x = e^{2 pi i w}: x^{alpha/2} L+ o B+(2phi0(a,0;-;q,x/a))(x, lambda), Borel image in closed form.
inline EvalResult f0_solution_w(cplx w, const HWParams& p, const Truncation& t = {}) {
    const cplx q = p.tau.q();
    const cplx a = p.a();
    auto borel = [&](cplx xi) { return qpoch_inf(-xi, q, t).value / qpoch_inf(-xi / a, q, t).value; };
    EvalResult L = q_laplace(borel, e2pi(w), p.lambda, q, t);
    cplx pre = std::exp(pi * I * p.alpha * w);
    return {pre * L.value, std::abs(pre) * L.err_estimate, L.terms_used};
}

/// g0 at x = e^{2 pi i w}: x^{1 - alpha/2} / theta_q(-x) 1phi1(q/a; 0; q, x q).
inline EvalResult g0_solution_w(cplx w, const HWParams& p, const Truncation& t = {}) {
    const cplx q = p.tau.q();
    const cplx x = e2pi(w);
    EvalResult s = phi({{q / p.a()}, {0.0}, q, x * q}, t);
    cplx pre = std::exp(2.0 * pi * I * w * (1.0 - p.alpha / 2.0)) / theta_q(-x, q, t).value;
    return {pre * s.value, std::abs(pre) * s.err_estimate, s.terms_used};
}

inline EvalResult finf_solution_w(cplx w, const HWParams& p, const Truncation& t = {}) { return f0_solution_w(-w, p, t); }
inline EvalResult ginf_solution_w(cplx w, const HWParams& p, const Truncation& t = {}) { return g0_solution_w(-w, p, t); }

/// Principal-branch wrappers taking x directly.
inline cplx principal_w(cplx x) {
    if (x == 0.0) throw DomainError("x must be nonzero");
    return std::log(x) / (2.0 * pi * I);
}
inline EvalResult f0_solution(cplx x, const HWParams& p, const Truncation& t = {}) { return f0_solution_w(principal_w(x), p, t); }
inline EvalResult g0_solution(cplx x, const HWParams& p, const Truncation& t = {}) { return g0_solution_w(principal_w(x), p, t); }

/// Residual of [T_x^2 - (1 - xq) q^{alpha/2} T_x - xq] f at x = e^{2 pi i w}, from three independent evaluations.
/// Scored against the largest term.
template <class F>
IdentityPair hermite_weber_residual(const std::string& label, F&& f, cplx w, const HWParams& p) {
    const cplx tt = p.tau.tau();
    const cplx q = p.tau.q();
    const cplx x = e2pi(w);
    cplx f0 = f(w), f1 = f(w + tt), f2 = f(w + 2.0 * tt);
    // the largest of the three terms goes alone on the left, so cancellation among the others is not scored
    const cplx terms[3] = {f2, -(1.0 - x * q) * p.tau.qpow(p.alpha / 2.0) * f1, -x * q * f0};
    int big = 0;
    for (int j = 1; j < 3; ++j)
        if (std::abs(terms[j]) > std::abs(terms[big])) big = j;
    cplx rest = 0.0;
    for (int j = 0; j < 3; ++j)
        if (j != big) rest -= terms[j];
    return {label, terms[big], rest};
}

/// Both rows of the connection matrix expressing f0, f_inf through g0, g_inf.
inline std::vector<IdentityPair> connection_matrix_residual(cplx w, const HWParams& p, const Truncation& t = {}) {
    const cplx q = p.tau.q();
    const cplx a = p.a();
    const cplx x = e2pi(w);
    const cplx lam = p.lambda;
    const cplx xa = std::exp(2.0 * pi * I * p.alpha * w);
    auto th = [&](cplx z) { return theta_q(z, q, t).value; };
    for (cplx z : {lam, lam / a, x / lam, x * lam})
        detail::require_off_qlattice(-z, q, "theta argument");
    cplx F0 = f0_solution_w(w, p, t).value, Finf = finf_solution_w(w, p, t).value;
    cplx G0 = g0_solution_w(w, p, t).value, Ginf = ginf_solution_w(w, p, t).value;
    cplx pref = -qpoch_inf(q, q, t).value / qpoch_inf(q / a, q, t).value;
    cplx r1 = pref * (th(lam) * th(a * x / lam) * xa / (th(lam / a) * th(x / lam) * a) * G0 + Ginf);
    cplx r2 = pref * (G0 + th(lam) * th(x * lam / a) / (th(lam / a) * th(x * lam)) / xa * Ginf);
    return {{"f0 row", F0, r1}, {"f_inf row", Finf, r2}};
}

/// f0(x, lambda') through f_inf(x, lambda) and g_inf(x).
inline IdentityPair lambda_change_residual(cplx w, cplx lambda_prime, const HWParams& p, const Truncation& t = {}) {
    const cplx q = p.tau.q();
    const cplx a = p.a();
    const cplx x = e2pi(w);
    const cplx lam = p.lambda, lp = lambda_prime;
    auto th = [&](cplx z) { return theta_q(z, q, t).value; };
    for (cplx z : {x * lam, lp / x, lp / a, a / lam, lp, x / lp})
        detail::require_off_qlattice(-z, q, "theta argument");
    HWParams pp{p.alpha, p.tau, lp};
    cplx lhs = f0_solution_w(w, pp, t).value;
    cplx Finf = finf_solution_w(w, p, t).value, Ginf = ginf_solution_w(w, p, t).value;
    cplx xa = std::exp(2.0 * pi * I * p.alpha * w);
    cplx pq = qpoch_inf(q, q, t).value;
    cplx c1 = th(lp) * th(a * x / lp) * xa / (th(lp / a) * th(x / lp) * a);
    cplx c2 = qpoch_inf(a, q, t).value * pq * pq * th(-lp / (x * lam)) * th(-x) * th(-lam * lp / a) /
              (th(x * lam) * th(lp / x) * th(lp / a) * th(a / lam));
    return {"f0(lambda') connection", lhs, c1 * Finf - c2 * Ginf};
}

/// Solutions and connection formulas of [(1 - abxq) T^2 - (1 - (a+b) xq) T - xq] f = 0.
struct HeineSystem {
    cplx a, b, q, lambda;
    Truncation t;

    cplx th(cplx z) const { return theta_q(z, q, t).value; }
    cplx P(cplx z) const { return qpoch_inf(z, q, t).value; }

    /// 2phi1(a, b; 0; q, -xi) continued through (b, -a xi)_inf/(-xi)_inf 2phi1(0, -xi; -a xi; q, b).
    cplx borel_F1(cplx xi) const {
        return P(b) * P(-a * xi) / P(-xi) * phi({{0.0, -xi}, {-a * xi}, q, b}, t).value;
    }
    /// 2phi1(A, 0; C; q, z) = (C/A, Az)_inf/(C, z)_inf 2phi1(0, A; Az; q, C/A), needs |C/A| < 1.
    cplx phi21_a0(cplx A, cplx C, cplx z) const {
        return P(C / A) * P(A * z) / (P(C) * P(z)) * phi({{0.0, A}, {A * z}, q, C / A}, t).value;
    }

    cplx LB(cplx x) const {
        return q_laplace([&](cplx xi) { return borel_F1(xi); }, x, lambda, q, t).value;
    }
    cplx F2(cplx x) const { return P(a * b * x) / th(-x * q) * phi({{q / a, q / b}, {0.0}, q, a * b * x}, t).value; }
    cplx G1(cplx x) const { return th(-a * x * q) / th(-x * q) * phi21_a0(a, a * q / b, q / (a * b * x)); }
    cplx G2(cplx x) const { return th(-b * x * q) / th(-x * q) * phi21_a0(b, b * q / a, q / (a * b * x)); }

    template <class F>
    IdentityPair equation(const std::string& label, F&& f, cplx x) const {
        return {label, (1.0 - a * b * x * q) * f(x * q * q), (1.0 - (a + b) * x * q) * f(x * q) + x * q * f(x)};
    }
};

inline std::vector<IdentityPair> heine_system_suite(cplx x, cplx a, cplx b, cplx q, cplx lambda, const Truncation& t = {}) {
    require_nome(q);
    detail::require_off_qlattice(b / a, q, "b/a");
    HeineSystem L{a, b, q, lambda, t};
    std::vector<IdentityPair> rows;
    rows.push_back(L.equation("L+B+(F1) equation", [&](cplx s) { return L.LB(s); }, x));
    rows.push_back(L.equation("F2 equation", [&](cplx s) { return L.F2(s); }, x));
    rows.push_back(L.equation("G1 equation", [&](cplx s) { return L.G1(s); }, x));
    rows.push_back(L.equation("G2 equation", [&](cplx s) { return L.G2(s); }, x));
    const cplx lam = lambda;
    cplx c1 = L.P(b) * L.th(a * lam) * L.th(a * x * q / lam) * L.th(-x * q) /
              (L.P(b / a) * L.th(lam) * L.th(x * q / lam) * L.th(-a * x * q));
    cplx c2 = L.P(a) * L.th(b * lam) * L.th(b * x * q / lam) * L.th(-x * q) /
              (L.P(a / b) * L.th(lam) * L.th(x * q / lam) * L.th(-b * x * q));
    cplx G1 = L.G1(x), G2 = L.G2(x);
    rows.push_back({"L+B+(F1) connection", L.LB(x), c1 * G1 + c2 * G2});
    rows.push_back({"F2 connection", L.F2(x),
                    L.P(q / a) / (L.P(b / a) * L.P(q)) * G1 + L.P(q / b) / (L.P(a / b) * L.P(q)) * G2});
    return rows;
}

}  // namespace qmu
