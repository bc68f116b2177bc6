#pragma once

#include <optional>
#include <vector>

#include "qmu/core.hpp"

namespace qmu {

/// Parameters of r_phi_s / r_psi_s: upper a_1..a_r, lower b_1..b_s, nome q and argument x.
struct SeriesSpec {
    std::vector<cplx> upper;
    std::vector<cplx> lower;
    cplx q;
    cplx x;
};

namespace detail {

inline constexpr double denom_floor = 1e-13;

inline cplx signed_qpow(cplx qn, int k) {
    // ((-1) q^n)^k
    return ipow(-qn, k);
}

/// Smallest m >= 0 with a q^m == 1 (up to rounding), if any.
inline std::optional<long> terminating_index(cplx a, cplx q, int max_terms) {
    cplx am = a;
    for (long m = 0; m < max_terms && std::abs(am) >= 0.5; ++m, am *= q)
        if (std::abs(1.0 - am) < 1e-12) return m;
    return std::nullopt;
}

}  // namespace detail

/// Unilateral basic hypergeometric series r_phi_s.
inline EvalResult phi(const SeriesSpec& s, const Truncation& t = {}) {
    require_nome(s.q);
    t.validate();
    const int r = static_cast<int>(s.upper.size());
    const int k = static_cast<int>(s.lower.size()) - r + 1;

    std::optional<long> stop;
    for (cplx a : s.upper) {
        auto m = detail::terminating_index(a, s.q, t.max_terms);
        if (m && (!stop || *m < *stop)) stop = m;
    }

    cplx term = 1.0, sum = 1.0, qn = 1.0;
    if (stop) {
        double err = 0.0;
        for (long n = 0; n < *stop; ++n, qn *= s.q) {
            cplx f = s.x * detail::signed_qpow(qn, k) / (1.0 - qn * s.q);
            for (cplx a : s.upper) f *= 1.0 - a * qn;
            for (cplx b : s.lower) {
                cplx d = 1.0 - b * qn;
                if (std::abs(d) < detail::denom_floor) throw PoleHit("phi: lower parameter hits q^{-m}");
                f /= d;
            }
            term *= f;
            sum += term;
        }
        return {sum, err, static_cast<int>(*stop + 1)};
    }

    if (k == 0 && !(std::abs(s.x) < 1.0)) throw Divergent("phi: balanced series needs |x| < 1");
    if (k < 0 && s.x != 0.0) throw Divergent("phi: non-terminating series with s - r + 1 < 0 diverges");

    for (cplx b : s.lower)
        if (detail::terminating_index(b, s.q, t.max_terms)) throw PoleHit("phi: lower parameter in q^{-N}");

    TailMonitor mon(t);
    mon.feed(0, term, sum);
    for (long n = 0;; ++n, qn *= s.q) {
        cplx f = s.x * detail::signed_qpow(qn, k) / (1.0 - qn * s.q);
        for (cplx a : s.upper) f *= 1.0 - a * qn;
        for (cplx b : s.lower) f /= 1.0 - b * qn;
        term *= f;
        sum += term;
        if (mon.feed(n + 1, term, sum)) break;
    }
    return {sum, mon.err(), mon.count()};
}

/// Bilateral basic hypergeometric series r_psi_s, each tail settling on its own.
inline EvalResult psi(const SeriesSpec& s, const Truncation& t = {}) {
    require_nome(s.q);
    const int k = static_cast<int>(s.lower.size()) - static_cast<int>(s.upper.size());
    if (s.x == 0.0) throw DomainError("psi: argument must be nonzero");

    cplx up = 1.0, qn = 1.0;
    auto pos = [&](long n) {
        if (n == 0) return up;
        // move from n-1 to n, qn holds q^{n-1}
        cplx f = s.x * detail::signed_qpow(qn, k);
        for (cplx a : s.upper) f *= 1.0 - a * qn;
        for (cplx b : s.lower) {
            cplx d = 1.0 - b * qn;
            if (std::abs(d) < detail::denom_floor) throw PoleHit("psi: lower parameter hits q^{-m}");
            f /= d;
        }
        up *= f;
        qn *= s.q;
        return up;
    };
    cplx down = 1.0, qm = 1.0 / s.q;
    auto neg = [&](long) {
        // move from n+1 to n, qm holds q^{n}
        // (-q^n)^{-k} is merged into k of the factors: (1 - b q^n)/(-q^n) = b - q^{-n},
        // so no step forms the separately overflowing power
        const cplx r = 1.0 / qm;
        cplx f = 1.0 / s.x;
        int merged = 0;
        for (cplx b : s.lower) {
            if (merged < k) {
                f *= b - r;
                ++merged;
            } else {
                f *= 1.0 - b * qm;
            }
        }
        for (cplx a : s.upper) {
            cplx d = 1.0 - a * qm;
            if (std::abs(d) < detail::denom_floor) throw PoleHit("psi: upper parameter hits q^{m}");
            if (merged > k) {
                f /= a - r;
                --merged;
            } else {
                f /= d;
            }
        }
        down *= f;
        qm /= s.q;
        return down;
    };
    return sum_bilateral(pos, neg, t);
}

/// q-Appell function Phi^(1)(a; b1, b2; c; q; x, y), summed over square shells max(m, n) = K.
inline EvalResult q_appell_phi1(cplx a, cplx b1, cplx b2, cplx c, cplx q, cplx x, cplx y,
                                const Truncation& t = {}) {
    require_nome(q);
    t.validate();
    if (!(std::abs(x) < 1.0 && std::abs(y) < 1.0)) throw DomainError("q-Appell needs |x| < 1 and |y| < 1");

    std::vector<cplx> ac{1.0}, bx{1.0}, by{1.0};
    auto grow = [&](size_t kmax) {
        while (ac.size() <= 2 * kmax) {
            size_t j = ac.size() - 1;
            cplx qj = ipow(q, static_cast<long>(j));
            cplx d = 1.0 - c * qj;
            if (std::abs(d) < detail::denom_floor) throw PoleHit("q-Appell: c hits q^{-m}");
            ac.push_back(ac.back() * (1.0 - a * qj) / d);
        }
        while (bx.size() <= kmax) {
            size_t j = bx.size() - 1;
            cplx qj = ipow(q, static_cast<long>(j));
            bx.push_back(bx.back() * (1.0 - b1 * qj) / (1.0 - qj * q) * x);
            by.push_back(by.back() * (1.0 - b2 * qj) / (1.0 - qj * q) * y);
        }
    };

    TailMonitor mon(t);
    cplx sum = 0.0;
    for (size_t K = 0;; ++K) {
        grow(K);
        cplx shell = 0.0;
        double mass = 0.0;
        auto add = [&](cplx term) {
            shell += term;
            mass += std::abs(term);
        };
        for (size_t n = 0; n <= K; ++n) add(ac[K + n] * bx[K] * by[n]);
        for (size_t m = 0; m < K; ++m) add(ac[m + K] * bx[m] * by[K]);
        sum += shell;
        // the shell's absolute mass decays monotonically, unlike |shell| whose phases can line up
        if (mon.feed(static_cast<long>(K), mass, sum)) break;
    }
    return {sum, mon.err(), mon.count()};
}

/// Jackson q-Bessel J^(2) with explicitly supplied q^{nu+1} and (x/2)^nu.
inline EvalResult q_bessel_J2_branch(cplx qnu1, cplx half_x_pow_nu, cplx x, cplx q, const Truncation& t = {}) {
    EvalResult p = qpoch_inf(qnu1, q, t);
    EvalResult pq = qpoch_inf(q, q, t);
    EvalResult s = phi({{}, {qnu1}, q, -x * x * qnu1 / 4.0}, t);
    cplx pre = p.value / pq.value * half_x_pow_nu;
    return {pre * s.value, std::abs(pre) * s.err_estimate + std::abs(s.value * half_x_pow_nu) * p.err_estimate,
            p.terms_used + pq.terms_used + s.terms_used};
}

namespace detail {
inline cplx principal_pow(cplx base, cplx nu) {
    if (base == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu.real() > 0.0) return 0.0;
        throw DomainError("(x/2)^nu undefined at x = 0");
    }
    return std::exp(nu * std::log(base));
}
}  // namespace detail

/// J_nu^(2)(x; q) = (q^{nu+1})_inf/(q)_inf (x/2)^nu 0phi1(-; q^{nu+1}; q, -x^2 q^{nu+1}/4), principal branches.
inline EvalResult q_bessel_J2(cplx nu, cplx x, cplx q, const Truncation& t = {}) {
    require_nome(q);
    cplx qnu1 = std::exp((nu + 1.0) * std::log(q));
    return q_bessel_J2_branch(qnu1, detail::principal_pow(x / 2.0, nu), x, q, t);
}

/// The 1phi1 form (x/2)^nu/(q)_inf 1phi1(-x^2/4; 0; q, q^{nu+1}); cross-check for q_bessel_J2.
inline EvalResult q_bessel_J2_phi11(cplx nu, cplx x, cplx q, const Truncation& t = {}) {
    require_nome(q);
    cplx qnu1 = std::exp((nu + 1.0) * std::log(q));
    cplx pw = detail::principal_pow(x / 2.0, nu);
    EvalResult pq = qpoch_inf(q, q, t);
    EvalResult s = phi({{-x * x / 4.0}, {0.0}, q, qnu1}, t);
    return {pw / pq.value * s.value, std::abs(pw / pq.value) * s.err_estimate, pq.terms_used + s.terms_used};
}

}  // namespace qmu
