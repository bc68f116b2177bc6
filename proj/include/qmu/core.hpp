#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "qmu/errors.hpp"

namespace qmu {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// Distance below which a point counts as sitting on a singular lattice.
inline constexpr double pole_threshold = 1e-6;

/// e^{2 pi i z}
inline cplx e2pi(cplx z) { return std::exp(2.0 * pi * I * z); }

/// z^n by repeated squaring; exact for n = 0 and z = 0.
inline cplx ipow(cplx z, long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0;
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

/// Stopping policy shared by every infinite sum and product.
struct Truncation {
    double rel_tol = 1e-12;
    int max_terms = 20000;
    int settle_count = 3;

    void validate() const {
        if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
        if (settle_count < 1 || max_terms < settle_count)
            throw DomainError("max_terms must be >= settle_count >= 1");
    }
};

/// Tolerance used by the identity suite: iterate until terms drop below double resolution.
inline Truncation precise_truncation() { return Truncation{1e-17, 20000, 3}; }

struct EvalResult {
    cplx value{};
    double err_estimate = 0.0;
    int terms_used = 0;
};

/// tau in the upper half plane with its nome q = e^{2 pi i tau}.
class ModularPoint {
public:
    explicit ModularPoint(cplx tau) : tau_(tau) {
        if (!(tau.imag() > 0.0)) throw DomainError("Im(tau) must be positive");
        q_ = e2pi(tau);
    }

    cplx tau() const { return tau_; }
    cplx q() const { return q_; }
    /// q^s taken additively, e^{2 pi i tau s}.
    cplx qpow(cplx s) const { return e2pi(tau_ * s); }

private:
    cplx tau_;
    cplx q_;
};

/// Distance from z to the nearest point of Z + Z tau.
inline double lattice_distance(cplx z, cplx tau) {
    double n0 = std::round(z.imag() / tau.imag());
    double best = std::abs(z);
    for (double n = n0 - 1; n <= n0 + 1; n += 1.0) {
        cplx w = z - n * tau;
        double m0 = std::round(w.real());
        for (double m = m0 - 1; m <= m0 + 1; m += 1.0) best = std::min(best, std::abs(w - m));
    }
    return best;
}

/// Throws PoleHit("<name> within 1e-6 of Z+Z tau") when z is too close to the lattice.
inline void require_off_lattice(cplx z, cplx tau, const std::string& name) {
    if (lattice_distance(z, tau) < pole_threshold)
        throw PoleHit(name + " within 1e-6 of Z+Z tau");
}

inline void require_nome(cplx q) {
    if (!(std::abs(q) < 1.0)) throw DomainError("nome must satisfy |q| < 1");
}

/// Watches the terms of one series tail and decides when it has settled.
class TailMonitor {
public:
    explicit TailMonitor(const Truncation& t) : t_(t), window_(static_cast<size_t>(t.settle_count), 0.0) {}

    /// Feed the term with |index| `n`; returns true once settle_count consecutive terms are negligible.
    bool feed(long n, cplx term, cplx partial) {
        double mag = std::abs(term);
        if (!std::isfinite(mag)) throw Divergent("non-finite series term");
        ++count_;
        if (count_ > t_.max_terms) throw BudgetExceeded("series did not settle within max_terms");
        window_[static_cast<size_t>(count_) % window_.size()] = mag;
        scale_ = std::max({scale_, std::abs(partial), mag});
        bool small = mag <= t_.rel_tol * scale_;
        below_ = small ? below_ + 1 : 0;
        if (!small && std::abs(n) > 50 && mag > last_) {
            if (++grow_ >= t_.settle_count) throw Divergent("series terms keep growing");
        } else {
            grow_ = 0;
        }
        last_ = mag;
        return below_ >= t_.settle_count;
    }

    double err() const { return *std::max_element(window_.begin(), window_.end()); }
    int count() const { return count_; }

private:
    Truncation t_;
    std::vector<double> window_;
    int count_ = 0;
    int below_ = 0;
    int grow_ = 0;
    double scale_ = 0.0;
    double last_ = 0.0;
};

/// Sum f(start) + f(start+1) + ... ; f is called in increasing order.
template <class F>
EvalResult sum_unilateral(F&& f, const Truncation& t, long start = 0) {
    t.validate();
    TailMonitor mon(t);
    cplx s = 0.0;
    for (long n = start;; ++n) {
        cplx term = f(n);
        s += term;
        if (mon.feed(n, term, s)) break;
    }
    return {s, mon.err(), mon.count()};
}

/// Bilateral sum: pos(0), pos(1), ... then neg(-1), neg(-2), ..., each side settling on its own.
template <class P, class N>
EvalResult sum_bilateral(P&& pos, N&& neg, const Truncation& t) {
    t.validate();
    TailMonitor up(t), down(t);
    cplx s = 0.0;
    for (long n = 0;; ++n) {
        cplx term = pos(n);
        s += term;
        if (up.feed(n, term, s)) break;
    }
    for (long n = -1;; --n) {
        cplx term = neg(n);
        s += term;
        if (down.feed(n, term, s)) break;
    }
    return {s, std::max(up.err(), down.err()), up.count() + down.count()};
}

template <class F>
EvalResult sum_bilateral(F&& f, const Truncation& t) {
    return sum_bilateral(f, f, t);
}

/// (x;q)_inf
inline EvalResult qpoch_inf(cplx x, cplx q, const Truncation& t = {}) {
    require_nome(q);
    t.validate();
    cplx p = 1.0;
    cplx xj = x;
    double lim = t.rel_tol * (1.0 + std::abs(x));
    int below = 0, j = 0;
    double err = 0.0;
    for (;; ++j) {
        if (j >= t.max_terms) throw BudgetExceeded("q-Pochhammer product did not settle");
        p *= 1.0 - xj;
        if (std::abs(xj) < lim) {
            ++below;
            err = std::max(err, std::abs(xj));
            if (below >= t.settle_count) break;
        } else {
            below = 0;
            err = 0.0;
        }
        xj *= q;
    }
    return {p, err * std::abs(p), j + 1};
}

/// (x;q)_n for any integer n; n < 0 uses the finite product of reciprocals.
inline cplx qpoch(cplx x, cplx q, long n) {
    cplx p = 1.0;
    if (n >= 0) {
        cplx xj = x;
        for (long j = 0; j < n; ++j, xj *= q) p *= 1.0 - xj;
        return p;
    }
    cplx qinv = 1.0 / q;
    cplx xj = x * qinv;
    for (long j = 1; j <= -n; ++j, xj *= qinv) {
        cplx d = 1.0 - xj;
        if (std::abs(d) < 1e-300) throw PoleHit("negative-index q-Pochhammer hits a pole");
        p /= d;
    }
    return p;
}

/// Product of (x_i;q)_inf over a parameter list.
inline cplx qpoch_inf_prod(std::initializer_list<cplx> xs, cplx q, const Truncation& t = {}) {
    cplx p = 1.0;
    for (cplx x : xs) p *= qpoch_inf(x, q, t).value;
    return p;
}

/// theta_q(x) = (q, -x, -q/x; q)_inf
inline EvalResult theta_q(cplx x, cplx q, const Truncation& t = {}) {
    if (x == 0.0) throw DomainError("theta_q needs x != 0");
    EvalResult a = qpoch_inf(q, q, t), b = qpoch_inf(-x, q, t), c = qpoch_inf(-q / x, q, t);
    cplx v = a.value * b.value * c.value;
    double err = a.err_estimate * std::abs(b.value * c.value) +
                 b.err_estimate * std::abs(a.value * c.value) + c.err_estimate * std::abs(a.value * b.value);
    return {v, err, a.terms_used + b.terms_used + c.terms_used};
}

/// Bilateral sum form sum_n x^n q^{n(n-1)/2}; test oracle for theta_q.
inline EvalResult theta_q_sum(cplx x, cplx q, const Truncation& t = {}) {
    if (x == 0.0) throw DomainError("theta_q needs x != 0");
    cplx up = 1.0, down = 1.0;
    auto pos = [&](long n) {
        if (n > 0) up *= x * ipow(q, n - 1);
        return up;
    };
    auto neg = [&](long n) {
        down /= x * ipow(q, n);
        return down;
    };
    return sum_bilateral(pos, neg, t);
}

/// theta_11(u, tau) = -i q^{1/8} e^{-pi i u} (q, e^{2 pi i u}, q e^{-2 pi i u}; q)_inf
inline EvalResult theta11(cplx u, const ModularPoint& tau, const Truncation& t = {}) {
    cplx q = tau.q();
    cplx x = e2pi(u);
    EvalResult a = qpoch_inf(q, q, t), b = qpoch_inf(x, q, t), c = qpoch_inf(q / x, q, t);
    cplx pre = -I * tau.qpow(0.125) * std::exp(-pi * I * u);
    cplx v = pre * a.value * b.value * c.value;
    double err = std::abs(pre) * (a.err_estimate * std::abs(b.value * c.value) +
                                  b.err_estimate * std::abs(a.value * c.value) +
                                  c.err_estimate * std::abs(a.value * b.value));
    return {v, err, a.terms_used + b.terms_used + c.terms_used};
}

namespace detail {
inline cplx theta11_term(long n, cplx u, cplx tau) {
    double h = static_cast<double>(n) + 0.5;
    return std::exp(2.0 * pi * I * h * (u + 0.5) + pi * I * h * h * tau);
}
}  // namespace detail

/// Defining sum over n + 1/2; test oracle for theta11.
inline EvalResult theta11_sum(cplx u, const ModularPoint& tau, const Truncation& t = {}) {
    auto f = [&](long n) { return detail::theta11_term(n, u, tau.tau()); };
    return sum_bilateral(f, t);
}

/// d/du theta_11 by termwise differentiation of the defining sum.
inline EvalResult theta11_prime(cplx u, const ModularPoint& tau, const Truncation& t = {}) {
    auto f = [&](long n) {
        return 2.0 * pi * I * (static_cast<double>(n) + 0.5) * detail::theta11_term(n, u, tau.tau());
    };
    return sum_bilateral(f, t);
}

/// theta_11'(u)/theta_11(u)
inline EvalResult theta11_logderiv(cplx u, const ModularPoint& tau, const Truncation& t = {}) {
    require_off_lattice(u, tau.tau(), "u");
    EvalResult d = theta11_prime(u, tau, t);
    EvalResult th = theta11(u, tau, t);
    cplx v = d.value / th.value;
    double err = d.err_estimate / std::abs(th.value) + std::abs(v) * th.err_estimate / std::abs(th.value);
    return {v, err, d.terms_used + th.terms_used};
}

}  // namespace qmu
