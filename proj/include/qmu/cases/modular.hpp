#pragma once

#include "qmu/cases/mu.hpp"

namespace qmu::cases {

inline cplx mut(cplx u, cplx v, const ModularPoint& tau) { return mu_tilde(u, v, tau, T()).value; }
inline cplx nut(cplx u, cplx v, long k, const ModularPoint& tau) { return nu_tilde(u, v, k, tau, T()).value; }

/// (u, v, tau) for the completed functions; `imaginary` restricts tau to the imaginary axis for the S-law.
inline ZwDraw draw_completion(Draw& d, bool imaginary) {
    ModularPoint tau(imaginary ? d.choice("tau", {cplx{0.0, 1.1}, cplx{0.0, 1.2}})
                               : d.choice("tau", {cplx{0.0, 1.1}, cplx{0.0, 1.2}, cplx{0.1, 1.2}}));
    cplx u = d.coord("u"), v = d.coord("v");
    off_lattice(tau, {{"u", u}, {"v", v}, {"u-v", u - v}});
    return {u, v, tau};
}

/// mu~ or nu~ at (u/tau, v/tau; -1/tau) against the multiplier times the value at (u, v; tau).
template <class F, class Mult>
IdentityPair s_law(const ZwDraw& s, F&& f, Mult&& mult) {
    const cplx t = s.tau.tau();
    ModularPoint ts(-1.0 / t);
    keep_off_lattice(s.u / t, ts.tau(), "u/tau");
    keep_off_lattice(s.v / t, ts.tau(), "v/tau");
    return {"value at (u/tau, v/tau; -1/tau)", f(s.u / t, s.v / t, ts), mult(s.u, s.v, t) * f(s.u, s.v, s.tau)};
}

inline void add_sec4(Registry& reg) {
    const std::string domT = "u, v default box; tau in {1.1i, 1.2i, 0.1+1.2i}";
    const std::string domS = "u, v default box; tau in {1.1i, 1.2i}";
    const cplx eT = std::exp(-pi * I / 4.0);

    reg.add({"sec4-mu-tilde-T", "unlabeled:mu-tilde modular transformation", domT,
             [eT](Draw& d) -> Rows {
                 auto s = draw_completion(d, false);
                 ModularPoint t1(s.tau.tau() + 1.0);
                 return {{"mu~(u,v;tau+1) = e^{-pi i/4} mu~(u,v;tau)", mut(s.u, s.v, t1), eT * mut(s.u, s.v, s.tau)}};
             },
             1e-7});
    reg.add({"sec4-mu-tilde-S", "unlabeled:mu-tilde modular transformation", domS,
             [](Draw& d) -> Rows {
                 auto s = draw_completion(d, true);
                 return {s_law(s, mut, s_multiplier)};
             },
             1e-6});
    reg.add({"sec4-mu-tilde-S-variant", "unlabeled:mu-tilde modular transformation",
             domS + "; multiplier -i sqrt(-i tau) e^{pi i (u-v)^2/tau}",
             [](Draw& d) -> Rows {
                 auto s = draw_completion(d, true);
                 return {s_law(s, mut, s_multiplier_variant)};
             },
             1e-6, false});
    reg.add({"sec4-mu-tilde-symmetry", "unlabeled:mu-tilde modular transformation", domT,
             [](Draw& d) -> Rows {
                 auto s = draw_completion(d, false);
                 return {{"mu~(v,u) = mu~(u,v)", mut(s.v, s.u, s.tau), mut(s.u, s.v, s.tau)}};
             },
             1e-8});

    auto draw_k = [](Draw& d, bool imaginary) {
        auto s = draw_completion(d, imaginary);
        long k = d.integer("k", 1, 3);
        return std::pair{s, k};
    };
    reg.add({"sec4-nu-tilde-equal", "section4", domT + "; k in 1..3",
             [draw_k](Draw& d) -> Rows {
                 auto [s, k] = draw_k(d, false);
                 return {{"mu~(u,v) = nu~(u,v;k)", mut(s.u, s.v, s.tau), nut(s.u, s.v, k, s.tau)}};
             },
             1e-7});
    reg.add({"sec4-nu-tilde-variant", "section4", domT + "; k in 1..3; (1/2i)(R - 2 q^{-1/8} sum) variant",
             [draw_k](Draw& d) -> Rows {
                 auto [s, k] = draw_k(d, false);
                 return {{"mu~(u,v) = nu~(u,v;k), variant", mut(s.u, s.v, s.tau),
                          nu_tilde_variant(s.u, s.v, k, s.tau, T()).value}};
             },
             1e-7, false});
    reg.add({"sec4-nu-tilde-T", "eq:tnu +1", domT + "; k in 1..3",
             [draw_k, eT](Draw& d) -> Rows {
                 auto [s, k] = draw_k(d, false);
                 ModularPoint t1(s.tau.tau() + 1.0);
                 return {{"nu~(u,v;k,tau+1) = e^{-pi i/4} nu~(u,v;k,tau)", nut(s.u, s.v, k, t1), eT * nut(s.u, s.v, k, s.tau)}};
             },
             1e-7});
    auto nu_s = [draw_k](bool corrected) {
        return [draw_k, corrected](Draw& d) -> Rows {
            auto [s, k] = draw_k(d, true);
            auto f = [k](cplx u, cplx v, const ModularPoint& t) { return nut(u, v, k, t); };
            if (corrected) return Rows{s_law(s, f, s_multiplier)};
            return Rows{s_law(s, f, s_multiplier_variant)};
        };
    };
    reg.add({"sec4-nu-tilde-S", "eq:tnu +tau", domS + "; k in 1..3", nu_s(true), 1e-6});
    reg.add({"sec4-nu-tilde-S-variant", "eq:tnu +tau", domS + "; k in 1..3; multiplier -i sqrt(-i tau) e^{pi i (u-v)^2/tau}",
             nu_s(false), 1e-6, false});

    reg.add({"sec4-R-window", "unlabeled:R completion",
             "w: Re in [-0.45,0.45), Im in [-0.3,0.3); tau: Re in [-0.5,0.5), Im in [0.5,1.5)",
             [](Draw& d) -> Rows {
                 ModularPoint tau(d.box("tau", -0.5, 0.5, 0.5, 1.5));
                 cplx w = d.box("w", -0.45, 0.45, -0.3, 0.3);
                 return {{"window 10 = window 20", R_window(w, tau, 10), R_window(w, tau, 20)},
                         {"adaptive R = window 40", R_func(w, tau, T()).value, R_window(w, tau, 40)}};
             },
             1e-11});
}

}  // namespace qmu::cases
