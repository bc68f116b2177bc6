#pragma once

#include <string>
#include <vector>

#include "qmu/hermite.hpp"
#include "qmu/idsuite.hpp"
#include "qmu/modular.hpp"
#include "qmu/mu.hpp"
#include "qmu/transform.hpp"

// Short evaluation helpers shared by the case tables. Every suite evaluation runs at precise truncation.
namespace qmu::cases {

using Rows = std::vector<IdentityPair>;

inline const Truncation& T() {
    static const Truncation t = precise_truncation();
    return t;
}

inline cplx th(cplx u, const ModularPoint& tau) { return theta11(u, tau, T()).value; }
inline cplx tq(cplx x, cplx q) { return theta_q(x, q, T()).value; }
inline cplx P(cplx x, cplx q) { return qpoch_inf(x, q, T()).value; }
inline cplx M(cplx u, cplx v, cplx alpha, const ModularPoint& tau) { return mu_general(u, v, alpha, tau, T()).value; }
inline cplx Z(cplx u, cplx v, const ModularPoint& tau) { return mu_zwegers(u, v, tau, T()).value; }
inline cplx ph(std::vector<cplx> up, std::vector<cplx> lo, cplx q, cplx x) {
    return phi({std::move(up), std::move(lo), q, x}, T()).value;
}
inline cplx ps(std::vector<cplx> up, std::vector<cplx> lo, cplx q, cplx x) {
    return psi({std::move(up), std::move(lo), q, x}, T()).value;
}

/// Keeps every listed additive point at least sample_margin away from Z + Z tau.
inline void off_lattice(const ModularPoint& tau, std::initializer_list<std::pair<const char*, cplx>> pts) {
    for (const auto& [name, z] : pts) keep_off_lattice(z, tau.tau(), name);
}

inline void off_qlattice(cplx q, std::initializer_list<std::pair<const char*, cplx>> pts) {
    for (const auto& [name, z] : pts) keep_off_qlattice(z, q, name);
}

}  // namespace qmu::cases
