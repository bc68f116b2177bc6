#pragma once

#include "qmu/cases/classic.hpp"
#include "qmu/cases/hermite.hpp"
#include "qmu/cases/modular.hpp"
#include "qmu/cases/mu.hpp"
#include "qmu/cases/sec5.hpp"
#include "qmu/cases/transform.hpp"
#include "qmu/idsuite.hpp"

namespace qmu {

/// Every registered identity case.
inline Registry register_all() {
    Registry reg;
    cases::add_core(reg);
    cases::add_classic(reg);
    cases::add_mock(reg);
    cases::add_zwegers(reg);
    cases::add_thm12(reg);
    cases::add_thm13(reg);
    cases::add_cor14(reg);
    cases::add_hermite(reg);
    cases::add_thm16(reg);
    cases::add_cor36(reg);
    cases::add_cor31(reg);
    cases::add_cor32(reg);
    cases::add_sec2(reg);
    cases::add_sec4(reg);
    cases::add_sec5(reg);
    return reg;
}

}  // namespace qmu
