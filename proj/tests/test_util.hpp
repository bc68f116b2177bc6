#pragma once

#include <gtest/gtest.h>

#include "qmu/core.hpp"

inline double rel_dist(qmu::cplx a, qmu::cplx b) { return std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300); }

/// Relative agreement |a - b| / (|a| + |b|) <= tol; accepts a streamed message.
#define EXPECT_CLOSE(a, b, tol) \
    EXPECT_LE(rel_dist((a), (b)), (tol)) << #a << " = " << qmu::cplx(a) << ", " << #b << " = " << qmu::cplx(b) << " "
