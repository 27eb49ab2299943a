#pragma once

#include <doctest.h>

#include "qphase/core.hpp"

namespace qtest {

inline void check_close(const qphase::CMat& got, const qphase::CMat& want,
                        double tol = 1e-12) {
    CHECK(qphase::max_abs_diff(got, want) <= tol);
}

inline void check_close(qphase::cplx got, qphase::cplx want, double tol = 1e-12) {
    CHECK(std::abs(got - want) <= tol);
}

inline void check_close(const qphase::CVec& got, const qphase::CVec& want,
                        double tol = 1e-12) {
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace qtest
