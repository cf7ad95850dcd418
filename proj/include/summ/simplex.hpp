#pragma once

#include <vector>

#include "summ/types.hpp"

namespace summ {

enum class Relation { le, ge, eq };

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Vector x;
  double objective = 0.0;
};

// Minimizes c.x subject to A x {<=,>=,=} b, x >= 0, via a two-phase
// dense-tableau simplex. Bland's rule (smallest eligible index enters;
// ratio ties leave by smallest basic variable) guarantees termination.
LpResult simplex_solve(const Matrix& A, const std::vector<Relation>& relations,
                       const Vector& b, const Vector& c);

}  // namespace summ
