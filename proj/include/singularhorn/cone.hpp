#pragma once

#include <string>
#include <vector>

#include "singularhorn/rational.hpp"

namespace singularhorn {

/// One linear constraint: coeffs . v <= rhs (inequalities) or = rhs (equalities).
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs = 0;
  std::string label;
};

/// Finite system of exact-rational constraints on R^dimension. Labels are
/// unique per system.
struct InequalitySystem {
  int dimension = 0;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equalities;
};

void validate_system(const InequalitySystem& sys);

struct Violation {
  std::string label;
  Rational margin;  // lhs - rhs, positive when violated
};

struct EvalResult {
  bool member = false;
  std::vector<Violation> violations;
};

/// Exact membership of a point; collects the violated labels with margins.
EvalResult evaluate(const InequalitySystem& sys, const std::vector<Rational>& point);

struct ChamberStatus {
  std::string label;
  bool essential = false;
};

struct MinimizeResult {
  InequalitySystem minimized;          // surviving candidate rows, deterministic order
  std::vector<std::string> eliminated; // labels of removed rows (duplicates included)
  std::vector<ChamberStatus> chamber;  // essentiality of each chamber row
};

/// Removes every redundant candidate row of `sys`. A row is kept iff the LP
/// maximizing its violation subject to all other rows, the chamber rows and
/// the equalities (with a unit normalization cap) has strictly positive
/// optimum; the LP is solved exactly through its Farkas dual with Bland's
/// rule. Chamber rows are context: exempt from elimination, reported as
/// essential or not. Requires a homogeneous system (cone).
MinimizeResult minimize_system(const InequalitySystem& sys, const InequalitySystem& chamber,
                               int jobs = 1);

}  // namespace singularhorn
