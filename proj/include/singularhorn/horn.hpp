#pragma once

#include <memory>
#include <string>
#include <vector>

#include "singularhorn/cone.hpp"
#include "singularhorn/partitions.hpp"
#include "singularhorn/rational.hpp"

namespace singularhorn {

enum class HornMode { lr_positive, lr_one, recursive };

std::string to_string(HornMode mode);
HornMode horn_mode_from_string(const std::string& name);

/// One admitted triple (r, I, J, K): the inequality |x|_I + |y|_J + |z|_K <= 0.
struct HornInequality {
  int r = 0;
  Subset I, J, K;
  HornMode mode = HornMode::lr_one;
  long long certificate = 0;  // LR value for the lr modes, 1 for recursive
  std::vector<int> coeffs;    // 3n entries in {0,1}
  std::string label;
};

/// All admitted triples for levels r in [n-1], sorted lexicographically by
/// coefficient vector. lr_positive admits LR certificate >= 1, lr_one
/// exactly 1, recursive tests Horn(r) membership of the shifted partition
/// triple (bottoming out at the trace-only Horn(1)).
std::vector<HornInequality> generate_horn_inequalities(int n, HornMode mode);

/// Memoized access to the generated lists; safe for concurrent callers.
const std::vector<HornInequality>& horn_inequalities(int n, HornMode mode);

/// Weakly decreasing exact-rational triple in (R^n)^3.
struct RealTriple {
  std::vector<Rational> x, y, z;
};

void validate_real_triple(const RealTriple& t, int n);

/// True iff |x|+|y|+|z| = 0 and every generated inequality holds.
bool horn_membership(const RealTriple& t, int n, HornMode mode = HornMode::lr_one);

/// Integer fast path used by the singular generators.
bool horn_member_ints(const std::vector<long long>& x, const std::vector<long long>& y,
                      const std::vector<long long>& z, const std::vector<HornInequality>& rows);

/// The generated rows plus the trace equality as an exact system on R^{3n}.
InequalitySystem horn_system(int n, HornMode mode);

/// Weakly-decreasing chamber rows for the three spectra (no sign constraint).
InequalitySystem horn_chamber(int n);

/// Registry persistence hooks (used by the CLI cache).
struct HornCacheEntry {
  int n = 0;
  HornMode mode = HornMode::lr_one;
  std::vector<HornInequality> rows;
};
std::vector<HornCacheEntry> horn_registry_snapshot();
void horn_registry_merge(std::vector<HornCacheEntry> entries);

}  // namespace singularhorn
