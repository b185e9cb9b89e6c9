#pragma once

#include "singularhorn/partitions.hpp"

namespace singularhorn {

/// Disjoint pair of r-subsets of [n]; indexes a Schubert class of the
/// two-step flag variety F(r, n-r; n).
struct BalancedPolarizedSubset {
  Subset plus;
  Subset minus;
};

void validate_balanced(const BalancedPolarizedSubset& a);

/// I^o = {m+1-k : k in I}.
Subset duality_partner(const Subset& subset);

/// The subset A'' of [n-r] indexing the second Grassmannian factor:
/// ranks of A_minus inside the complement of A_plus, reflected.
Subset quotient_subset(const BalancedPolarizedSubset& a);

/// ell with [X_A].[X_B].[X_C] = ell [pt] in H*(G(r,m)); 0 when the
/// codimensions do not sum to r(m-r). Reduces to an LR coefficient against
/// the box complement of lambda(C).
long long triple_intersection(const Subset& a, const Subset& b, const Subset& c);

/// Belkale-Kumar product [X_A] o_0 [X_B] o_0 [X_C] = ell [pt] on
/// F(r, n-r; n), through the two-Grassmannian factorization ell = ell' ell''
/// gated by the element-sum degree condition. Returns 0 when any of the
/// three conditions fails.
long long two_step_product(const BalancedPolarizedSubset& a, const BalancedPolarizedSubset& b,
                           const BalancedPolarizedSubset& c);

}  // namespace singularhorn
