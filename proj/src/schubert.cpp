#include "singularhorn/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace singularhorn {

void validate_balanced(const BalancedPolarizedSubset& a) {
  validate_subset(a.plus);
  validate_subset(a.minus);
  if (a.plus.ambient != a.minus.ambient) {
    throw std::invalid_argument("polarized halves must share the ambient set");
  }
  if (a.plus.elements.empty() || a.plus.elements.size() != a.minus.elements.size()) {
    throw std::invalid_argument("balanced polarized subset needs equal nonempty halves");
  }
  std::vector<int> merged;
  std::set_intersection(a.plus.elements.begin(), a.plus.elements.end(), a.minus.elements.begin(),
                        a.minus.elements.end(), std::back_inserter(merged));
  if (!merged.empty()) {
    throw std::invalid_argument("polarized halves must be disjoint");
  }
}

Subset duality_partner(const Subset& subset) {
  validate_subset(subset);
  Subset out;
  out.ambient = subset.ambient;
  out.elements.reserve(subset.elements.size());
  for (auto it = subset.elements.rbegin(); it != subset.elements.rend(); ++it) {
    out.elements.push_back(subset.ambient + 1 - *it);
  }
  return out;
}

Subset quotient_subset(const BalancedPolarizedSubset& a) {
  validate_balanced(a);
  const int n = a.plus.ambient;
  const int r = static_cast<int>(a.plus.elements.size());
  const Subset comp = complement_subset(a.plus);  // {u_1 < ... < u_{n-r}}
  std::vector<int> ranks;                         // A' = ranks of A_minus within comp
  ranks.reserve(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < comp.elements.size(); ++i) {
    if (std::binary_search(a.minus.elements.begin(), a.minus.elements.end(), comp.elements[i])) {
      ranks.push_back(static_cast<int>(i) + 1);
    }
  }
  if (static_cast<int>(ranks.size()) != r) {
    throw std::invalid_argument("minus half must avoid the plus half");
  }
  Subset out;  // A'' = {k : n-r+1-k in A'}
  out.ambient = n - r;
  out.elements.reserve(static_cast<std::size_t>(r));
  for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
    out.elements.push_back(n - r + 1 - *it);
  }
  return out;
}

long long triple_intersection(const Subset& a, const Subset& b, const Subset& c) {
  validate_subset(a);
  validate_subset(b);
  validate_subset(c);
  const int m = a.ambient;
  const int r = static_cast<int>(a.elements.size());
  if (b.ambient != m || c.ambient != m) {
    throw std::invalid_argument("triple_intersection needs classes of one Grassmannian");
  }
  if (static_cast<int>(b.elements.size()) != r || static_cast<int>(c.elements.size()) != r) {
    throw std::invalid_argument("triple_intersection needs classes of equal cardinality");
  }
  const Partition la = subset_to_partition(a);
  const Partition lb = subset_to_partition(b);
  const Partition lc = subset_to_partition(c);
  if (la.weight() + lb.weight() + lc.weight() != static_cast<long long>(r) * (m - r)) return 0;
  return lr_coefficient(la, lb, complement_partition(lc, m - r));
}

long long two_step_product(const BalancedPolarizedSubset& a, const BalancedPolarizedSubset& b,
                           const BalancedPolarizedSubset& c) {
  validate_balanced(a);
  validate_balanced(b);
  validate_balanced(c);
  const int n = a.plus.ambient;
  const long long r = static_cast<long long>(a.plus.elements.size());
  if (b.plus.ambient != n || c.plus.ambient != n ||
      static_cast<long long>(b.plus.elements.size()) != r ||
      static_cast<long long>(c.plus.elements.size()) != r) {
    throw std::invalid_argument("two_step_product needs classes of one flag variety");
  }
  if (2 * r > n) throw std::invalid_argument("two_step_product requires r <= n/2");

  const long long plus_sum = element_sum(a.plus) + element_sum(b.plus) + element_sum(c.plus);
  const long long minus_sum = element_sum(a.minus) + element_sum(b.minus) + element_sum(c.minus);
  if (plus_sum != minus_sum + r * (n - r)) return 0;

  const long long first = triple_intersection(a.plus, b.plus, c.plus);
  if (first == 0) return 0;
  const long long second = triple_intersection(quotient_subset(a), quotient_subset(b), quotient_subset(c));
  return first * second;
}

}  // namespace singularhorn
