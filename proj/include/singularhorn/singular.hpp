#pragma once

#include <string>
#include <vector>

#include "singularhorn/cone.hpp"
#include "singularhorn/partitions.hpp"
#include "singularhorn/rational.hpp"

namespace singularhorn {

/// Disjoint signed pair (X_plus, X_minus) of subsets of [q], nonempty union.
struct PolarizedSubset {
  std::vector<int> plus;   // strictly increasing
  std::vector<int> minus;  // strictly increasing
};

void validate_polarized(const PolarizedSubset& x, int q);
int cardinality(const PolarizedSubset& x);
bool operator==(const PolarizedSubset& a, const PolarizedSubset& b);

/// Number of pairs (a,b) in X_plus x X_minus with a < b.
long long crossing_number(const PolarizedSubset& x);

/// The r-subset of [p+q] keeping X_plus low and mirroring X_minus high:
/// X_plus together with {p+q+1-x : x in X_minus}. Requires p >= q.
Subset ambient_subset(const PolarizedSubset& x, int p, int q);

/// The partner r-subset of [p+q-r]: ranks of the mirrored set inside the
/// complement of the ambient subset, reflected.
Subset quotient_subset(const PolarizedSubset& x, int p, int q);

/// Increment (p'-p) * 1^r_{#X_plus} by which both the ambient and quotient
/// partitions shift when p grows to p'; verifies both shifts before
/// returning.
Partition width_shift(const PolarizedSubset& x, int p, int p_prime, int q);

/// Necessary admission conditions: common cardinality, the element-sum
/// identity against (p+q+1), and the quadratic crossing identity.
bool degree_conditions(const PolarizedSubset& I, const PolarizedSubset& J,
                       const PolarizedSubset& K, int p, int q);

enum class SingularMode { horn_pair, grassmann_pair_one, bk_flag_one, bk_flag_positive };
enum class Family { weyl, lidskii, signed_lidskii, thompson, other };

std::string to_string(SingularMode mode);
SingularMode singular_mode_from_string(const std::string& name);
std::string to_string(Family family);

/// One admitted facet candidate of Singular(p,q): the inequality
/// |x|_{I+} + |y|_{J+} + |z|_{K+} <= |x|_{I-} + |y|_{J-} + |z|_{K-}.
struct SingularInequality {
  int r = 0;
  PolarizedSubset I, J, K;
  SingularMode mode = SingularMode::grassmann_pair_one;
  std::vector<long long> certificate;  // {ell} for the flag modes, {ell', ell''} otherwise
  Family family = Family::other;
  bool regular = false;
  std::vector<int> coeffs;  // 3q entries in {-1,0,1}
  std::string label;
};

/// All ordered triples of polarized subsets of [q] admitted by the mode,
/// deduplicated by coefficient vector and sorted lexicographically on it.
std::vector<SingularInequality> generate_singular_inequalities(int p, int q, SingularMode mode,
                                                               int jobs = 1);

/// Pattern classification of the index structure, up to role permutation.
/// Advisory metadata; precedence weyl > lidskii > signed_lidskii > thompson.
Family classify_family(const PolarizedSubset& I, const PolarizedSubset& J,
                       const PolarizedSubset& K, int q);

/// Twice as many negative as positive terms, i.e. #I+ + #J+ + #K+ = r.
bool is_regular(const PolarizedSubset& I, const PolarizedSubset& J, const PolarizedSubset& K);

/// x~ = (x_1,...,x_q, 0,...,0, -x_q,...,-x_1) in R^{p+q}.
std::vector<Rational> symmetric_embedding(const std::vector<Rational>& x, int p, int q);

void validate_chamber_vector(const std::vector<Rational>& x, int q);

/// True iff every inequality generated for the mode holds. Chamber input
/// (weakly decreasing, nonnegative) is required.
bool singular_membership(const std::vector<Rational>& x, const std::vector<Rational>& y,
                         const std::vector<Rational>& z, int p, int q,
                         SingularMode mode = SingularMode::grassmann_pair_one);

/// Exact system on R^{3q} built from generated rows (no equalities).
InequalitySystem singular_system(const std::vector<SingularInequality>& rows, int q);

/// Chamber rows x_1 >= ... >= x_q >= 0 for the three spectra (3q rows).
InequalitySystem singular_chamber(int q);

struct StabilizationResult {
  bool stable = false;
  int minimal_count = 0;
  std::vector<std::string> non_regular;  // labels of non-regular minimal rows
};

/// Minimizes the horn_pair system over the chamber and reports whether every
/// surviving inequality is regular (equivalently, whether the description is
/// width-independent).
StabilizationResult stabilization_check(int p, int q, int jobs = 1);

/// Classical families of admitted triples; each passes the horn_pair test.
PolarizedSubset all_minus(const std::vector<int>& elems);
PolarizedSubset all_plus(const std::vector<int>& elems);
struct SingularTriple {
  PolarizedSubset I, J, K;
};
SingularTriple weyl_triple(int i, int j, int q);                            // i + j <= q+1
SingularTriple lidskii_triple(const std::vector<int>& s, int q);            // subset S of [q]
SingularTriple signed_lidskii_triple(const std::vector<int>& s, int flipped, int q);
SingularTriple thompson_triple(const std::vector<int>& i, const std::vector<int>& j, int q);

/// Every Weyl, Lidskii, signed Lidskii and Thompson triple for [q], as rows
/// with family tags and the grassmann pair certificate.
std::vector<SingularInequality> family_inequalities(int p, int q);

}  // namespace singularhorn
