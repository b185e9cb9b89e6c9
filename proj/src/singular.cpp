#include "singularhorn/singular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "singularhorn/horn.hpp"
#include "singularhorn/parallel.hpp"
#include "singularhorn/schubert.hpp"

namespace singularhorn {

void validate_polarized(const PolarizedSubset& x, int q) {
  auto check_half = [&](const std::vector<int>& half) {
    int prev = 0;
    for (int e : half) {
      if (e <= prev || e > q) {
        throw std::invalid_argument("polarized subset half must be strictly increasing within [q]");
      }
      prev = e;
    }
  };
  check_half(x.plus);
  check_half(x.minus);
  if (x.plus.empty() && x.minus.empty()) {
    throw std::invalid_argument("polarized subset must be nonempty");
  }
  std::vector<int> common;
  std::set_intersection(x.plus.begin(), x.plus.end(), x.minus.begin(), x.minus.end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw std::invalid_argument("polarized subset halves must be disjoint");
  }
}

int cardinality(const PolarizedSubset& x) {
  return static_cast<int>(x.plus.size() + x.minus.size());
}

bool operator==(const PolarizedSubset& a, const PolarizedSubset& b) {
  return a.plus == b.plus && a.minus == b.minus;
}

long long crossing_number(const PolarizedSubset& x) {
  long long count = 0;
  for (int a : x.plus) {
    for (int b : x.minus) {
      if (a < b) ++count;
    }
  }
  return count;
}

namespace {

void require_widths(const PolarizedSubset& x, int p, int q) {
  if (q < 1 || p < q) throw std::invalid_argument("requires p >= q >= 1");
  validate_polarized(x, q);
}

long long sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

}  // namespace

Subset ambient_subset(const PolarizedSubset& x, int p, int q) {
  require_widths(x, p, q);
  Subset out;
  out.ambient = p + q;
  out.elements = x.plus;
  for (auto it = x.minus.rbegin(); it != x.minus.rend(); ++it) {
    out.elements.push_back(p + q + 1 - *it);
  }
  validate_subset(out);
  return out;
}

Subset quotient_subset(const PolarizedSubset& x, int p, int q) {
  const Subset lifted = ambient_subset(x, p, q);
  return quotient_subset(BalancedPolarizedSubset{lifted, duality_partner(lifted)});
}

Partition width_shift(const PolarizedSubset& x, int p, int p_prime, int q) {
  if (p_prime < p) throw std::invalid_argument("width_shift requires p' >= p");
  require_widths(x, p, q);
  const int r = cardinality(x);
  std::vector<long long> parts(static_cast<std::size_t>(r), 0);
  for (std::size_t a = 0; a < x.plus.size(); ++a) parts[a] = p_prime - p;
  Partition increment(std::move(parts));

  const auto lift_before = subset_to_partition(ambient_subset(x, p, q));
  const auto lift_after = subset_to_partition(ambient_subset(x, p_prime, q));
  const auto quot_before = subset_to_partition(quotient_subset(x, p, q));
  const auto quot_after = subset_to_partition(quotient_subset(x, p_prime, q));
  for (int a = 0; a < r; ++a) {
    if (lift_after[a] - lift_before[a] != increment[a] ||
        quot_after[a] - quot_before[a] != increment[a]) {
      throw std::logic_error("width_shift increment mismatch");
    }
  }
  return increment;
}

bool degree_conditions(const PolarizedSubset& I, const PolarizedSubset& J,
                       const PolarizedSubset& K, int p, int q) {
  require_widths(I, p, q);
  validate_polarized(J, q);
  validate_polarized(K, q);
  const int r = cardinality(I);
  if (cardinality(J) != r || cardinality(K) != r) return false;

  const long long plus_card = static_cast<long long>(I.plus.size()) +
                              static_cast<long long>(J.plus.size()) +
                              static_cast<long long>(K.plus.size());
  const long long plus_sum = sum_of(I.plus) + sum_of(J.plus) + sum_of(K.plus);
  const long long minus_sum = sum_of(I.minus) + sum_of(J.minus) + sum_of(K.minus);
  const long long rr = static_cast<long long>(r);
  if (plus_sum - minus_sum + rr * (rr + 1) / 2 !=
      static_cast<long long>(p + q + 1) * (plus_card - rr)) {
    return false;
  }
  auto sq = [](long long v) { return v * v; };
  const long long quad = sq(static_cast<long long>(I.plus.size())) +
                         sq(static_cast<long long>(J.plus.size())) +
                         sq(static_cast<long long>(K.plus.size())) +
                         2 * (crossing_number(I) + crossing_number(J) + crossing_number(K));
  return quad == rr * rr;
}

std::string to_string(SingularMode mode) {
  switch (mode) {
    case SingularMode::horn_pair: return "horn_pair";
    case SingularMode::grassmann_pair_one: return "grassmann_pair_one";
    case SingularMode::bk_flag_one: return "bk_flag_one";
    case SingularMode::bk_flag_positive: return "bk_flag_positive";
  }
  throw std::logic_error("unknown singular mode");
}

SingularMode singular_mode_from_string(const std::string& name) {
  if (name == "horn_pair" || name == "horn-pair") return SingularMode::horn_pair;
  if (name == "grassmann_pair_one" || name == "grassmann-pair-one") {
    return SingularMode::grassmann_pair_one;
  }
  if (name == "bk_flag_one" || name == "bk-flag-one") return SingularMode::bk_flag_one;
  if (name == "bk_flag_positive" || name == "bk-flag-positive") {
    return SingularMode::bk_flag_positive;
  }
  throw std::invalid_argument("unknown singular mode '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::weyl: return "weyl";
    case Family::lidskii: return "lidskii";
    case Family::signed_lidskii: return "signed_lidskii";
    case Family::thompson: return "thompson";
    case Family::other: return "other";
  }
  throw std::logic_error("unknown family");
}

namespace {

std::string polarized_label(const PolarizedSubset& x) {
  std::string out = "{";
  std::size_t ip = 0, im = 0;
  bool first = true;
  while (ip < x.plus.size() || im < x.minus.size()) {
    const bool take_plus =
        im == x.minus.size() || (ip < x.plus.size() && x.plus[ip] < x.minus[im]);
    if (!first) out += ' ';
    first = false;
    if (take_plus) {
      out += '+' + std::to_string(x.plus[ip++]);
    } else {
      out += '-' + std::to_string(x.minus[im++]);
    }
  }
  out += '}';
  return out;
}

std::vector<int> triple_coeffs(const PolarizedSubset& I, const PolarizedSubset& J,
                               const PolarizedSubset& K, int q) {
  std::vector<int> coeffs(static_cast<std::size_t>(3 * q), 0);
  const PolarizedSubset* blocks[3] = {&I, &J, &K};
  for (int b = 0; b < 3; ++b) {
    for (int e : blocks[b]->plus) coeffs[static_cast<std::size_t>(b * q + e - 1)] = 1;
    for (int e : blocks[b]->minus) coeffs[static_cast<std::size_t>(b * q + e - 1)] = -1;
  }
  return coeffs;
}

SingularInequality make_row(const PolarizedSubset& I, const PolarizedSubset& J,
                            const PolarizedSubset& K, int q, SingularMode mode,
                            std::vector<long long> certificate) {
  SingularInequality row;
  row.r = cardinality(I);
  row.I = I;
  row.J = J;
  row.K = K;
  row.mode = mode;
  row.certificate = std::move(certificate);
  row.family = classify_family(I, J, K, q);
  row.regular = is_regular(I, J, K);
  row.coeffs = triple_coeffs(I, J, K, q);
  std::ostringstream label;
  label << "r=" << row.r << " I=" << polarized_label(I) << " J=" << polarized_label(J)
        << " K=" << polarized_label(K);
  row.label = label.str();
  return row;
}

std::vector<PolarizedSubset> polarized_subsets(int q, int r) {
  std::vector<PolarizedSubset> out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      PolarizedSubset x;
      for (int t = 0; t < r; ++t) {
        if (mask & (1u << t)) {
          x.plus.push_back(pick[static_cast<std::size_t>(t)]);
        } else {
          x.minus.push_back(pick[static_cast<std::size_t>(t)]);
        }
      }
      out.push_back(std::move(x));
    }
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == q - r + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

struct PreparedSubset {
  PolarizedSubset polarized;
  Subset lifted;
  Subset quotient;
  std::vector<long long> lifted_lambda;
  std::vector<long long> quotient_lambda;
};

std::vector<PreparedSubset> prepare_subsets(int p, int q, int r) {
  std::vector<PreparedSubset> out;
  for (auto& x : polarized_subsets(q, r)) {
    PreparedSubset prep;
    prep.lifted = ambient_subset(x, p, q);
    prep.quotient = quotient_subset(x, p, q);
    prep.lifted_lambda = subset_to_partition(prep.lifted).parts();
    prep.quotient_lambda = subset_to_partition(prep.quotient).parts();
    prep.polarized = std::move(x);
    out.push_back(std::move(prep));
  }
  return out;
}

std::vector<long long> shifted(const std::vector<long long>& v, long long delta) {
  std::vector<long long> out(v);
  for (auto& e : out) e -= delta;
  return out;
}

}  // namespace

std::vector<SingularInequality> generate_singular_inequalities(int p, int q, SingularMode mode,
                                                               int jobs) {
  if (q < 1 || p < q) throw std::invalid_argument("requires p >= q >= 1");
  const int n = p + q;
  std::vector<SingularInequality> rows;
  for (int r = 1; r <= q; ++r) {
    const auto prepared = prepare_subsets(p, q, r);
    const std::size_t count = prepared.size();
    const std::vector<HornInequality>* horn_rows = nullptr;
    if (mode == SingularMode::horn_pair) horn_rows = &horn_inequalities(r, HornMode::lr_one);

    std::vector<char> admitted(count * count * count, 0);
    std::vector<std::vector<long long>> certificates(count * count * count);
    parallel_for(count * count * count, jobs, [&](std::size_t idx) {
      const auto& I = prepared[idx / (count * count)];
      const auto& J = prepared[(idx / count) % count];
      const auto& K = prepared[idx % count];
      switch (mode) {
        case SingularMode::horn_pair: {
          if (!horn_member_ints(I.lifted_lambda, J.lifted_lambda,
                                shifted(K.lifted_lambda, n - r), *horn_rows)) {
            return;
          }
          if (!horn_member_ints(I.quotient_lambda, J.quotient_lambda,
                                shifted(K.quotient_lambda, n - 2 * r), *horn_rows)) {
            return;
          }
          admitted[idx] = 1;
          certificates[idx] = {1, 1};
          return;
        }
        case SingularMode::grassmann_pair_one: {
          const long long first = triple_intersection(I.lifted, J.lifted, K.lifted);
          if (first != 1) return;
          const long long second = triple_intersection(I.quotient, J.quotient, K.quotient);
          if (second != 1) return;
          admitted[idx] = 1;
          certificates[idx] = {first, second};
          return;
        }
        case SingularMode::bk_flag_one:
        case SingularMode::bk_flag_positive: {
          auto hat = [](const Subset& lifted) {
            return BalancedPolarizedSubset{lifted, duality_partner(lifted)};
          };
          const long long ell = two_step_product(hat(I.lifted), hat(J.lifted), hat(K.lifted));
          const bool ok = mode == SingularMode::bk_flag_one ? ell == 1 : ell >= 1;
          if (!ok) return;
          admitted[idx] = 1;
          certificates[idx] = {ell};
          return;
        }
      }
    });

    for (std::size_t idx = 0; idx < admitted.size(); ++idx) {
      if (!admitted[idx]) continue;
      const auto& I = prepared[idx / (count * count)];
      const auto& J = prepared[(idx / count) % count];
      const auto& K = prepared[idx % count];
      rows.push_back(make_row(I.polarized, J.polarized, K.polarized, q, mode,
                              std::move(certificates[idx])));
    }
  }

  // The coefficient vector is the deduplication key and the sort key.
  std::sort(rows.begin(), rows.end(), [](const SingularInequality& a, const SingularInequality& b) {
    return a.coeffs < b.coeffs;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const SingularInequality& a, const SingularInequality& b) {
                           return a.coeffs == b.coeffs;
                         }),
             rows.end());
  return rows;
}

namespace {

bool is_full_prefix_minus(const PolarizedSubset& x, int r) {
  if (!x.plus.empty() || static_cast<int>(x.minus.size()) != r) return false;
  for (int a = 0; a < r; ++a) {
    if (x.minus[static_cast<std::size_t>(a)] != a + 1) return false;
  }
  return true;
}

bool matches_lidskii(const PolarizedSubset& full, const PolarizedSubset& neg,
                     const PolarizedSubset& pos, int r) {
  if (!is_full_prefix_minus(full, r)) return false;
  if (!neg.plus.empty() || !pos.minus.empty()) return false;
  return neg.minus == pos.plus && static_cast<int>(pos.plus.size()) == r;
}

bool matches_signed_lidskii(const PolarizedSubset& full, const PolarizedSubset& a,
                            const PolarizedSubset& b, int r) {
  if (!is_full_prefix_minus(full, r)) return false;
  if (a.plus.size() != 1 || static_cast<int>(a.minus.size()) != r - 1) return false;
  return a.plus == b.minus && a.minus == b.plus;
}

bool matches_thompson(const PolarizedSubset& i, const PolarizedSubset& j,
                      const PolarizedSubset& k, int r) {
  if (!i.plus.empty() || !j.plus.empty() || !k.minus.empty()) return false;
  if (static_cast<int>(k.plus.size()) != r) return false;
  for (int a = 0; a < r; ++a) {
    if (k.plus[static_cast<std::size_t>(a)] !=
        i.minus[static_cast<std::size_t>(a)] + j.minus[static_cast<std::size_t>(a)] - (a + 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace

Family classify_family(const PolarizedSubset& I, const PolarizedSubset& J,
                       const PolarizedSubset& K, int q) {
  validate_polarized(I, q);
  validate_polarized(J, q);
  validate_polarized(K, q);
  const int r = cardinality(I);
  if (cardinality(J) != r || cardinality(K) != r) return Family::other;
  const PolarizedSubset* f[3] = {&I, &J, &K};

  if (r == 1) {
    for (int pos = 0; pos < 3; ++pos) {
      const auto& plus_factor = *f[pos];
      if (plus_factor.plus.size() != 1) continue;
      const auto& a = *f[(pos + 1) % 3];
      const auto& b = *f[(pos + 2) % 3];
      if (a.minus.size() != 1 || b.minus.size() != 1) continue;
      if (plus_factor.plus[0] == a.minus[0] + b.minus[0] - 1) return Family::weyl;
    }
  }
  for (int full = 0; full < 3; ++full) {
    const auto& a = *f[(full + 1) % 3];
    const auto& b = *f[(full + 2) % 3];
    if (matches_lidskii(*f[full], a, b, r) || matches_lidskii(*f[full], b, a, r)) {
      return Family::lidskii;
    }
  }
  for (int full = 0; full < 3; ++full) {
    const auto& a = *f[(full + 1) % 3];
    const auto& b = *f[(full + 2) % 3];
    if (matches_signed_lidskii(*f[full], a, b, r) || matches_signed_lidskii(*f[full], b, a, r)) {
      return Family::signed_lidskii;
    }
  }
  for (int pos = 0; pos < 3; ++pos) {
    const auto& i = *f[(pos + 1) % 3];
    const auto& j = *f[(pos + 2) % 3];
    if (matches_thompson(i, j, *f[pos], r)) return Family::thompson;
  }
  return Family::other;
}

bool is_regular(const PolarizedSubset& I, const PolarizedSubset& J, const PolarizedSubset& K) {
  const std::size_t plus = I.plus.size() + J.plus.size() + K.plus.size();
  const std::size_t minus = I.minus.size() + J.minus.size() + K.minus.size();
  return minus == 2 * plus;
}

void validate_chamber_vector(const std::vector<Rational>& x, int q) {
  if (static_cast<int>(x.size()) != q) {
    throw std::invalid_argument("chamber vector must have length q");
  }
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] < x[i + 1]) throw std::invalid_argument("chamber vector must be weakly decreasing");
  }
  if (!x.empty() && x.back() < 0) {
    throw std::invalid_argument("chamber vector must be nonnegative");
  }
}

std::vector<Rational> symmetric_embedding(const std::vector<Rational>& x, int p, int q) {
  if (q < 1 || p < q) throw std::invalid_argument("requires p >= q >= 1");
  validate_chamber_vector(x, q);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p + q));
  for (const auto& v : x) out.push_back(v);
  for (int i = 0; i < p - q; ++i) out.push_back(0);
  for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
  return out;
}

bool singular_membership(const std::vector<Rational>& x, const std::vector<Rational>& y,
                         const std::vector<Rational>& z, int p, int q, SingularMode mode) {
  validate_chamber_vector(x, q);
  validate_chamber_vector(y, q);
  validate_chamber_vector(z, q);
  const auto rows = generate_singular_inequalities(p, q, mode);
  for (const auto& row : rows) {
    Rational lhs = 0;
    for (int i = 0; i < q; ++i) {
      if (row.coeffs[static_cast<std::size_t>(i)] != 0) {
        lhs += Rational(row.coeffs[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)];
      }
      if (row.coeffs[static_cast<std::size_t>(q + i)] != 0) {
        lhs += Rational(row.coeffs[static_cast<std::size_t>(q + i)]) * y[static_cast<std::size_t>(i)];
      }
      if (row.coeffs[static_cast<std::size_t>(2 * q + i)] != 0) {
        lhs += Rational(row.coeffs[static_cast<std::size_t>(2 * q + i)]) * z[static_cast<std::size_t>(i)];
      }
    }
    if (lhs > 0) return false;
  }
  return true;
}

InequalitySystem singular_system(const std::vector<SingularInequality>& rows, int q) {
  InequalitySystem sys;
  sys.dimension = 3 * q;
  for (const auto& row : rows) {
    LinearRow lin;
    lin.coeffs.assign(row.coeffs.begin(), row.coeffs.end());
    lin.rhs = 0;
    lin.label = row.label;
    sys.inequalities.push_back(std::move(lin));
  }
  return sys;
}

InequalitySystem singular_chamber(int q) {
  InequalitySystem chamber;
  chamber.dimension = 3 * q;
  const char* names[3] = {"x", "y", "z"};
  for (int block = 0; block < 3; ++block) {
    for (int i = 1; i <= q; ++i) {
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(3 * q), Rational(0));
      row.rhs = 0;
      if (i < q) {
        row.coeffs[static_cast<std::size_t>(block * q + i - 1)] = -1;
        row.coeffs[static_cast<std::size_t>(block * q + i)] = 1;
        row.label = std::string("chamber ") + names[block] + std::to_string(i) + ">=" +
                    names[block] + std::to_string(i + 1);
      } else {
        row.coeffs[static_cast<std::size_t>(block * q + q - 1)] = -1;
        row.label = std::string("chamber ") + names[block] + std::to_string(q) + ">=0";
      }
      chamber.inequalities.push_back(std::move(row));
    }
  }
  return chamber;
}

StabilizationResult stabilization_check(int p, int q, int jobs) {
  const auto rows = generate_singular_inequalities(p, q, SingularMode::horn_pair, jobs);
  std::map<std::string, const SingularInequality*> by_label;
  for (const auto& row : rows) by_label.emplace(row.label, &row);
  const auto minimized = minimize_system(singular_system(rows, q), singular_chamber(q), jobs);
  StabilizationResult result;
  result.minimal_count = static_cast<int>(minimized.minimized.inequalities.size());
  result.stable = true;
  for (const auto& kept : minimized.minimized.inequalities) {
    const auto* source = by_label.at(kept.label);
    if (!source->regular) {
      result.stable = false;
      result.non_regular.push_back(kept.label);
    }
  }
  return result;
}

PolarizedSubset all_minus(const std::vector<int>& elems) { return PolarizedSubset{{}, elems}; }
PolarizedSubset all_plus(const std::vector<int>& elems) { return PolarizedSubset{elems, {}}; }

SingularTriple weyl_triple(int i, int j, int q) {
  if (i < 1 || j < 1 || i + j > q + 1) {
    throw std::invalid_argument("weyl_triple requires i + j <= q + 1");
  }
  return SingularTriple{all_minus({i}), all_minus({j}), all_plus({i + j - 1})};
}

namespace {

std::vector<int> prefix(int r) {
  std::vector<int> out(static_cast<std::size_t>(r));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

}  // namespace

SingularTriple lidskii_triple(const std::vector<int>& s, int q) {
  const int r = static_cast<int>(s.size());
  if (r < 1 || s.back() > q) throw std::invalid_argument("lidskii_triple needs a subset of [q]");
  return SingularTriple{all_minus(prefix(r)), all_minus(s), all_plus(s)};
}

SingularTriple signed_lidskii_triple(const std::vector<int>& s, int flipped, int q) {
  const int r = static_cast<int>(s.size());
  if (r < 1 || s.back() > q) throw std::invalid_argument("signed_lidskii_triple needs a subset of [q]");
  if (!std::binary_search(s.begin(), s.end(), flipped)) {
    throw std::invalid_argument("flipped index must belong to the subset");
  }
  std::vector<int> rest;
  for (int e : s) {
    if (e != flipped) rest.push_back(e);
  }
  return SingularTriple{all_minus(prefix(r)), PolarizedSubset{{flipped}, rest},
                        PolarizedSubset{rest, {flipped}}};
}

SingularTriple thompson_triple(const std::vector<int>& i, const std::vector<int>& j, int q) {
  const int r = static_cast<int>(i.size());
  if (r < 1 || static_cast<int>(j.size()) != r) {
    throw std::invalid_argument("thompson_triple needs equal cardinalities");
  }
  if (i.back() + j.back() - r > q) {
    throw std::invalid_argument("thompson_triple requires i_r + j_r - r <= q");
  }
  std::vector<int> k(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    k[static_cast<std::size_t>(a)] =
        i[static_cast<std::size_t>(a)] + j[static_cast<std::size_t>(a)] - (a + 1);
  }
  return SingularTriple{all_minus(i), all_minus(j), all_plus(k)};
}

namespace {

std::vector<std::vector<int>> subsets_of(int q, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == q - r + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < r; ++t) {
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return out;
}

}  // namespace

std::vector<SingularInequality> family_inequalities(int p, int q) {
  if (q < 1 || p < q) throw std::invalid_argument("requires p >= q >= 1");
  std::vector<std::pair<SingularTriple, Family>> triples;
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; i + j <= q + 1; ++j) triples.emplace_back(weyl_triple(i, j, q), Family::weyl);
  }
  for (int r = 1; r <= q; ++r) {
    for (const auto& s : subsets_of(q, r)) {
      triples.emplace_back(lidskii_triple(s, q), Family::lidskii);
      for (int flipped : s) {
        triples.emplace_back(signed_lidskii_triple(s, flipped, q), Family::signed_lidskii);
      }
      for (const auto& j : subsets_of(q, r)) {
        if (s.back() + j.back() - r <= q) {
          triples.emplace_back(thompson_triple(s, j, q), Family::thompson);
        }
      }
    }
  }
  std::vector<SingularInequality> rows;
  for (const auto& entry : triples) {
    const auto& triple = entry.first;
    const long long first = triple_intersection(ambient_subset(triple.I, p, q),
                                                ambient_subset(triple.J, p, q),
                                                ambient_subset(triple.K, p, q));
    const long long second = triple_intersection(quotient_subset(triple.I, p, q),
                                                 quotient_subset(triple.J, p, q),
                                                 quotient_subset(triple.K, p, q));
    rows.push_back(make_row(triple.I, triple.J, triple.K, q, SingularMode::grassmann_pair_one,
                            {first, second}));
  }
  std::sort(rows.begin(), rows.end(), [](const SingularInequality& a, const SingularInequality& b) {
    return a.coeffs < b.coeffs;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const SingularInequality& a, const SingularInequality& b) {
                           return a.coeffs == b.coeffs;
                         }),
             rows.end());
  return rows;
}

}  // namespace singularhorn
