#include "singularhorn/horn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "singularhorn/schubert.hpp"

namespace singularhorn {

std::string to_string(HornMode mode) {
  switch (mode) {
    case HornMode::lr_positive: return "lr_positive";
    case HornMode::lr_one: return "lr_one";
    case HornMode::recursive: return "recursive";
  }
  throw std::logic_error("unknown horn mode");
}

HornMode horn_mode_from_string(const std::string& name) {
  if (name == "lr_positive" || name == "lr-positive") return HornMode::lr_positive;
  if (name == "lr_one" || name == "lr-one") return HornMode::lr_one;
  if (name == "recursive") return HornMode::recursive;
  throw std::invalid_argument("unknown horn mode '" + name + "'");
}

namespace {

std::vector<Subset> all_subsets(int n, int r) {
  std::vector<Subset> out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(Subset{pick, n});
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - r + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::string subset_label(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s.elements[i]);
  }
  out += '}';
  return out;
}

HornInequality make_row(int n, int r, const Subset& I, const Subset& J, const Subset& K,
                        HornMode mode, long long certificate) {
  HornInequality row;
  row.r = r;
  row.I = I;
  row.J = J;
  row.K = K;
  row.mode = mode;
  row.certificate = certificate;
  row.coeffs.assign(static_cast<std::size_t>(3 * n), 0);
  for (int i : I.elements) row.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  for (int j : J.elements) row.coeffs[static_cast<std::size_t>(n + j - 1)] = 1;
  for (int k : K.elements) row.coeffs[static_cast<std::size_t>(2 * n + k - 1)] = 1;
  std::ostringstream label;
  label << "r=" << r << " I=" << subset_label(I) << " J=" << subset_label(J)
        << " K=" << subset_label(K);
  row.label = label.str();
  return row;
}

std::mutex registry_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const std::vector<HornInequality>>> registry;

std::shared_ptr<const std::vector<HornInequality>> registry_lookup(int n, HornMode mode) {
  std::lock_guard lock(registry_mutex);
  auto it = registry.find({n, static_cast<int>(mode)});
  return it == registry.end() ? nullptr : it->second;
}

void registry_store(int n, HornMode mode, std::shared_ptr<const std::vector<HornInequality>> rows) {
  std::lock_guard lock(registry_mutex);
  registry.emplace(std::pair<int, int>{n, static_cast<int>(mode)}, std::move(rows));
}

std::vector<long long> shifted_third(const Partition& lambda, long long shift) {
  std::vector<long long> out(lambda.parts());
  for (auto& v : out) v -= shift;
  return out;
}

}  // namespace

bool horn_member_ints(const std::vector<long long>& x, const std::vector<long long>& y,
                      const std::vector<long long>& z, const std::vector<HornInequality>& rows) {
  long long trace = std::accumulate(x.begin(), x.end(), 0LL) +
                    std::accumulate(y.begin(), y.end(), 0LL) +
                    std::accumulate(z.begin(), z.end(), 0LL);
  if (trace != 0) return false;
  for (const auto& row : rows) {
    long long lhs = 0;
    for (int i : row.I.elements) lhs += x[static_cast<std::size_t>(i - 1)];
    for (int j : row.J.elements) lhs += y[static_cast<std::size_t>(j - 1)];
    for (int k : row.K.elements) lhs += z[static_cast<std::size_t>(k - 1)];
    if (lhs > 0) return false;
  }
  return true;
}

std::vector<HornInequality> generate_horn_inequalities(int n, HornMode mode) {
  if (n < 1) throw std::invalid_argument("horn generation requires n >= 1");
  std::vector<HornInequality> rows;
  for (int r = 1; r <= n - 1; ++r) {
    const auto subsets = all_subsets(n, r);
    const std::vector<HornInequality>* recursive_rows = nullptr;
    if (mode == HornMode::recursive) {
      recursive_rows = &horn_inequalities(r, HornMode::recursive);
    }
    std::vector<Partition> lambdas;
    lambdas.reserve(subsets.size());
    for (const auto& s : subsets) lambdas.push_back(subset_to_partition(s));
    for (std::size_t ia = 0; ia < subsets.size(); ++ia) {
      for (std::size_t ja = 0; ja < subsets.size(); ++ja) {
        for (std::size_t ka = 0; ka < subsets.size(); ++ka) {
          if (mode == HornMode::recursive) {
            const auto third = shifted_third(lambdas[ka], n - r);
            if (!horn_member_ints(lambdas[ia].parts(), lambdas[ja].parts(), third,
                                  *recursive_rows)) {
              continue;
            }
            rows.push_back(make_row(n, r, subsets[ia], subsets[ja], subsets[ka], mode, 1));
          } else {
            const long long cert =
                triple_intersection(subsets[ia], subsets[ja], subsets[ka]);
            const bool admit = mode == HornMode::lr_one ? cert == 1 : cert >= 1;
            if (!admit) continue;
            rows.push_back(make_row(n, r, subsets[ia], subsets[ja], subsets[ka], mode, cert));
          }
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const HornInequality& a, const HornInequality& b) { return a.coeffs < b.coeffs; });
  return rows;
}

const std::vector<HornInequality>& horn_inequalities(int n, HornMode mode) {
  if (auto hit = registry_lookup(n, mode)) return *hit;
  auto rows = std::make_shared<const std::vector<HornInequality>>(
      generate_horn_inequalities(n, mode));
  registry_store(n, mode, rows);
  return *registry_lookup(n, mode);
}

void validate_real_triple(const RealTriple& t, int n) {
  for (const auto* v : {&t.x, &t.y, &t.z}) {
    if (static_cast<int>(v->size()) != n) {
      throw std::invalid_argument("triple entries must have length n");
    }
    for (std::size_t i = 0; i + 1 < v->size(); ++i) {
      if ((*v)[i] < (*v)[i + 1]) {
        throw std::invalid_argument("triple entries must be weakly decreasing");
      }
    }
  }
}

bool horn_membership(const RealTriple& t, int n, HornMode mode) {
  validate_real_triple(t, n);
  Rational trace = 0;
  for (const auto* v : {&t.x, &t.y, &t.z}) {
    for (const auto& c : *v) trace += c;
  }
  if (trace != 0) return false;
  for (const auto& row : horn_inequalities(n, mode)) {
    Rational lhs = 0;
    for (int i : row.I.elements) lhs += t.x[static_cast<std::size_t>(i - 1)];
    for (int j : row.J.elements) lhs += t.y[static_cast<std::size_t>(j - 1)];
    for (int k : row.K.elements) lhs += t.z[static_cast<std::size_t>(k - 1)];
    if (lhs > 0) return false;
  }
  return true;
}

InequalitySystem horn_system(int n, HornMode mode) {
  InequalitySystem sys;
  sys.dimension = 3 * n;
  for (const auto& row : horn_inequalities(n, mode)) {
    LinearRow lin;
    lin.coeffs.assign(row.coeffs.begin(), row.coeffs.end());
    lin.rhs = 0;
    lin.label = row.label;
    sys.inequalities.push_back(std::move(lin));
  }
  LinearRow trace;
  trace.coeffs.assign(static_cast<std::size_t>(3 * n), Rational(1));
  trace.rhs = 0;
  trace.label = "trace";
  sys.equalities.push_back(std::move(trace));
  return sys;
}

InequalitySystem horn_chamber(int n) {
  InequalitySystem chamber;
  chamber.dimension = 3 * n;
  const char* names[3] = {"x", "y", "z"};
  for (int block = 0; block < 3; ++block) {
    for (int i = 1; i < n; ++i) {
      LinearRow row;
      row.coeffs.assign(static_cast<std::size_t>(3 * n), Rational(0));
      row.coeffs[static_cast<std::size_t>(block * n + i - 1)] = -1;
      row.coeffs[static_cast<std::size_t>(block * n + i)] = 1;
      row.rhs = 0;
      row.label = std::string("chamber ") + names[block] + std::to_string(i) + ">=" +
                  names[block] + std::to_string(i + 1);
      chamber.inequalities.push_back(std::move(row));
    }
  }
  return chamber;
}

std::vector<HornCacheEntry> horn_registry_snapshot() {
  std::lock_guard lock(registry_mutex);
  std::vector<HornCacheEntry> out;
  out.reserve(registry.size());
  for (const auto& [key, rows] : registry) {
    out.push_back(HornCacheEntry{key.first, static_cast<HornMode>(key.second), *rows});
  }
  return out;
}

void horn_registry_merge(std::vector<HornCacheEntry> entries) {
  std::lock_guard lock(registry_mutex);
  for (auto& entry : entries) {
    registry.emplace(std::pair<int, int>{entry.n, static_cast<int>(entry.mode)},
                     std::make_shared<const std::vector<HornInequality>>(std::move(entry.rows)));
  }
}

}  // namespace singularhorn
