#include "singularhorn/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace singularhorn {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (parts_[a] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (a + 1 < parts_.size() && parts_[a] < parts_[a + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::zero(int length) {
  if (length < 0) throw std::invalid_argument("negative partition length");
  return Partition(std::vector<long long>(static_cast<std::size_t>(length), 0));
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](long long p) { return p == 0; });
}

Partition Partition::trimmed() const {
  std::vector<long long> t = parts_;
  while (!t.empty() && t.back() == 0) t.pop_back();
  return Partition(std::move(t));
}

bool Partition::operator==(const Partition& other) const {
  std::size_t n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t a = 0; a < n; ++a) {
    long long lhs = a < parts_.size() ? parts_[a] : 0;
    long long rhs = a < other.parts_.size() ? other.parts_[a] : 0;
    if (lhs != rhs) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (a) out << ',';
    out << parts_[a];
  }
  out << ')';
  return out.str();
}

void validate_subset(const Subset& s) {
  if (s.ambient < 0) throw std::invalid_argument("subset ambient must be positive");
  int prev = 0;
  for (int e : s.elements) {
    if (e <= prev || e > s.ambient) {
      throw std::invalid_argument("subset elements must be strictly increasing within [m]");
    }
    prev = e;
  }
}

long long element_sum(const Subset& s) {
  return std::accumulate(s.elements.begin(), s.elements.end(), 0LL);
}

Subset complement_subset(const Subset& s) {
  validate_subset(s);
  Subset out;
  out.ambient = s.ambient;
  std::size_t k = 0;
  for (int v = 1; v <= s.ambient; ++v) {
    if (k < s.elements.size() && s.elements[k] == v) {
      ++k;
    } else {
      out.elements.push_back(v);
    }
  }
  return out;
}

bool operator==(const Subset& a, const Subset& b) {
  return a.ambient == b.ambient && a.elements == b.elements;
}

Partition subset_to_partition(const Subset& subset) {
  validate_subset(subset);
  const int r = static_cast<int>(subset.elements.size());
  if (r == 0) throw std::invalid_argument("subset_to_partition requires a nonempty subset");
  const int m = subset.ambient;
  std::vector<long long> parts(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) {
    parts[static_cast<std::size_t>(a - 1)] = m - r + a - subset.elements[static_cast<std::size_t>(a - 1)];
  }
  return Partition(std::move(parts));
}

Subset subset_from_partition(const Partition& lambda, int m) {
  const int r = lambda.length();
  if (r == 0 || r > m) throw std::invalid_argument("partition length must lie in [1, m]");
  if (lambda[0] > m - r) throw std::invalid_argument("partition does not fit in the r x (m-r) box");
  Subset out;
  out.ambient = m;
  out.elements.resize(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) {
    out.elements[static_cast<std::size_t>(a - 1)] = static_cast<int>(m - r + a - lambda[a - 1]);
  }
  validate_subset(out);
  return out;
}

Partition complement_partition(const Partition& lambda, long long box_width) {
  const int r = lambda.length();
  if (r > 0 && lambda[0] > box_width) {
    throw std::invalid_argument("partition exceeds the complement box width");
  }
  std::vector<long long> parts(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    parts[static_cast<std::size_t>(a)] = box_width - lambda[r - 1 - a];
  }
  return Partition(std::move(parts));
}

namespace {

std::string memo_key(const Partition& lambda, const Partition& mu, const Partition& nu) {
  auto append = [](std::string& s, const Partition& p) {
    const auto trimmed = p.trimmed();
    for (int a = 0; a < trimmed.length(); ++a) {
      if (a) s += ',';
      s += std::to_string(trimmed[a]);
    }
  };
  std::string key;
  append(key, lambda);
  key += '|';
  append(key, mu);
  key += '|';
  append(key, nu);
  return key;
}

std::shared_mutex lr_memo_mutex;
std::unordered_map<std::string, long long> lr_memo;

// Counts fillings of nu/lambda with content mu, cells visited in reverse
// reading order (rows top to bottom, right to left within a row) so the
// lattice condition prunes incrementally.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& nu, const Partition& mu)
      : inner_(lambda), outer_(nu), content_(mu) {
    for (int i = 0; i < outer_.length(); ++i) {
      long long lo = i < inner_.length() ? inner_[i] : 0;
      for (long long j = outer_[i]; j > lo; --j) {
        cells_.push_back({i, j});
      }
    }
    counts_.assign(static_cast<std::size_t>(content_.length()) + 1, 0);
    grid_.assign(static_cast<std::size_t>(outer_.length()), {});
    for (int i = 0; i < outer_.length(); ++i) {
      grid_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(outer_[i]) + 1, 0);
    }
  }

  long long count() {
    total_ = 0;
    fill(0);
    return total_;
  }

 private:
  struct Cell {
    int row;
    long long col;
  };

  void fill(std::size_t idx) {
    if (idx == cells_.size()) {
      ++total_;
      return;
    }
    const auto [row, col] = cells_[idx];
    int max_value = content_.length();
    // Row-weak bound from the right neighbour (already placed).
    if (col < outer_[row]) {
      max_value = std::min<int>(max_value, grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)]);
    }
    // Column-strict bound from the cell above (already placed when filled).
    int min_value = 1;
    if (row > 0) {
      long long above_lo = row - 1 < inner_.length() ? inner_[row - 1] : 0;
      if (col > above_lo && col <= outer_[row - 1]) {
        min_value = grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1;
      }
    }
    for (int t = min_value; t <= max_value; ++t) {
      if (counts_[static_cast<std::size_t>(t)] >= content_[t - 1]) continue;
      if (t > 1 && counts_[static_cast<std::size_t>(t - 1)] <= counts_[static_cast<std::size_t>(t)]) continue;
      counts_[static_cast<std::size_t>(t)]++;
      grid_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = t;
      fill(idx + 1);
      counts_[static_cast<std::size_t>(t)]--;
    }
  }

  Partition inner_;
  Partition outer_;
  Partition content_;
  std::vector<Cell> cells_;
  std::vector<long long> counts_;
  std::vector<std::vector<int>> grid_;
  long long total_ = 0;
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const Partition l = lambda.trimmed();
  const Partition m = mu.trimmed();
  const Partition n = nu.trimmed();
  if (n.weight() != l.weight() + m.weight()) return 0;
  if (l.length() > n.length()) return 0;
  for (int a = 0; a < l.length(); ++a) {
    if (l[a] > n[a]) return 0;
  }
  if (m.length() > n.length()) return 0;
  if (l.length() == n.length() && l.weight() == n.weight()) return m.weight() == 0 ? 1 : 0;
  if (m.weight() == 0) return 0;  // shapes differ but nothing to place

  const std::string key = memo_key(l, m, n);
  {
    std::shared_lock lock(lr_memo_mutex);
    auto it = lr_memo.find(key);
    if (it != lr_memo.end()) return it->second;
  }
  long long value = LrCounter(l, n, m).count();
  {
    std::unique_lock lock(lr_memo_mutex);
    lr_memo.emplace(key, value);
  }
  return value;
}

std::vector<std::pair<std::string, long long>> lr_memo_snapshot() {
  std::shared_lock lock(lr_memo_mutex);
  return {lr_memo.begin(), lr_memo.end()};
}

void lr_memo_merge(const std::vector<std::pair<std::string, long long>>& entries) {
  std::unique_lock lock(lr_memo_mutex);
  for (const auto& [key, value] : entries) lr_memo.emplace(key, value);
}

}  // namespace singularhorn
