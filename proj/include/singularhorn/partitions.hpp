#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace singularhorn {

/// Weakly decreasing sequence of nonnegative integers. The stored length is
/// significant (trailing zeros are kept, box complements depend on them);
/// equality comparison ignores trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long long> parts);
  static Partition zero(int length);

  int length() const { return static_cast<int>(parts_.size()); }
  long long operator[](int a) const { return parts_[static_cast<std::size_t>(a)]; }
  const std::vector<long long>& parts() const { return parts_; }
  long long weight() const;
  bool is_zero() const;

  /// Copy with trailing zeros removed.
  Partition trimmed() const;

  bool operator==(const Partition& other) const;
  bool operator!=(const Partition& other) const { return !(*this == other); }

  std::string to_string() const;  // "(2,1,0)"

 private:
  std::vector<long long> parts_;
};

/// Subset {i_1 < ... < i_r} of [m], 1-based.
struct Subset {
  std::vector<int> elements;
  int ambient = 0;
};

void validate_subset(const Subset& s);
long long element_sum(const Subset& s);
Subset complement_subset(const Subset& s);
bool operator==(const Subset& a, const Subset& b);

/// lambda_a = m - r + a - i_a for a in [r]. Rejects empty subsets.
Partition subset_to_partition(const Subset& subset);

/// Inverse of subset_to_partition: the r-subset of [m] whose partition is
/// lambda. Requires lambda to fit in the r x (m-r) box.
Subset subset_from_partition(const Partition& lambda, int m);

/// Complement inside the length x box_width rectangle:
/// lambda*_a = box_width - lambda_{r+1-a}. Rejects lambda_1 > box_width.
Partition complement_partition(const Partition& lambda, long long box_width);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: number of
/// column-strict skew tableaux of shape nu/lambda and weight mu whose reverse
/// reading word is a lattice word. Degenerate inputs return 0. Memoized;
/// safe for concurrent callers.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Memo persistence hooks (used by the CLI cache).
std::vector<std::pair<std::string, long long>> lr_memo_snapshot();
void lr_memo_merge(const std::vector<std::pair<std::string, long long>>& entries);

}  // namespace singularhorn
