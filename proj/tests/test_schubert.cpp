#include <doctest.h>

#include <random>

#include "singularhorn/schubert.hpp"
#include "singularhorn/singular.hpp"

using namespace singularhorn;

namespace {

std::vector<Subset> subsets_of(int m, int r) {
  std::vector<Subset> out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(Subset{pick, m});
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - r + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<PolarizedSubset> polarized_pool(int q, int r) {
  std::vector<PolarizedSubset> pool;
  for (const auto& s : subsets_of(q, r)) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      PolarizedSubset x;
      for (int t = 0; t < r; ++t) {
        if (mask & (1u << t)) {
          x.plus.push_back(s.elements[static_cast<std::size_t>(t)]);
        } else {
          x.minus.push_back(s.elements[static_cast<std::size_t>(t)]);
        }
      }
      pool.push_back(std::move(x));
    }
  }
  return pool;
}

}  // namespace

TEST_CASE("duality partner") {
  CHECK(duality_partner(Subset{{1}, 6}) == Subset{{6}, 6});
  CHECK(duality_partner(Subset{{3, 4}, 6}) == Subset{{3, 4}, 6});
  CHECK(duality_partner(Subset{{2, 4, 6}, 6}) == Subset{{1, 3, 5}, 6});
}

TEST_CASE("triple intersection reference values") {
  const Subset a{{2, 4, 6}, 6};
  CHECK(triple_intersection(a, a, a) == 2);

  // Fundamental class against a dual pair gives the point class.
  for (int m = 2; m <= 6; ++m) {
    for (int r = 1; r < m; ++r) {
      Subset fundamental;
      fundamental.ambient = m;
      for (int i = m - r + 1; i <= m; ++i) fundamental.elements.push_back(i);
      for (const auto& b : subsets_of(m, r)) {
        CHECK(triple_intersection(fundamental, b, duality_partner(b)) == 1);
      }
    }
  }

  CHECK(triple_intersection(Subset{{5}, 6}, Subset{{6}, 6}, Subset{{2}, 6}) == 1);
}

TEST_CASE("one-dimensional classes meet exactly when i+j+k = 2m+1") {
  for (int m = 2; m <= 7; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) {
          const long long value =
              triple_intersection(Subset{{i}, m}, Subset{{j}, m}, Subset{{k}, m});
          CHECK(value == (i + j + k == 2 * m + 1 ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("triple intersection validates cardinalities") {
  CHECK_THROWS_AS(triple_intersection(Subset{{1, 2}, 6}, Subset{{1}, 6}, Subset{{1}, 6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(triple_intersection(Subset{{1}, 5}, Subset{{1}, 6}, Subset{{1}, 6}),
                  std::invalid_argument);
}

TEST_CASE("S3 symmetry of the triple intersection") {
  for (int m = 2; m <= 6; ++m) {
    for (int r = 1; r < m; ++r) {
      const auto pool = subsets_of(m, r);
      std::mt19937 rng(17u * static_cast<unsigned>(m) + static_cast<unsigned>(r));
      for (int trial = 0; trial < 60; ++trial) {
        const auto& a = pool[rng() % pool.size()];
        const auto& b = pool[rng() % pool.size()];
        const auto& c = pool[rng() % pool.size()];
        const long long value = triple_intersection(a, b, c);
        CHECK(value == triple_intersection(a, c, b));
        CHECK(value == triple_intersection(b, a, c));
        CHECK(value == triple_intersection(b, c, a));
        CHECK(value == triple_intersection(c, a, b));
        CHECK(value == triple_intersection(c, b, a));
      }
    }
  }
}

TEST_CASE("degree necessity for nonzero triple intersections") {
  for (int m = 3; m <= 5; ++m) {
    for (int r = 1; r < m; ++r) {
      for (const auto& a : subsets_of(m, r)) {
        for (const auto& b : subsets_of(m, r)) {
          for (const auto& c : subsets_of(m, r)) {
            if (triple_intersection(a, b, c) > 0) {
              const long long codim = subset_to_partition(a).weight() +
                                      subset_to_partition(b).weight() +
                                      subset_to_partition(c).weight();
              CHECK(codim == static_cast<long long>(r) * (m - r));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("quotient subset on the worked examples") {
  CHECK(quotient_subset(BalancedPolarizedSubset{Subset{{3, 4}, 4}, Subset{{1, 2}, 4}}) ==
        Subset{{1, 2}, 2});
  CHECK(quotient_subset(BalancedPolarizedSubset{Subset{{1, 2, 3}, 6}, Subset{{4, 5, 6}, 6}}) ==
        Subset{{1, 2, 3}, 3});
  CHECK(quotient_subset(BalancedPolarizedSubset{Subset{{2, 4, 6}, 6}, Subset{{1, 3, 5}, 6}}) ==
        Subset{{1, 2, 3}, 3});
}

TEST_CASE("balanced polarized validation") {
  CHECK_THROWS_AS(validate_balanced(BalancedPolarizedSubset{Subset{{1, 2}, 4}, Subset{{2, 3}, 4}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_balanced(BalancedPolarizedSubset{Subset{{1}, 4}, Subset{{2, 3}, 4}}),
                  std::invalid_argument);
}

TEST_CASE("two-step product on the G(3,6) coincidence") {
  // For p = q = 3, r = 3 the flag variety collapses to the Grassmannian and
  // the quotient factor contributes 1.
  auto hat = [](const Subset& s) { return BalancedPolarizedSubset{s, duality_partner(s)}; };
  auto self_disjoint = [](const Subset& s) {
    const auto dual = duality_partner(s);
    for (int e : s.elements) {
      if (std::binary_search(dual.elements.begin(), dual.elements.end(), e)) return false;
    }
    return true;
  };
  const Subset a{{2, 4, 6}, 6};
  CHECK(two_step_product(hat(a), hat(a), hat(a)) == 2);

  for (const auto& b : subsets_of(6, 3)) {
    if (!self_disjoint(b)) continue;
    for (const auto& c : subsets_of(6, 3)) {
      if (!self_disjoint(c)) continue;
      CHECK(two_step_product(hat(a), hat(b), hat(c)) == triple_intersection(a, b, c));
    }
  }
}

TEST_CASE("two-step product of the r=2 width-2 dual pair") {
  const BalancedPolarizedSubset a{Subset{{3, 4}, 4}, Subset{{1, 2}, 4}};
  const BalancedPolarizedSubset c{Subset{{1, 2}, 4}, Subset{{3, 4}, 4}};
  CHECK(two_step_product(a, a, c) == 1);
}

TEST_CASE("two-step degree gate returns zero") {
  const BalancedPolarizedSubset a{Subset{{1, 2}, 6}, Subset{{5, 6}, 6}};
  CHECK(two_step_product(a, a, a) == 0);
}

TEST_CASE("degree condition follows from the first factor on hat triples") {
  // A nonzero Grassmannian product of the lifts forces the element-sum
  // condition of the factorization.
  for (int q = 1; q <= 3; ++q) {
    for (int p = q; p <= 4; ++p) {
      const int n = p + q;
      for (int r = 1; r <= q; ++r) {
        const auto pool = polarized_pool(q, r);
        for (const auto& I : pool) {
          for (const auto& J : pool) {
            for (const auto& K : pool) {
              const Subset li = ambient_subset(I, p, q);
              const Subset lj = ambient_subset(J, p, q);
              const Subset lk = ambient_subset(K, p, q);
              if (triple_intersection(li, lj, lk) == 0) continue;
              const long long plus_sum = element_sum(li) + element_sum(lj) + element_sum(lk);
              const long long minus_sum = element_sum(duality_partner(li)) +
                                          element_sum(duality_partner(lj)) +
                                          element_sum(duality_partner(lk));
              CHECK(plus_sum == minus_sum + static_cast<long long>(r) * (n - r));
            }
          }
        }
      }
    }
  }
}
