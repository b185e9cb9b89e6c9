#include <doctest.h>

#include <random>

#include "singularhorn/horn.hpp"
#include "singularhorn/oracle.hpp"
#include "singularhorn/singular.hpp"

using namespace singularhorn;

namespace {

PolarizedSubset pol(std::vector<int> plus, std::vector<int> minus) {
  return PolarizedSubset{std::move(plus), std::move(minus)};
}

std::vector<PolarizedSubset> polarized_pool(int q, int r) {
  std::vector<PolarizedSubset> pool;
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      PolarizedSubset x;
      for (int t = 0; t < r; ++t) {
        (mask & (1u << t) ? x.plus : x.minus).push_back(pick[static_cast<std::size_t>(t)]);
      }
      pool.push_back(std::move(x));
    }
    int i = r - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == q - r + 1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return pool;
}

std::vector<Rational> random_chamber(std::mt19937& rng, int q) {
  std::uniform_int_distribution<int> num(0, 80);
  std::uniform_int_distribution<int> den(1, 8);
  std::vector<Rational> v;
  for (int i = 0; i < q; ++i) v.emplace_back(num(rng), den(rng));
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("ambient subset on the reference polarized subsets") {
  CHECK(ambient_subset(pol({}, {1, 2}), 2, 2) == Subset{{3, 4}, 4});
  CHECK(ambient_subset(pol({1, 2, 3}, {}), 3, 3) == Subset{{1, 2, 3}, 6});
  CHECK(ambient_subset(pol({2}, {1, 3}), 3, 3) == Subset{{2, 4, 6}, 6});
  CHECK_THROWS_AS(ambient_subset(pol({1}, {}), 1, 2), std::invalid_argument);
}

TEST_CASE("quotient subset on the reference polarized subsets") {
  CHECK(quotient_subset(pol({}, {1, 2}), 2, 2) == Subset{{1, 2}, 2});
  for (int q = 1; q <= 4; ++q) {
    for (int p = q; p <= q + 3; ++p) {
      std::vector<int> full(static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i) full[static_cast<std::size_t>(i)] = i + 1;
      Subset expected;
      expected.ambient = p;
      for (int k = p - q + 1; k <= p; ++k) expected.elements.push_back(k);
      CHECK(quotient_subset(pol({}, full), p, q) == expected);
    }
  }
}

TEST_CASE("crossing number") {
  CHECK(crossing_number(pol({}, {1, 2, 3})) == 0);
  CHECK(crossing_number(pol({2}, {1, 3})) == 1);
  CHECK(crossing_number(pol({1}, {2, 3})) == 2);
}

TEST_CASE("degree conditions on reference triples") {
  CHECK(degree_conditions(pol({}, {1, 2}), pol({}, {1, 2}), pol({1, 2}, {}), 2, 2));
  CHECK_FALSE(degree_conditions(pol({1, 2}, {}), pol({1, 2}, {}), pol({1, 2}, {}), 2, 2));
  CHECK(degree_conditions(pol({2}, {1, 3}), pol({2}, {1, 3}), pol({2}, {1, 3}), 3, 3));
}

TEST_CASE("weight identities of the lifted and quotient partitions") {
  for (int q = 1; q <= 4; ++q) {
    for (int p = q; p <= q + 3; ++p) {
      for (int r = 1; r <= q; ++r) {
        for (const auto& x : polarized_pool(q, r)) {
          const long long plus_cnt = static_cast<long long>(x.plus.size());
          long long plus_sum = 0, minus_sum = 0;
          for (int e : x.plus) plus_sum += e;
          for (int e : x.minus) minus_sum += e;
          const long long expected_lift = minus_sum - plus_sum +
                                          static_cast<long long>(p + q + 1) * plus_cnt -
                                          static_cast<long long>(r) * (r + 1) / 2;
          const long long expected_quot =
              expected_lift - plus_cnt * plus_cnt - 2 * crossing_number(x);
          CHECK(subset_to_partition(ambient_subset(x, p, q)).weight() == expected_lift);
          CHECK(subset_to_partition(quotient_subset(x, p, q)).weight() == expected_quot);
        }
      }
    }
  }
}

TEST_CASE("width shift matches the recomputed partitions") {
  CHECK(width_shift(pol({1}, {2}), 4, 4, 2) == Partition::zero(2));
  CHECK(width_shift(pol({1}, {2}), 4, 7, 2) == Partition({3, 0}));
  for (int q = 1; q <= 3; ++q) {
    for (int p = q; p <= 5; ++p) {
      for (int pp = p; pp <= 7; ++pp) {
        for (int r = 1; r <= q; ++r) {
          for (const auto& x : polarized_pool(q, r)) {
            const auto shift = width_shift(x, p, pp, q);
            const auto base = subset_to_partition(ambient_subset(x, p, q));
            const auto moved = subset_to_partition(ambient_subset(x, pp, q));
            const auto base_q = subset_to_partition(quotient_subset(x, p, q));
            const auto moved_q = subset_to_partition(quotient_subset(x, pp, q));
            for (int a = 0; a < r; ++a) {
              CHECK(moved[a] - base[a] == shift[a]);
              CHECK(moved_q[a] - base_q[a] == shift[a]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("symmetric embedding") {
  CHECK(symmetric_embedding({0, 0}, 3, 2) == std::vector<Rational>{0, 0, 0, 0, 0});
  CHECK(symmetric_embedding({2, 1}, 3, 2) == std::vector<Rational>{2, 1, 0, -1, -2});
  CHECK(symmetric_embedding({1}, 1, 1) == std::vector<Rational>{1, -1});
  CHECK_THROWS_AS(symmetric_embedding({1, 2}, 3, 2), std::invalid_argument);
}

TEST_CASE("generator reference counts") {
  for (int p : {1, 2, 5}) {
    for (auto mode : {SingularMode::horn_pair, SingularMode::grassmann_pair_one,
                      SingularMode::bk_flag_one, SingularMode::bk_flag_positive}) {
      const auto rows = generate_singular_inequalities(p, 1, mode);
      REQUIRE(rows.size() == 3);
      for (const auto& row : rows) {
        CHECK(row.family == Family::weyl);
        CHECK(row.regular);
      }
    }
  }
  for (int p : {2, 3, 4}) {
    CHECK(generate_singular_inequalities(p, 2, SingularMode::grassmann_pair_one).size() == 18);
    CHECK(generate_singular_inequalities(p, 2, SingularMode::horn_pair).size() == 18);
  }
  CHECK_THROWS_AS(generate_singular_inequalities(1, 2, SingularMode::horn_pair),
                  std::invalid_argument);
}

TEST_CASE("singular(3,3) admitted lists") {
  // Beyond the classical 87-row enumeration, the six-row orbit of
  // I={-1,-3}, J={-1,+3}, K={+1,-2} passes every admission route (and is a
  // facet, see the minimization test), so the honest list has 93 rows.
  const auto bk = generate_singular_inequalities(3, 3, SingularMode::bk_flag_one, 2);
  const auto gr = generate_singular_inequalities(3, 3, SingularMode::grassmann_pair_one, 2);
  const auto hp = generate_singular_inequalities(3, 3, SingularMode::horn_pair, 2);
  const auto bp = generate_singular_inequalities(3, 3, SingularMode::bk_flag_positive, 2);
  CHECK(bk.size() == 93);
  CHECK(hp.size() == 94);
  REQUIRE(bk.size() == gr.size());
  for (std::size_t i = 0; i < bk.size(); ++i) CHECK(bk[i].coeffs == gr[i].coeffs);
  REQUIRE(hp.size() == bp.size());
  for (std::size_t i = 0; i < hp.size(); ++i) CHECK(hp[i].coeffs == bp[i].coeffs);

  // The one-level gap is exactly the self-dual triple whose Grassmannian
  // certificate is 2.
  std::vector<const SingularInequality*> gap;
  for (const auto& row : hp) {
    bool found = false;
    for (const auto& other : bk) {
      if (other.coeffs == row.coeffs) {
        found = true;
        break;
      }
    }
    if (!found) gap.push_back(&row);
  }
  REQUIRE(gap.size() == 1);
  CHECK(gap[0]->I == pol({2}, {1, 3}));
  CHECK(gap[0]->J == pol({2}, {1, 3}));
  CHECK(gap[0]->K == pol({2}, {1, 3}));

  int weyl = 0, lidskii = 0, signed_lidskii = 0, thompson = 0, other = 0;
  for (const auto& row : bk) {
    switch (row.family) {
      case Family::weyl: ++weyl; break;
      case Family::lidskii: ++lidskii; break;
      case Family::signed_lidskii: ++signed_lidskii; break;
      case Family::thompson: ++thompson; break;
      case Family::other: ++other; break;
    }
  }
  CHECK(weyl == 18);
  CHECK(lidskii == 18);
  CHECK(signed_lidskii == 36);
  CHECK(thompson == 0);
  CHECK(other == 21);

  for (const auto& row : bk) CHECK(row.regular);
  for (const auto& row : hp) CHECK(row.regular);
}

TEST_CASE("generated lists are closed under role permutations") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}}) {
    const auto rows = generate_singular_inequalities(p, q, SingularMode::grassmann_pair_one);
    auto contains = [&](const PolarizedSubset& a, const PolarizedSubset& b,
                        const PolarizedSubset& c) {
      for (const auto& row : rows) {
        if (row.I == a && row.J == b && row.K == c) return true;
      }
      return false;
    };
    for (const auto& row : rows) {
      CHECK(contains(row.I, row.K, row.J));
      CHECK(contains(row.J, row.I, row.K));
      CHECK(contains(row.J, row.K, row.I));
      CHECK(contains(row.K, row.I, row.J));
      CHECK(contains(row.K, row.J, row.I));
    }
  }
}

TEST_CASE("membership references") {
  CHECK(singular_membership({1}, {1}, {2}, 1, 1));
  CHECK_FALSE(singular_membership({1}, {1}, {3}, 1, 1));
  CHECK(singular_membership({1, 1}, {1, 1}, {2, 2}, 2, 2));
  CHECK_THROWS_AS(singular_membership({1, 2}, {1, 1}, {2, 2}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(singular_membership({1, Rational(-1)}, {1, 1}, {2, 2}, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("membership agrees with the embedded horn membership") {
  std::mt19937 rng(513);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}}) {
    const auto rows = generate_singular_inequalities(p, q, SingularMode::grassmann_pair_one);
    const auto sys = singular_system(rows, q);
    for (int trial = 0; trial < 120; ++trial) {
      const auto x = random_chamber(rng, q);
      const auto y = random_chamber(rng, q);
      const auto z = random_chamber(rng, q);
      std::vector<Rational> point;
      point.insert(point.end(), x.begin(), x.end());
      point.insert(point.end(), y.begin(), y.end());
      point.insert(point.end(), z.begin(), z.end());
      const bool direct = evaluate(sys, point).member;
      const bool embedded = horn_membership(
          RealTriple{symmetric_embedding(x, p, q), symmetric_embedding(y, p, q),
                     symmetric_embedding(z, p, q)},
          p + q, HornMode::lr_one);
      CHECK(direct == embedded);
    }
  }
}

TEST_CASE("rationalized samples agree across the two membership routes") {
  // Fixtures drawn from the random-matrix sampler and rounded to exact
  // rationals; rounding may push a point to either side of the boundary, but
  // the two routes must agree on the verdict.
  const auto rows = generate_singular_inequalities(3, 3, SingularMode::grassmann_pair_one, 2);
  const auto sys = singular_system(rows, 3);
  const auto samples = sample_singular_sum({3, 2, 1}, {2, 1, 1}, 3, 3, 20, 4711);
  auto rationalize = [](const std::vector<double>& v) {
    std::vector<Rational> out;
    for (double c : v) out.emplace_back(static_cast<long long>(std::llround(c * 64)), 64);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      if (out[i] < out[i + 1]) out[i + 1] = out[i];
    }
    if (!out.empty() && out.back() < 0) out.back() = 0;
    return out;
  };
  for (const auto& sample : samples) {
    const auto x = rationalize(sample.x);
    const auto y = rationalize(sample.y);
    const auto z = rationalize(sample.z_observed);
    std::vector<Rational> point;
    for (const auto* v : {&x, &y, &z}) point.insert(point.end(), v->begin(), v->end());
    const bool direct = evaluate(sys, point).member;
    const bool embedded = horn_membership(
        RealTriple{symmetric_embedding(x, 3, 3), symmetric_embedding(y, 3, 3),
                   symmetric_embedding(z, 3, 3)},
        6, HornMode::lr_one);
    CHECK(direct == embedded);
  }
}

TEST_CASE("family classification references") {
  CHECK(classify_family(pol({}, {1}), pol({}, {1}), pol({1}, {}), 2) == Family::weyl);
  CHECK(classify_family(pol({}, {1, 2}), pol({}, {1, 2}), pol({1, 2}, {}), 2) == Family::lidskii);
  CHECK(classify_family(pol({}, {1, 3}), pol({}, {1, 3}), pol({2, 3}, {}), 3) == Family::other);
  CHECK(classify_family(pol({}, {1, 2}), pol({2}, {1}), pol({1}, {2}), 2) ==
        Family::signed_lidskii);
  // A Thompson pattern that is not a Lidskii one needs q >= 4.
  CHECK(classify_family(pol({}, {1, 3}), pol({}, {1, 2}), pol({1, 3}, {}), 4) == Family::lidskii);
  CHECK(classify_family(pol({}, {2, 3}), pol({}, {2, 3}), pol({3, 4}, {}), 4) == Family::thompson);
}

TEST_CASE("regularity") {
  CHECK(is_regular(pol({}, {1}), pol({}, {1}), pol({1}, {})));
  CHECK(is_regular(pol({}, {1, 2, 3}), pol({}, {1, 2, 3}), pol({1, 2, 3}, {})));
  CHECK_FALSE(is_regular(pol({}, {1}), pol({}, {1}), pol({}, {1})));
}

TEST_CASE("family triples pass the pair admission") {
  for (int q = 1; q <= 3; ++q) {
    for (int p : {q, q + 1}) {
      const auto horn_rows = generate_singular_inequalities(p, q, SingularMode::horn_pair);
      auto admitted = [&](const SingularTriple& t) {
        for (const auto& row : horn_rows) {
          if (row.I == t.I && row.J == t.J && row.K == t.K) return true;
        }
        return false;
      };
      const auto family_rows = family_inequalities(p, q);
      for (const auto& row : family_rows) {
        CHECK(admitted(SingularTriple{row.I, row.J, row.K}));
        CHECK(row.certificate[0] == 1);
        CHECK(row.certificate[1] == 1);
      }
    }
  }
}

TEST_CASE("stabilization of the square cases") {
  CHECK(stabilization_check(1, 1, 2).stable);
  CHECK(stabilization_check(2, 2, 2).stable);
  const auto res = stabilization_check(3, 3, 2);
  CHECK(res.stable);
  CHECK(res.minimal_count == 93);
  CHECK(res.non_regular.empty());
}
