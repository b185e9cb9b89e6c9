#include "singularhorn/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "singularhorn/parallel.hpp"

namespace singularhorn {

void validate_system(const InequalitySystem& sys) {
  std::set<std::string> labels;
  for (const auto* rows : {&sys.inequalities, &sys.equalities}) {
    for (const auto& row : *rows) {
      if (static_cast<int>(row.coeffs.size()) != sys.dimension) {
        throw std::invalid_argument("row '" + row.label + "' has wrong dimension");
      }
      if (!labels.insert(row.label).second) {
        throw std::invalid_argument("duplicate row label '" + row.label + "'");
      }
    }
  }
}

EvalResult evaluate(const InequalitySystem& sys, const std::vector<Rational>& point) {
  validate_system(sys);
  if (static_cast<int>(point.size()) != sys.dimension) {
    throw std::invalid_argument("point dimension mismatch");
  }
  EvalResult result;
  auto dot = [&](const LinearRow& row) {
    Rational lhs = 0;
    for (std::size_t i = 0; i < point.size(); ++i) lhs += row.coeffs[i] * point[i];
    return lhs;
  };
  for (const auto& row : sys.equalities) {
    Rational margin = dot(row) - row.rhs;
    if (margin != 0) result.violations.push_back({row.label, margin});
  }
  for (const auto& row : sys.inequalities) {
    Rational margin = dot(row) - row.rhs;
    if (margin > 0) result.violations.push_back({row.label, margin});
  }
  result.member = result.violations.empty();
  return result;
}

namespace {

using Vec = std::vector<Rational>;

/// Substitutes the equality rows away, mapping vectors of the full space
/// into the free coordinates.
class EqualityReducer {
 public:
  EqualityReducer(const std::vector<LinearRow>& equalities, int dimension) : dim_(dimension) {
    std::vector<Vec> rows;
    for (const auto& eq : equalities) rows.push_back(eq.coeffs);
    // Gauss-Jordan to reduced row echelon form.
    std::vector<int> pivot_of_row;
    std::size_t rank = 0;
    for (int col = 0; col < dim_ && rank < rows.size(); ++col) {
      std::size_t sel = rank;
      while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[rank], rows[sel]);
      const Rational inv = rows[rank][static_cast<std::size_t>(col)];
      for (auto& v : rows[rank]) v /= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank) continue;
        const Rational factor = rows[i][static_cast<std::size_t>(col)];
        if (factor == 0) continue;
        for (int c = 0; c < dim_; ++c) {
          rows[i][static_cast<std::size_t>(c)] -= factor * rows[rank][static_cast<std::size_t>(c)];
        }
      }
      pivot_of_row.push_back(col);
      ++rank;
    }
    rows.resize(rank);
    pivot_rows_ = std::move(rows);
    pivot_cols_ = std::move(pivot_of_row);
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
    for (int c : pivot_cols_) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < dim_; ++c) {
      if (!is_pivot[static_cast<std::size_t>(c)]) free_cols_.push_back(c);
    }
  }

  int reduced_dimension() const { return static_cast<int>(free_cols_.size()); }

  Vec reduce(const Vec& row) const {
    Vec full = row;
    for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
      const Rational factor = full[static_cast<std::size_t>(pivot_cols_[k])];
      if (factor == 0) continue;
      for (int c = 0; c < dim_; ++c) {
        full[static_cast<std::size_t>(c)] -= factor * pivot_rows_[k][static_cast<std::size_t>(c)];
      }
    }
    Vec out;
    out.reserve(free_cols_.size());
    for (int c : free_cols_) out.push_back(full[static_cast<std::size_t>(c)]);
    return out;
  }

 private:
  int dim_;
  std::vector<Vec> pivot_rows_;
  std::vector<int> pivot_cols_;
  std::vector<int> free_cols_;
};

std::string primitive_key(const Vec& v) {
  Integer lcm = 1;
  for (const auto& r : v) lcm = boost::multiprecision::lcm(lcm, denominator(r));
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer gcd = 0;
  for (const auto& r : v) {
    Integer scaled = numerator(r) * (lcm / denominator(r));
    gcd = boost::multiprecision::gcd(gcd, scaled);
    ints.push_back(std::move(scaled));
  }
  if (gcd == 0) return std::string();  // zero row
  std::string key;
  for (const auto& i : ints) {
    key += Integer(i / gcd).str();
    key += ',';
  }
  return key;
}

/// Phase-1 simplex (revised, Bland's rule) deciding whether `target` lies in
/// the cone spanned by `cols`. Exact rational arithmetic throughout.
bool in_cone(const std::vector<const Vec*>& cols, const Vec& target) {
  const int d = static_cast<int>(target.size());
  if (d == 0) return true;
  const std::size_t m = cols.size();

  std::vector<int> sign(static_cast<std::size_t>(d), 1);
  Vec xb(target);
  for (int i = 0; i < d; ++i) {
    if (xb[static_cast<std::size_t>(i)] < 0) {
      sign[static_cast<std::size_t>(i)] = -1;
      xb[static_cast<std::size_t>(i)] = -xb[static_cast<std::size_t>(i)];
    }
  }

  // basis[i] is a variable id: cone columns are 0..m-1, artificials m..m+d-1.
  std::vector<std::size_t> basis(static_cast<std::size_t>(d));
  std::vector<char> in_basis(m, 0);
  std::vector<char> artificial_alive(static_cast<std::size_t>(d), 1);
  for (int i = 0; i < d; ++i) basis[static_cast<std::size_t>(i)] = m + static_cast<std::size_t>(i);
  std::vector<Vec> binv(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

  int artificials_in_basis = d;
  Vec y(static_cast<std::size_t>(d));
  Vec u(static_cast<std::size_t>(d));

  auto objective_is_zero = [&]() {
    for (int i = 0; i < d; ++i) {
      if (basis[static_cast<std::size_t>(i)] >= m && xb[static_cast<std::size_t>(i)] != 0) {
        return false;
      }
    }
    return true;
  };

  while (true) {
    if (artificials_in_basis == 0 || objective_is_zero()) return true;

    // Simplex multipliers for the phase-1 costs (1 on artificials).
    for (int j = 0; j < d; ++j) {
      Rational acc = 0;
      for (int i = 0; i < d; ++i) {
        if (basis[static_cast<std::size_t>(i)] >= m) {
          acc += binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
      }
      y[static_cast<std::size_t>(j)] = acc * sign[static_cast<std::size_t>(j)];
    }

    // Bland: first column with negative reduced cost enters. Cone columns
    // have zero cost; artificials never re-enter.
    std::size_t enter = m + static_cast<std::size_t>(d);
    for (std::size_t j = 0; j < m; ++j) {
      if (in_basis[j]) continue;
      Rational rc = 0;
      const Vec& col = *cols[j];
      for (int i = 0; i < d; ++i) {
        if (col[static_cast<std::size_t>(i)] != 0) {
          rc -= y[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
        }
      }
      if (rc < 0) {
        enter = j;
        break;
      }
    }
    if (enter >= m) return objective_is_zero();

    const Vec& col = *cols[enter];
    for (int i = 0; i < d; ++i) {
      Rational acc = 0;
      for (int k = 0; k < d; ++k) {
        if (col[static_cast<std::size_t>(k)] != 0) {
          acc += binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 (col[static_cast<std::size_t>(k)] * sign[static_cast<std::size_t>(k)]);
        }
      }
      u[static_cast<std::size_t>(i)] = acc;
    }

    int leave = -1;
    Rational best_ratio = 0;
    for (int i = 0; i < d; ++i) {
      if (u[static_cast<std::size_t>(i)] <= 0) continue;
      Rational ratio = xb[static_cast<std::size_t>(i)] / u[static_cast<std::size_t>(i)];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      throw std::logic_error("phase-1 simplex reported an unbounded objective");
    }

    const std::size_t leaving_var = basis[static_cast<std::size_t>(leave)];
    const Rational pivot = u[static_cast<std::size_t>(leave)];
    for (int j = 0; j < d; ++j) {
      binv[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)] /= pivot;
    }
    const Rational step = xb[static_cast<std::size_t>(leave)] / pivot;
    xb[static_cast<std::size_t>(leave)] = step;
    for (int i = 0; i < d; ++i) {
      if (i == leave || u[static_cast<std::size_t>(i)] == 0) continue;
      const Rational factor = u[static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j) {
        binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * binv[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)];
      }
      xb[static_cast<std::size_t>(i)] -= factor * step;
    }
    basis[static_cast<std::size_t>(leave)] = enter;
    in_basis[enter] = 1;
    if (leaving_var >= m) {
      artificial_alive[leaving_var - m] = 0;
      --artificials_in_basis;
    } else {
      in_basis[leaving_var] = 0;
    }
  }
}

}  // namespace

MinimizeResult minimize_system(const InequalitySystem& sys, const InequalitySystem& chamber,
                               int jobs) {
  validate_system(sys);
  validate_system(chamber);
  if (chamber.dimension != sys.dimension) {
    throw std::invalid_argument("chamber dimension mismatch");
  }
  if (!chamber.equalities.empty()) {
    throw std::invalid_argument("chamber must not carry equalities");
  }
  for (const auto* rows : {&sys.inequalities, &sys.equalities, &chamber.inequalities}) {
    for (const auto& row : *rows) {
      if (row.rhs != 0) {
        throw std::invalid_argument("minimize_system requires a homogeneous cone system");
      }
    }
  }

  const EqualityReducer reducer(sys.equalities, sys.dimension);

  struct Reduced {
    Vec vec;
    std::string key;
    std::size_t source = 0;
  };
  std::vector<Reduced> candidates(sys.inequalities.size());
  parallel_for(sys.inequalities.size(), jobs, [&](std::size_t i) {
    candidates[i].vec = reducer.reduce(sys.inequalities[i].coeffs);
    candidates[i].key = primitive_key(candidates[i].vec);
    candidates[i].source = i;
  });
  std::vector<Reduced> context(chamber.inequalities.size());
  parallel_for(chamber.inequalities.size(), jobs, [&](std::size_t i) {
    context[i].vec = reducer.reduce(chamber.inequalities[i].coeffs);
    context[i].key = primitive_key(context[i].vec);
    context[i].source = i;
  });

  MinimizeResult result;

  // Zero rows are implied by the equalities; duplicates keep their first copy.
  std::vector<const Reduced*> unique_rows;
  std::set<std::string> seen;
  for (const auto& cand : candidates) {
    if (cand.key.empty()) {
      result.eliminated.push_back(sys.inequalities[cand.source].label);
      continue;
    }
    if (!seen.insert(cand.key).second) {
      result.eliminated.push_back(sys.inequalities[cand.source].label);
      continue;
    }
    unique_rows.push_back(&cand);
  }

  std::vector<char> redundant(unique_rows.size(), 0);
  parallel_for(unique_rows.size(), jobs, [&](std::size_t i) {
    std::vector<const Vec*> cols;
    cols.reserve(unique_rows.size() - 1 + context.size());
    for (std::size_t j = 0; j < unique_rows.size(); ++j) {
      if (j != i) cols.push_back(&unique_rows[j]->vec);
    }
    for (const auto& ctx : context) cols.push_back(&ctx.vec);
    redundant[i] = in_cone(cols, unique_rows[i]->vec) ? 1 : 0;
  });

  std::vector<const Vec*> kept_vecs;
  std::vector<std::size_t> kept_sources;
  for (std::size_t i = 0; i < unique_rows.size(); ++i) {
    if (redundant[i]) {
      result.eliminated.push_back(sys.inequalities[unique_rows[i]->source].label);
    } else {
      kept_vecs.push_back(&unique_rows[i]->vec);
      kept_sources.push_back(unique_rows[i]->source);
    }
  }

  result.chamber.resize(context.size());
  parallel_for(context.size(), jobs, [&](std::size_t i) {
    std::vector<const Vec*> cols;
    cols.reserve(kept_vecs.size() + context.size() - 1);
    cols.insert(cols.end(), kept_vecs.begin(), kept_vecs.end());
    for (std::size_t j = 0; j < context.size(); ++j) {
      if (j != i) cols.push_back(&context[j].vec);
    }
    const bool essential = context[i].key.empty() ? false : !in_cone(cols, context[i].vec);
    result.chamber[i] = ChamberStatus{chamber.inequalities[i].label, essential};
  });

  std::sort(kept_sources.begin(), kept_sources.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = sys.inequalities[a].coeffs;
    const auto& rb = sys.inequalities[b].coeffs;
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  result.minimized.dimension = sys.dimension;
  result.minimized.equalities = sys.equalities;
  for (std::size_t src : kept_sources) result.minimized.inequalities.push_back(sys.inequalities[src]);
  std::sort(result.eliminated.begin(), result.eliminated.end());
  return result;
}

}  // namespace singularhorn
