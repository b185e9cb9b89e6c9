#include "singularhorn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "singularhorn/parallel.hpp"

namespace singularhorn {

namespace {

std::uint64_t splitmix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(trial + 1)));
}

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  }
  return m;
}

Eigen::MatrixXcd diag_embed(const std::vector<double>& x, int p, int q) {
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(p, q);
  for (int i = 0; i < q; ++i) d(i, i) = x[static_cast<std::size_t>(i)];
  return d;
}

void validate_spectrum(const std::vector<double>& x, int q, double tol) {
  if (static_cast<int>(x.size()) != q) {
    throw std::invalid_argument("spectrum must have length q");
  }
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i] + tol < x[i + 1]) {
      throw std::invalid_argument("spectrum must be weakly decreasing");
    }
  }
  if (!x.empty() && x.back() < -tol) {
    throw std::invalid_argument("spectrum must be nonnegative");
  }
}

struct FactorSet {
  Eigen::MatrixXcd u1, v1, u2, v2;
};

Eigen::MatrixXcd assemble_sum(const FactorSet& f, const Eigen::MatrixXcd& dx,
                              const Eigen::MatrixXcd& dy) {
  return f.u1 * dx * f.v1.adjoint() + f.u2 * dy * f.v2.adjoint();
}

}  // namespace

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd z = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const std::complex<double> d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0) q.col(k) *= d / mag;
  }
  return q;
}

std::vector<double> singular_spectrum(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& values = svd.singularValues();
  std::vector<double> out(static_cast<std::size_t>(values.size()));
  for (int i = 0; i < values.size(); ++i) {
    out[static_cast<std::size_t>(i)] = std::max(0.0, values(i));
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<SingularSample> sample_singular_sum(const std::vector<double>& x,
                                                const std::vector<double>& y, int p, int q,
                                                long long trials, std::uint64_t seed, int jobs) {
  if (q > p || q < 1) throw std::invalid_argument("requires p >= q >= 1");
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  validate_spectrum(x, q, 1e-12);
  validate_spectrum(y, q, 1e-12);
  const Eigen::MatrixXcd dx = diag_embed(x, p, q);
  const Eigen::MatrixXcd dy = diag_embed(y, p, q);
  std::vector<SingularSample> samples(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), jobs, [&](std::size_t t) {
    auto rng = trial_rng(seed, t);
    FactorSet f{haar_unitary(p, rng), haar_unitary(q, rng), haar_unitary(p, rng),
                haar_unitary(q, rng)};
    SingularSample s;
    s.x = x;
    s.y = y;
    s.z_observed = singular_spectrum(assemble_sum(f, dx, dy));
    s.seed = seed;
    samples[t] = std::move(s);
  });
  return samples;
}

NecessityReport verify_necessity(const InequalitySystem& sys, const std::vector<double>& x,
                                 const std::vector<double>& y, int p, int q, long long trials,
                                 double tol, std::uint64_t seed, int jobs) {
  if (sys.dimension != 3 * q) {
    throw std::invalid_argument("necessity check expects a system on R^{3q}");
  }
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& row : sys.inequalities) {
    std::vector<double> c(row.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(row.coeffs[i]);
    rows.push_back(std::move(c));
    rhs.push_back(static_cast<double>(row.rhs));
  }
  const auto samples = sample_singular_sum(x, y, p, q, trials, seed, jobs);

  NecessityReport report;
  report.trials = trials;
  report.z_min.assign(static_cast<std::size_t>(q), std::numeric_limits<double>::infinity());
  report.z_max.assign(static_cast<std::size_t>(q), -std::numeric_limits<double>::infinity());
  report.worst_margin = -std::numeric_limits<double>::infinity();
  for (const auto& sample : samples) {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(3 * q));
    v.insert(v.end(), sample.x.begin(), sample.x.end());
    v.insert(v.end(), sample.y.begin(), sample.y.end());
    v.insert(v.end(), sample.z_observed.begin(), sample.z_observed.end());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      double lhs = 0;
      for (std::size_t i = 0; i < rows[r].size(); ++i) lhs += rows[r][i] * v[i];
      const double margin = lhs - rhs[r];
      report.worst_margin = std::max(report.worst_margin, margin);
      if (margin > tol) ++report.violations;
    }
    for (int i = 0; i < q; ++i) {
      report.z_min[static_cast<std::size_t>(i)] =
          std::min(report.z_min[static_cast<std::size_t>(i)], sample.z_observed[static_cast<std::size_t>(i)]);
      report.z_max[static_cast<std::size_t>(i)] =
          std::max(report.z_max[static_cast<std::size_t>(i)], sample.z_observed[static_cast<std::size_t>(i)]);
    }
  }
  if (samples.empty() || rows.empty()) report.worst_margin = 0.0;
  return report;
}

namespace {

double objective(const FactorSet& f, const Eigen::MatrixXcd& dx, const Eigen::MatrixXcd& dy,
                 const std::vector<double>& z) {
  const auto spectrum = singular_spectrum(assemble_sum(f, dx, dy));
  double acc = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = spectrum[i] - z[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

/// Unitary retraction of a random skew-Hermitian tangent step.
Eigen::MatrixXcd cayley_step(int dim, double scale, std::mt19937_64& rng) {
  Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
  Eigen::MatrixXcd skew = (g - g.adjoint()) * (scale / 2.0);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  return (id - skew) * (id + skew).inverse();
}

}  // namespace

std::optional<RealizeWitness> realize(const std::vector<double>& x, const std::vector<double>& y,
                                      const std::vector<double>& z, int p, int q, int restarts,
                                      int iters, double tol, std::uint64_t seed) {
  if (q > p || q < 1) throw std::invalid_argument("requires p >= q >= 1");
  validate_spectrum(x, q, tol);
  validate_spectrum(y, q, tol);
  validate_spectrum(z, q, tol);
  const Eigen::MatrixXcd dx = diag_embed(x, p, q);
  const Eigen::MatrixXcd dy = diag_embed(y, p, q);

  for (int restart = 0; restart < restarts; ++restart) {
    auto rng = trial_rng(seed, static_cast<std::uint64_t>(restart) + 0x7e57ULL);
    FactorSet f{haar_unitary(p, rng), haar_unitary(q, rng), haar_unitary(p, rng),
                haar_unitary(q, rng)};
    double best = objective(f, dx, dy, z);
    double step = 0.5;
    int stale = 0;
    for (int iter = 0; iter < iters && best >= tol; ++iter) {
      FactorSet trial = f;
      switch (rng() % 4) {
        case 0: trial.u1 = f.u1 * cayley_step(p, step, rng); break;
        case 1: trial.v1 = f.v1 * cayley_step(q, step, rng); break;
        case 2: trial.u2 = f.u2 * cayley_step(p, step, rng); break;
        default: trial.v2 = f.v2 * cayley_step(q, step, rng); break;
      }
      const double value = objective(trial, dx, dy, z);
      if (value < best) {
        best = value;
        f = std::move(trial);
        stale = 0;
      } else if (++stale >= 12) {
        step = std::max(step * 0.6, 1e-6);
        stale = 0;
      }
    }
    if (best < tol) {
      RealizeWitness witness;
      witness.A = f.u1 * dx * f.v1.adjoint();
      witness.B = f.u2 * dy * f.v2.adjoint();
      witness.objective = best;
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace singularhorn
