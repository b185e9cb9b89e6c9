#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "singularhorn/cone.hpp"

namespace singularhorn {

/// One random-matrix draw: prescribed spectra and the observed singular
/// spectrum of the sum.
struct SingularSample {
  std::vector<double> x, y, z_observed;
  std::uint64_t seed = 0;
};

/// Draws Haar-random U(p) x U(q) factors around the prescribed spectra and
/// records tau(A+B). Per-trial RNG streams derive from (seed, trial), so
/// parallel and serial runs agree. Rejects q > p.
std::vector<SingularSample> sample_singular_sum(const std::vector<double>& x,
                                                const std::vector<double>& y, int p, int q,
                                                long long trials, std::uint64_t seed, int jobs = 1);

struct NecessityReport {
  long long trials = 0;
  long long violations = 0;
  double worst_margin = 0.0;  // max over rows and trials of lhs - rhs
  std::vector<double> z_min, z_max;
};

/// Evaluates every sampled (x, y, z) against the system; counts margins
/// exceeding tol.
NecessityReport verify_necessity(const InequalitySystem& sys, const std::vector<double>& x,
                                 const std::vector<double>& y, int p, int q, long long trials,
                                 double tol, std::uint64_t seed, int jobs = 1);

struct RealizeWitness {
  Eigen::MatrixXcd A, B;
  double objective = 0.0;
};

/// Local search over the four unitary factors minimizing |tau(A+B) - z|.
/// A returned witness certifies membership up to tol; absence certifies
/// nothing.
std::optional<RealizeWitness> realize(const std::vector<double>& x, const std::vector<double>& y,
                                      const std::vector<double>& z, int p, int q, int restarts,
                                      int iters, double tol, std::uint64_t seed);

/// Singular spectrum (descending, clamped at zero).
std::vector<double> singular_spectrum(const Eigen::MatrixXcd& m);

/// Haar-distributed unitary from QR of a complex Gaussian with the phase
/// correction.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

}  // namespace singularhorn
