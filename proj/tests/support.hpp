#pragma once

// Shared helpers for the unit tests: seeded randomness and a floating-point
// eigenvalue oracle independent of the library's root finder.

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "endogrowth/exactlin.hpp"

namespace testing {

using endogrowth::BigInt;
using endogrowth::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

inline Eigen::MatrixXd to_eigen(const IntMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
  return e;
}

inline std::vector<std::complex<double>> eigenvalues(const IntMatrix& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(m), false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

inline double oracle_spectral_radius(const IntMatrix& m) {
  double r = 0;
  for (auto z : eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

/// Greedy matching distance between two multisets of complex numbers.
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0;
  for (auto z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](auto x, auto y) { return std::abs(x - z) < std::abs(y - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

}  // namespace testing
