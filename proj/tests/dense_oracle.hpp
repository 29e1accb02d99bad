#pragma once

// Test-only dense eigenvalue oracle: classical cyclic Jacobi rotations.
// Kept independent of the Sturm bisection path it cross-checks.

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "grig/spectra.hpp"

namespace oracle {

inline std::vector<double> jacobi_rotation_eigenvalues(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  double off = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) off += 2 * a(i, j) * a(i, j);
  double scale = a.norm();
  double threshold = (scale == 0 ? 1.0 : scale) * 1e-15;

  for (int sweep = 0; sweep < 60 && std::sqrt(off) > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
    off = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) off += 2 * a(i, j) * a(i, j);
  }

  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<double> eigenvalues_of(const grig::spectra::TridiagonalOperator& op) {
  return jacobi_rotation_eigenvalues(op.dense());
}

}  // namespace oracle
