#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "grig/labeled_graph.hpp"
#include "grig/word.hpp"

namespace grig::spectra {

/// Laplacian weights (t,u,v,w) on the generators a,b,c,d; D = u + v + w.
/// The parameter set P excludes the degenerate hyperplanes.
struct Params {
  double t = 0, u = 0, v = 0, w = 0;
  double D() const noexcept { return u + v + w; }
  bool in_P() const noexcept { return t != 0 && u + v != 0 && u + w != 0 && v + w != 0; }
  double weight(group::Gen g) const noexcept;
};

/// Real symmetric tridiagonal operator: diag has length m, offdiag m-1.
struct TridiagonalOperator {
  Eigen::VectorXd diag;
  Eigen::VectorXd offdiag;

  Eigen::Index size() const noexcept { return diag.size(); }
  Eigen::MatrixXd dense() const;
  /// Gershgorin bounds [lo, hi] containing the whole spectrum.
  std::pair<double, double> gershgorin() const;
};

/// All eigenvalues with multiplicity, each certified by a Sturm bracket of
/// width <= tol whose sign-change counts differ by the multiplicity.
struct SpectralData {
  Eigen::VectorXd eigenvalues;  // sorted nondecreasing, size m
  Params params;
  std::string provenance;
  double tol = 0;
  std::vector<std::pair<double, double>> brackets;  // per eigenvalue

  Eigen::Index size() const noexcept { return eigenvalues.size(); }
};

/// Off-diagonal sample: t at a, D-w at x, D-v at y, D-u at z.
double potential_f(const PointedWord& w, std::int64_t pos, const Params& p);

/// Diagonal sample from the pair (omega_pos, omega_{pos+1}): w for a pair
/// containing x, v for y, u for z. Throws when the pair has no or two a's.
double potential_g(const PointedWord& w, std::int64_t pos, const Params& p);

/// Restriction of the whole-line operator to sites 1..m:
/// diag_k = g at position k, offdiag_k = f at position k+1.
/// The window must cover absolute positions 1..m+1.
TridiagonalOperator jacobi_from_window(const PointedWord& w, const Params& p, std::int64_t m);

/// Orders the vertices of a path-shaped graph and assembles loop weights on
/// the diagonal and summed parallel-edge weights off the diagonal.
TridiagonalOperator laplacian_from_graph(const group::LabeledGraph& g, const Params& p);

/// Number of eigenvalues strictly below x (Sturm sign-change count).
std::int64_t sturm_count_below(const TridiagonalOperator& op, double x);

/// All eigenvalues by bisection on Sturm counts, each bracketed to width
/// <= tol. Total for every input; multiplicities resolved by count jumps.
SpectralData eigenvalues(const TridiagonalOperator& op, double tol);

/// Normalized eigenvalue counting function N(E) = #{lambda <= E} / m.
double ids_distribution(const SpectralData& sd, double E);

/// sup_E |N_1(E) - N_2(E)| for two spectra; values closer than tie_tol are
/// treated as one jump point.
double ids_sup_diff(const SpectralData& a, const SpectralData& b, double tie_tol = 0);

/// Builds the level-n Schreier Laplacian and the window operator of the
/// eta-prefix of 2^n - 1 letters (both of size 2^n, differing in at most
/// the endpoint loop weights) and returns the sup-norm of the IDS gap.
double ids_comparison(int n, const Params& p, double solve_tol = 1e-10);

/// True iff every eigenvalue of M_n lies within tol of one of M_{n+1}.
bool nesting_check(int n, const Params& p, double tol, double solve_tol = 1e-10);

/// Total length of the union of [lambda - eps, lambda + eps].
struct MeasureEstimate {
  double epsilon = 0;
  double cover_length = 0;
  std::int64_t interval_count = 0;  // maximal disjoint intervals after merging
};

MeasureEstimate measure_estimate(const SpectralData& sd, double epsilon);

/// CSV export with header "index,eigenvalue", 17 significant digits.
void write_csv(std::ostream& os, const SpectralData& sd);

}  // namespace grig::spectra
