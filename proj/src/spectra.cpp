#include "grig/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "grig/substitution.hpp"

namespace grig::spectra {

double Params::weight(group::Gen g) const noexcept {
  switch (g) {
    case group::Gen::a: return t;
    case group::Gen::b: return u;
    case group::Gen::c: return v;
    case group::Gen::d: return w;
  }
  return 0;
}

Eigen::MatrixXd TridiagonalOperator::dense() const {
  const Eigen::Index m = size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) out(i, i) = diag[i];
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    out(i, i + 1) = offdiag[i];
    out(i + 1, i) = offdiag[i];
  }
  return out;
}

std::pair<double, double> TridiagonalOperator::gershgorin() const {
  const Eigen::Index m = size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < m; ++i) {
    double r = 0;
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i + 1 < m) r += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

double potential_f(const PointedWord& w, std::int64_t pos, const Params& p) {
  switch (w.at_abs(pos)) {
    case Letter::A: return p.t;
    case Letter::X: return p.D() - p.w;
    case Letter::Y: return p.D() - p.v;
    case Letter::Z: return p.D() - p.u;
  }
  throw std::logic_error("potential_f: corrupt letter");
}

double potential_g(const PointedWord& w, std::int64_t pos, const Params& p) {
  Letter first = w.at_abs(pos);
  Letter second = w.at_abs(pos + 1);
  if ((first == Letter::A) == (second == Letter::A))
    throw std::invalid_argument("potential_g: pair must contain exactly one a");
  Letter other = first == Letter::A ? second : first;
  switch (other) {
    case Letter::X: return p.w;
    case Letter::Y: return p.v;
    case Letter::Z: return p.u;
    case Letter::A: break;
  }
  throw std::logic_error("potential_g: corrupt letter");
}

TridiagonalOperator jacobi_from_window(const PointedWord& w, const Params& p, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("jacobi_from_window: m must be positive");
  if (!w.covers(1) || !w.covers(m + 1))
    throw std::invalid_argument("jacobi_from_window: window must cover positions 1..m+1");
  TridiagonalOperator op;
  op.diag.resize(m);
  op.offdiag.resize(m - 1);
  for (std::int64_t k = 1; k <= m; ++k) op.diag[k - 1] = potential_g(w, k, p);
  for (std::int64_t k = 1; k <= m - 1; ++k) op.offdiag[k - 1] = potential_f(w, k + 1, p);
  return op;
}

TridiagonalOperator laplacian_from_graph(const group::LabeledGraph& g, const Params& p) {
  group::PathForm pf = group::path_form(g);
  const auto m = static_cast<Eigen::Index>(pf.order.size());
  TridiagonalOperator op;
  op.diag = Eigen::VectorXd::Zero(m);
  op.offdiag = Eigen::VectorXd::Zero(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index i = 0; i < m; ++i)
    for (group::Gen label : pf.loop_labels[static_cast<std::size_t>(i)])
      op.diag[i] += p.weight(label);
  for (Eigen::Index i = 0; i + 1 < m; ++i)
    for (group::Gen label : pf.seam_labels[static_cast<std::size_t>(i)])
      op.offdiag[i] += p.weight(label);
  return op;
}

namespace {

// Sign-change count of the shifted LDL recurrence; pivots floored at
// pivmin = smallest positive normal * max(1, |A|_inf) so the division never
// blows up.
std::int64_t sturm_count(const double* diag, const double* off, Eigen::Index m, double x,
                         double pivmin) {
  std::int64_t cnt = 0;
  double q = diag[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++cnt;
  for (Eigen::Index k = 1; k < m; ++k) {
    q = diag[k] - x - off[k - 1] * off[k - 1] / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++cnt;
  }
  return cnt;
}

double infinity_norm(const TridiagonalOperator& op) {
  double norm = 0;
  const Eigen::Index m = op.size();
  for (Eigen::Index i = 0; i < m; ++i) {
    double r = std::abs(op.diag[i]);
    if (i > 0) r += std::abs(op.offdiag[i - 1]);
    if (i + 1 < m) r += std::abs(op.offdiag[i]);
    norm = std::max(norm, r);
  }
  return norm;
}

}  // namespace

std::int64_t sturm_count_below(const TridiagonalOperator& op, double x) {
  if (op.size() == 0) return 0;
  double pivmin = std::numeric_limits<double>::min() * std::max(1.0, infinity_norm(op));
  return sturm_count(op.diag.data(), op.offdiag.data(), op.size(), x, pivmin);
}

SpectralData eigenvalues(const TridiagonalOperator& op, double tol) {
  if (tol <= 0) throw std::invalid_argument("eigenvalues: tol must be positive");
  const Eigen::Index m = op.size();
  if (m < 1) throw std::invalid_argument("eigenvalues: empty operator");
  if (op.offdiag.size() != m - 1)
    throw std::invalid_argument("eigenvalues: offdiag must have length m-1");

  SpectralData out;
  out.tol = tol;
  out.eigenvalues.resize(m);
  out.brackets.resize(static_cast<std::size_t>(m));

  const double* d = op.diag.data();
  const double* e = op.offdiag.data();
  const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, infinity_norm(op));

  auto [lo, hi] = op.gershgorin();
  double pad = 1e-3 * std::max(1.0, std::abs(lo) + std::abs(hi));
  lo -= pad;
  hi += pad;
  while (sturm_count(d, e, m, lo, pivmin) != 0) lo -= pad *= 2;
  while (sturm_count(d, e, m, hi, pivmin) != m) hi += pad *= 2;

  struct Interval {
    double lo, hi;
    std::int64_t clo, chi;
  };
  std::vector<Interval> stack{{lo, hi, 0, m}};
  std::size_t emitted = 0;
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.chi == iv.clo) continue;
    if (iv.hi - iv.lo <= tol) {
      const double mid = 0.5 * (iv.lo + iv.hi);
      for (std::int64_t k = iv.clo; k < iv.chi; ++k) {
        out.eigenvalues[static_cast<Eigen::Index>(k)] = mid;
        out.brackets[static_cast<std::size_t>(k)] = {iv.lo, iv.hi};
        ++emitted;
      }
      continue;
    }
    const double mid = 0.5 * (iv.lo + iv.hi);
    const std::int64_t cmid = sturm_count(d, e, m, mid, pivmin);
    if (cmid > iv.clo) stack.push_back({iv.lo, mid, iv.clo, cmid});
    if (iv.chi > cmid) stack.push_back({mid, iv.hi, cmid, iv.chi});
  }
  if (emitted != static_cast<std::size_t>(m))
    throw std::logic_error("eigenvalues: bisection lost an eigenvalue");
  // indices clo..chi-1 are assigned in count order, so the list is sorted
  return out;
}

double ids_distribution(const SpectralData& sd, double E) {
  const auto* begin = sd.eigenvalues.data();
  const auto* end = begin + sd.eigenvalues.size();
  auto count = std::upper_bound(begin, end, E) - begin;
  return static_cast<double>(count) / static_cast<double>(sd.eigenvalues.size());
}

double ids_sup_diff(const SpectralData& a, const SpectralData& b, double tie_tol) {
  const double ma = static_cast<double>(a.size());
  const double mb = static_cast<double>(b.size());
  Eigen::Index i = 0, j = 0;
  double sup = 0;
  while (i < a.size() || j < b.size()) {
    double next;
    if (i < a.size() && j < b.size())
      next = std::min(a.eigenvalues[i], b.eigenvalues[j]);
    else if (i < a.size())
      next = a.eigenvalues[i];
    else
      next = b.eigenvalues[j];
    while (i < a.size() && a.eigenvalues[i] <= next + tie_tol) ++i;
    while (j < b.size() && b.eigenvalues[j] <= next + tie_tol) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / ma - static_cast<double>(j) / mb));
  }
  return sup;
}

double ids_comparison(int n, const Params& p, double solve_tol) {
  if (n < 1) throw std::invalid_argument("ids_comparison: n must be positive");
  TridiagonalOperator graph_op = laplacian_from_graph(group::schreier_graph(n), p);
  PointedWord window{eta_prefix((std::int64_t{1} << n) - 1), 1};
  TridiagonalOperator window_op = laplacian_from_graph(group::graph_from_window(window), p);
  SpectralData sg = eigenvalues(graph_op, solve_tol);
  SpectralData sw = eigenvalues(window_op, solve_tol);
  return ids_sup_diff(sg, sw, 4 * solve_tol);
}

bool nesting_check(int n, const Params& p, double tol, double solve_tol) {
  if (n < 1) throw std::invalid_argument("nesting_check: n must be positive");
  SpectralData coarse = eigenvalues(laplacian_from_graph(group::schreier_graph(n), p), solve_tol);
  SpectralData fine = eigenvalues(laplacian_from_graph(group::schreier_graph(n + 1), p), solve_tol);
  const auto* begin = fine.eigenvalues.data();
  const auto* end = begin + fine.eigenvalues.size();
  for (Eigen::Index i = 0; i < coarse.size(); ++i) {
    const double lambda = coarse.eigenvalues[i];
    auto it = std::lower_bound(begin, end, lambda);
    double dist = std::numeric_limits<double>::infinity();
    if (it != end) dist = std::min(dist, std::abs(*it - lambda));
    if (it != begin) dist = std::min(dist, std::abs(*(it - 1) - lambda));
    if (dist > tol) return false;
  }
  return true;
}

MeasureEstimate measure_estimate(const SpectralData& sd, double epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("measure_estimate: epsilon must be positive");
  MeasureEstimate out;
  out.epsilon = epsilon;
  if (sd.size() == 0) return out;
  double start = sd.eigenvalues[0] - epsilon;
  double end = sd.eigenvalues[0] + epsilon;
  out.interval_count = 1;
  for (Eigen::Index i = 1; i < sd.size(); ++i) {
    double lo = sd.eigenvalues[i] - epsilon;
    double hi = sd.eigenvalues[i] + epsilon;
    if (lo <= end) {
      end = std::max(end, hi);
    } else {
      out.cover_length += end - start;
      ++out.interval_count;
      start = lo;
      end = hi;
    }
  }
  out.cover_length += end - start;
  return out;
}

void write_csv(std::ostream& os, const SpectralData& sd) {
  os << "index,eigenvalue\n";
  char buf[64];
  for (Eigen::Index i = 0; i < sd.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", sd.eigenvalues[i]);
    os << (i + 1) << ',' << buf << '\n';
  }
}

}  // namespace grig::spectra
