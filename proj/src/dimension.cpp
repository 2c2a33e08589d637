#include "gdifs/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gdifs/error.hpp"

namespace gdifs {

namespace {

constexpr double kMaxBracket = 64.0;
constexpr int kMaxBisections = 200;
constexpr double kEigenTolerance = 1e-9;

double rho_at(const DirectedGraphIfs& ifs, double t) { return spectral_radius(build_matrix(ifs, t)); }

}  // namespace

RatioMatrix build_matrix(const DirectedGraphIfs& ifs, double t) {
  if (!(t >= 0.0)) fail(ErrorCode::InvalidArgument, "exponent must be nonnegative");
  const auto n = static_cast<Eigen::Index>(ifs.vertex_count());
  RatioMatrix m = RatioMatrix::Zero(n, n);
  for (const auto& e : ifs.edges())
    m(static_cast<Eigen::Index>(e.from), static_cast<Eigen::Index>(e.to)) +=
        std::exp(t * e.map.ratio.log());
  return m;
}

double spectral_radius(const RatioMatrix& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) {
    const double tr = m(0, 0) + m(1, 1);
    // discriminant written as a sum of squares to stay nonnegative
    const double diff = m(0, 0) - m(1, 1);
    const double disc = diff * diff + 4.0 * m(0, 1) * m(1, 0);
    return 0.5 * (tr + std::sqrt(std::max(0.0, disc)));
  }
  const RatioMatrix shifted = m + RatioMatrix::Identity(n, n);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  double lower = 0.0, upper = 0.0;
  for (int it = 0; it < 1'000'000; ++it) {
    const Eigen::VectorXd y = shifted * x;
    lower = (y.array() / x.array()).minCoeff();
    upper = (y.array() / x.array()).maxCoeff();
    x = y / y.maxCoeff();
    if (upper - lower <= 1e-14 * upper) break;
  }
  return 0.5 * (lower + upper) - 1.0;
}

DimensionResult solve_dimension(const DirectedGraphIfs& ifs, double tol) {
  if (!(tol >= 1e-14)) fail(ErrorCode::InvalidArgument, "tolerance must be at least 1e-14");
  DimensionResult result;
  double hi = 1.0;
  while (rho_at(ifs, hi) >= 1.0) {
    hi *= 2.0;
    if (hi > kMaxBracket)
      fail(ErrorCode::BracketFailure, "spectral radius stays >= 1 up to t = 64");
  }
  result.initial_upper = hi;
  double lo = 0.0;
  double best = hi, best_residual = std::abs(rho_at(ifs, hi) - 1.0);
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++result.iterations;
    const double rho = rho_at(ifs, mid);
    const double residual = std::abs(rho - 1.0);
    if (residual < best_residual) {
      best = mid;
      best_residual = residual;
    }
    if (rho > 1.0)
      lo = mid;
    else if (rho < 1.0)
      hi = mid;
    else
      break;
    if (hi - lo <= 1e-15 * std::max(1.0, hi) && best_residual <= tol) break;
  }
  if (best_residual > tol)
    fail(ErrorCode::Internal,
         "bisection stalled with residual " + std::to_string(best_residual));
  result.s = best;
  result.rho_residual = best_residual;
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  result.h = perron_vector(ifs, result.s);
  result.eigen_residual = eigen_residual(ifs, result.s, result.h);
  return result;
}

std::vector<double> perron_vector(const DirectedGraphIfs& ifs, double s) {
  return perron_vector(ifs, compute_hulls(ifs), s);
}

std::vector<double> perron_vector(const DirectedGraphIfs& ifs, const Hull& hull, double s) {
  const RatioMatrix a = build_matrix(ifs, s);
  const double rho = spectral_radius(a);
  if (std::abs(rho - 1.0) > kEigenTolerance)
    fail(ErrorCode::NotAtEigenvalueOne,
         "rho(A(s)) = " + std::to_string(rho) + " is not 1 at s = " + std::to_string(s));
  const auto n = a.rows();
  const double root_scale = std::exp(s * hull[0].length().log());
  std::vector<double> h(static_cast<std::size_t>(n), root_scale);
  if (n > 1) {
    // Fix h_0 and solve the remaining rows of (A - I) h = 0.
    const RatioMatrix b = a - RatioMatrix::Identity(n, n);
    const Eigen::MatrixXd sub = b.bottomRightCorner(n - 1, n - 1);
    const Eigen::VectorXd rhs = -b.bottomLeftCorner(n - 1, 1);
    const Eigen::VectorXd rest = sub.fullPivLu().solve(rhs);
    for (Eigen::Index i = 1; i < n; ++i) h[static_cast<std::size_t>(i)] = root_scale * rest(i - 1);
  }
  for (double v : h)
    if (!(v > 0.0)) fail(ErrorCode::NotAtEigenvalueOne, "eigenvector is not strictly positive");
  const double residual = eigen_residual(ifs, s, h);
  if (residual > kEigenTolerance * std::max(1.0, root_scale))
    fail(ErrorCode::NotAtEigenvalueOne, "eigen residual " + std::to_string(residual));
  return h;
}

double eigen_residual(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h) {
  const RatioMatrix a = build_matrix(ifs, s);
  const Eigen::Map<const Eigen::VectorXd> hv(h.data(), static_cast<Eigen::Index>(h.size()));
  return (a * hv - hv).cwiseAbs().maxCoeff();
}

}  // namespace gdifs
