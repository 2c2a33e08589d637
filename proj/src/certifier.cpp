#include "gdifs/certifier.hpp"

#include <cmath>

#include "gdifs/error.hpp"

namespace gdifs {

namespace {

constexpr double kClearance = 1e-9;

double rpow(const Rational& q, double s) { return std::exp(s * q.log()); }

double cond3_value(const TwoVertexFamily& f, double s) {
  const double as = rpow(f.a, s);
  return (f.a + f.g_u).to_double() * (rpow(f.length_u(), s) - as) / (f.b.to_double() * as);
}

// value <= 1 for below, value >= 1 otherwise
Check classify(double value, bool below) {
  const double margin = below ? 1.0 - value : value - 1.0;
  if (margin >= kClearance) return Check::Holds;
  if (margin < -kClearance) return Check::Fails;
  return Check::Boundary;
}

}  // namespace

const char* to_string(Check c) noexcept {
  switch (c) {
    case Check::Holds: return "holds";
    case Check::Fails: return "fails";
    case Check::Boundary: return "boundary";
  }
  return "?";
}

const char* to_string(CertificationStatus s) noexcept {
  switch (s) {
    case CertificationStatus::Certified: return "Certified";
    case CertificationStatus::FailedCondition: return "FailedCondition";
    case CertificationStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ConditionReport check_conditions(const TwoVertexFamily& family, double s, const std::vector<double>& h) {
  if (h.size() != 2) fail(ErrorCode::NotCanonicalFamily, "expected a two-vertex eigenvector");
  ConditionReport r;
  r.tolerance = kClearance;
  r.cond1_holds = family.length_u() == family.length_v();
  r.cond2_value = h[1] / h[0];
  r.cond2 = classify(r.cond2_value, true);
  r.cond3_value = cond3_value(family, s);
  r.cond3 = classify(r.cond3_value, false);
  return r;
}

CertificationReport certify(const DirectedGraphIfs& ifs, double tol) {
  return certify(two_vertex_family(ifs), tol);
}

CertificationReport certify(const TwoVertexFamily& family, double tol) {
  CertificationReport report;
  report.family = family;
  report.dimension = solve_dimension(family.to_ifs(), tol);
  report.conditions = check_conditions(family, report.dimension.s, report.dimension.h);
  const auto& c = report.conditions;
  if (!c.cond1_holds) {
    report.status = CertificationStatus::FailedCondition;
    report.failed_condition = 1;
  } else if (c.cond2 == Check::Fails) {
    report.status = CertificationStatus::FailedCondition;
    report.failed_condition = 2;
  } else if (c.cond3 == Check::Fails) {
    report.status = CertificationStatus::FailedCondition;
    report.failed_condition = 3;
  } else if (c.all_hold()) {
    report.status = CertificationStatus::Certified;
    report.measures = exact_measures(family, report.dimension.s);
  }
  return report;
}

ExactMeasures exact_measures(const TwoVertexFamily& family, double s) {
  const DirectedGraphIfs ifs = family.to_ifs();
  const auto h = perron_vector(ifs, s);
  if (!check_conditions(family, s, h).all_hold())
    fail(ErrorCode::NotCertified, "conditions do not all hold");
  const double lus = rpow(family.length_u(), s);
  return {lus, lus * (1.0 - rpow(family.ratio_e1(), s)) / rpow(family.ratio_e2(), s)};
}

double density_function(const TwoVertexFamily& family, double s, const std::vector<double>& h,
                        Side vertex, double x, double y) {
  if (h.size() != 2) fail(ErrorCode::NotCanonicalFamily, "expected a two-vertex eigenvector");
  if (x < 0.0 || y < 0.0) fail(ErrorCode::InvalidArgument, "x and y must be nonnegative");
  const bool at_u = vertex == Side::U;
  const double ratio = at_u ? h[1] / h[0] : h[0] / h[1];
  const double gap = (at_u ? family.g_u : family.g_v).to_double();
  return (std::pow(x, s) + ratio * std::pow(y, s)) / std::pow(x + gap + y, s);
}

double y_max_ratio(const TwoVertexFamily& family, double s) {
  if (std::abs(1.0 - s) < 1e-12) fail(ErrorCode::DimensionAtOne, "s is 1");
  if (!(s > 0.0 && s < 1.0)) fail(ErrorCode::InvalidArgument, "s must lie in (0, 1)");
  return std::pow(cond3_value(family, s), 1.0 / (1.0 - s));
}

}  // namespace gdifs
