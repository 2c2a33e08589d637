#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdifs/dimension.hpp"
#include "gdifs/ifs_graph.hpp"

namespace gdifs {

/// Outcome of a single inequality under the 1e-9 clearance policy.
enum class Check { Holds, Fails, Boundary };

const char* to_string(Check c) noexcept;

struct ConditionReport {
  bool cond1_holds = false;        // |I_u| = |I_v|, exact
  double cond2_value = 0.0;        // h_v / h_u
  Check cond2 = Check::Boundary;   // value <= 1
  double cond3_value = 0.0;        // (a + g_u)(|I_u|^s - a^s) / (b a^s)
  Check cond3 = Check::Boundary;   // value >= 1
  double tolerance = 1e-9;

  bool all_hold() const { return cond1_holds && cond2 == Check::Holds && cond3 == Check::Holds; }
};

enum class CertificationStatus { Certified, FailedCondition, Inconclusive };

const char* to_string(CertificationStatus s) noexcept;

struct ExactMeasures {
  double h_u = 0.0;
  double h_v = 0.0;
};

struct CertificationReport {
  TwoVertexFamily family;
  DimensionResult dimension;
  ConditionReport conditions;
  CertificationStatus status = CertificationStatus::Inconclusive;
  int failed_condition = 0;  // 1..3 when status is FailedCondition
  std::optional<ExactMeasures> measures;
};

ConditionReport check_conditions(const TwoVertexFamily& family, double s, const std::vector<double>& h);

/// Solves the dimension and checks the three conditions. Throws NotCanonicalFamily.
CertificationReport certify(const DirectedGraphIfs& ifs, double tol = 1e-12);
CertificationReport certify(const TwoVertexFamily& family, double tol = 1e-12);

/// H_u = |I_u|^s and H_v = |I_u|^s (1 - r_e1^s) / r_e2^s. Throws NotCertified
/// unless the conditions hold at s.
ExactMeasures exact_measures(const TwoVertexFamily& family, double s);

enum class Side { U, V };

/// f_u(x, y) = (x^s + (h_v/h_u) y^s) / (x + g_u + y)^s, and f_v with the roles swapped.
double density_function(const TwoVertexFamily& family, double s, const std::vector<double>& h,
                        Side vertex, double x, double y);

/// y_max / b = cond3^(1 / (1 - s)). Throws DimensionAtOne when s is within 1e-12 of 1.
double y_max_ratio(const TwoVertexFamily& family, double s);

}  // namespace gdifs
