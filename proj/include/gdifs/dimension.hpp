#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gdifs/ifs_graph.hpp"

namespace gdifs {

/// A(t): entry (u,v) is the sum of r_e^t over edges u -> v.
using RatioMatrix = Eigen::MatrixXd;

RatioMatrix build_matrix(const DirectedGraphIfs& ifs, double t);

/// Perron root of a nonnegative irreducible matrix. Closed form for 2x2; otherwise
/// power iteration on M + I (which is primitive even when M is periodic) from the
/// all-ones vector, stopped when the Collatz-Wielandt bounds agree to 1e-14.
double spectral_radius(const RatioMatrix& m);

struct DimensionResult {
  double s = 0.0;
  double rho_residual = 0.0;     // |rho(A(s)) - 1|
  std::vector<double> h;         // Perron vector, h[0] = |I_0|^s
  double eigen_residual = 0.0;   // ||A(s) h - h||_inf
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double initial_upper = 0.0;    // the T at which rho(A(T)) < 1 first held
  int iterations = 0;
};

/// Bisection for rho(A(s)) = 1 on [0, T], doubling T until rho(A(T)) < 1.
DimensionResult solve_dimension(const DirectedGraphIfs& ifs, double tol = 1e-12);

/// Positive eigenvector of A(s) for eigenvalue 1, normalised so the vertex 0
/// component equals |I_0|^s. Throws NotAtEigenvalueOne if rho(A(s)) is not 1 to 1e-9.
std::vector<double> perron_vector(const DirectedGraphIfs& ifs, double s);
std::vector<double> perron_vector(const DirectedGraphIfs& ifs, const Hull& hull, double s);

double eigen_residual(const DirectedGraphIfs& ifs, double s, const std::vector<double>& h);

}  // namespace gdifs
