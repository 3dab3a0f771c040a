#pragma once

// Pre-wired parameter sweeps behind `qbound reproduce`: the published
// curve/surface grids for the Gaussian models and the discrete-model table.

#include "qbound/bounds.hpp"

#include <vector>

namespace qbound {

struct Fig1Row {
  double delta1;
  double bound;
};

// Scalar singular-submodel bound as a function of the finite step delta1,
// at fixed theta and unit-variance thermal noise by default.
// Grid: delta1 in (0, 3], step 0.05.
std::vector<Fig1Row> fig1_data(double sigma2 = 1.0, double theta = 1.0);

struct Fig2Row {
  double t2;
  double sigma2;
  double rld_bound;
};

// One-sided-weight sweep of the singular-submodel bounds: t2 in [0, 1]
// (step 0.02) for sigma2 in {0.5, 1, 2, 5, 50}.
std::vector<Fig2Row> fig2_data();

struct Fig3Row {
  double theta1;
  double theta2;
  double bound_a;  // finite steps t = -theta1, s = -theta2
  double bound_b;  // infinitesimal-step bound 2 sigma2 + 1
  double bound_c;  // origin-pinned bound 4 sigma2 + 2
};

// Two-parameter singular-submodel sweep over theta_i in [-2, 0), step 0.05.
std::vector<Fig3Row> fig3_data(double sigma2 = 25.0);

struct DiscreteTableRow {
  long theta;
  double exponent;          // adjacent-point asymptotic error exponent
  double relative_entropy;  // D(rho_{theta-1} || rho_theta)
  double closed_form_mse;   // single-copy MSE of the optimal observable
  double exact_mse;         // same quantity evaluated through the estimator path
};

std::vector<DiscreteTableRow> discrete_table_data(long theta_max = 10, index_t dim_cut = 16);

}  // namespace qbound
