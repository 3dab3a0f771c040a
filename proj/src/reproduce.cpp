#include "qbound/reproduce.hpp"

#include "qbound/estimators.hpp"

#include <cmath>
#include <limits>

namespace qbound {

std::vector<Fig1Row> fig1_data(double sigma2, double theta) {
  std::vector<Fig1Row> rows;
  for (int i = 1; i <= 60; ++i) {
    const double delta1 = 0.05 * i;
    rows.push_back({delta1, gaussian_koike_bound(theta, delta1, sigma2)});
  }
  return rows;
}

std::vector<Fig2Row> fig2_data() {
  const double sigmas[] = {0.5, 1.0, 2.0, 5.0, 50.0};
  std::vector<Fig2Row> rows;
  for (double sigma2 : sigmas) {
    for (int i = 0; i <= 50; ++i) {
      const double t2 = 0.02 * i;
      const Case2Bounds b = gaussian_case2_bounds(t2, sigma2);
      const double value = b.rld.infinite ? std::numeric_limits<double>::infinity() : b.rld.value;
      rows.push_back({t2, sigma2, value});
    }
  }
  return rows;
}

std::vector<Fig3Row> fig3_data(double sigma2) {
  const double bound_b = 2.0 * sigma2 + 1.0;
  const double bound_c = 4.0 * sigma2 + 2.0;
  std::vector<Fig3Row> rows;
  for (int i = -40; i < 0; ++i) {
    const double theta1 = 0.05 * i;
    for (int j = -40; j < 0; ++j) {
      const double theta2 = 0.05 * j;
      const Gaussian2dBound b =
          gaussian_2d_finite_delta_bound(theta1, theta2, -theta1, -theta2, sigma2);
      const double value = b.admissible ? b.value : std::numeric_limits<double>::quiet_NaN();
      rows.push_back({theta1, theta2, value, bound_b, bound_c});
    }
  }
  return rows;
}

std::vector<DiscreteTableRow> discrete_table_data(long theta_max, index_t dim_cut) {
  ParametricModel model = discrete_model_family(dim_cut);
  const Observable t_obs = discrete_optimal_observable(dim_cut);
  const Povm pvm = observable_to_pvm(t_obs);
  const EstimandFunction g = coordinate_estimand(0);
  std::vector<DiscreteTableRow> rows;
  for (long theta = 2; theta <= theta_max; ++theta) {
    const double dtheta = static_cast<double>(theta);
    const BoundReport expo = discrete_asymptotic_exponent(model, dtheta, -1.0);
    const ExtendedReal rel_ent =
        relative_entropy(model.state(dtheta - 1.0), model.state(dtheta));
    double closed = dtheta * dtheta / 3.0 - 7.0 / 12.0;
    if (theta % 2 != 0) closed += 1.0 / (2.0 * dtheta);
    const EstimatorReport exact = exact_bias_mse(model, dtheta, g, pvm);
    rows.push_back({theta, expo.value,
                    rel_ent.infinite ? std::numeric_limits<double>::infinity() : rel_ent.value,
                    closed, exact.mse});
  }
  return rows;
}

}  // namespace qbound
