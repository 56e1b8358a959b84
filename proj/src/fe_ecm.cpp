#include "panelkit/fe_ecm.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "panelkit/errors.hpp"
#include "panelkit/regression.hpp"

namespace panelkit {

EcmDesign build_ecm_design(const Panel& panel,
                           const std::string& inst_variable,
                           const std::string& flow_variable,
                           const std::string& dependent,
                           const std::vector<std::string>& controls,
                           const std::vector<std::string>& extra_regressors) {
  for (const std::string* v : {&inst_variable, &flow_variable, &dependent})
    if (!panel.has_variable(*v))
      throw MissingVariableError("build_ecm_design: missing variable '" +
                                 *v + "'");
  for (const auto& v : controls)
    if (!panel.has_variable(v))
      throw MissingVariableError("build_ecm_design: missing variable '" + v +
                                 "'");
  for (const auto& v : extra_regressors)
    if (!panel.has_variable(v))
      throw MissingVariableError("build_ecm_design: missing variable '" + v +
                                 "'");

  const int N = panel.n_entities();
  const int T = panel.n_periods();
  if (T < 6) throw TooFewPeriodsError("build_ecm_design: T too small");

  const std::string inter_name = inst_variable + "_" + flow_variable;

  // Base series per entity, in table order: dep, flow, inst_flow, controls,
  // extras.
  std::vector<std::string> base;
  base.push_back(dependent);
  base.push_back(flow_variable);
  base.push_back(inter_name);
  for (const auto& v : controls) base.push_back(v);
  for (const auto& v : extra_regressors) base.push_back(v);
  const int nb = static_cast<int>(base.size());

  EcmDesign d;
  d.dependent_name = "D." + dependent;
  for (const auto& v : base) d.columns.push_back("L." + v);
  for (const auto& v : base) d.columns.push_back("LD." + v);
  d.n_entities = N;
  d.t_used = T - 2;
  d.n_obs = N * d.t_used;
  d.entity_names = panel.entities();
  d.X.resize(d.n_obs, 2 * nb);
  d.y.resize(d.n_obs);

  for (int e = 0; e < N; ++e) {
    Eigen::MatrixXd S(T, nb);
    for (int j = 0; j < nb; ++j) {
      if (base[j] == inter_name) {
        const Eigen::VectorXd inst = panel.series(
            e, panel.variable_index(inst_variable));
        const Eigen::VectorXd flow = panel.series(
            e, panel.variable_index(flow_variable));
        S.col(j) = inst.cwiseProduct(flow);
      } else {
        S.col(j) = panel.series(e, panel.variable_index(base[j]));
      }
    }
    // Rows t = 3..T: D.y_t, L.x = x_{t-1}, LD.x = x_{t-1} - x_{t-2}.
    const int n = d.t_used;
    const int off = e * n;
    d.y.segment(off, n) = S.col(0).tail(n) - S.col(0).segment(1, n);
    for (int j = 0; j < nb; ++j) {
      d.X.block(off, j, n, 1) = S.col(j).segment(1, n);
      d.X.block(off, nb + j, n, 1) =
          S.col(j).segment(1, n) - S.col(j).head(n);
    }
    for (int t = 0; t < n; ++t) {
      d.entity_of_row.push_back(e);
      d.period_of_row.push_back(t + 2);
    }
  }

  // Flag an interaction without variation (e.g. a zero institution score).
  const Eigen::VectorXd li = d.X.col(2);
  const Eigen::VectorXd ldi = d.X.col(nb + 2);
  const double li_var = (li.array() - li.mean()).abs().maxCoeff();
  const double ldi_var = (ldi.array() - ldi.mean()).abs().maxCoeff();
  d.degenerate_interaction = li_var < 1e-12 || ldi_var < 1e-12;
  return d;
}

FeEcmReport fe_estimate(const EcmDesign& design, bool time_fe,
                        bool cluster_by_entity) {
  const int n = design.n_obs;
  const int k = static_cast<int>(design.columns.size());
  const int N = design.n_entities;
  const int T = design.t_used;

  // Within transform; the two-way version adds back the grand mean.
  Eigen::MatrixXd X = design.X;
  Eigen::VectorXd y = design.y;
  auto sweep_entity = [&](Eigen::VectorXd& v) {
    for (int e = 0; e < N; ++e) {
      auto seg = v.segment(e * T, T);
      seg.array() -= seg.mean();
    }
  };
  auto sweep_period = [&](Eigen::VectorXd& v) {
    for (int t = 0; t < T; ++t) {
      double m = 0.0;
      for (int e = 0; e < N; ++e) m += v(e * T + t);
      m /= N;
      for (int e = 0; e < N; ++e) v(e * T + t) -= m;
    }
  };
  // Sequential sweeps on a balanced panel give exactly
  // x - xbar_i - xbar_t + xbar.
  for (int j = 0; j <= k; ++j) {
    Eigen::VectorXd col = j < k ? Eigen::VectorXd(X.col(j)) : y;
    sweep_entity(col);
    if (time_fe) sweep_period(col);
    if (j < k)
      X.col(j) = col;
    else
      y = col;
  }

  const int absorbed = N + (time_fe ? T - 1 : 0);
  const int dof = n - k - absorbed;
  if (dof <= 0)
    throw TooFewObservationsError("fe_estimate: not enough observations");

  const Eigen::MatrixXd xtx = X.transpose() * X;
  auto ldlt = spd_factor(xtx, "fe_estimate");
  const Eigen::VectorXd beta = ldlt.solve(X.transpose() * y);
  const Eigen::VectorXd resid = y - X * beta;
  const Eigen::MatrixXd xtx_inv =
      ldlt.solve(Eigen::MatrixXd::Identity(k, k));

  FeEcmReport report;
  report.columns = design.columns;
  report.coefficients = beta;
  report.time_fe = time_fe;
  report.n_obs = n;

  Eigen::MatrixXd V;
  if (cluster_by_entity) {
    Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(k, k);
    for (int e = 0; e < N; ++e) {
      const Eigen::VectorXd s =
          X.middleRows(e * T, T).transpose() * resid.segment(e * T, T);
      meat.noalias() += s * s.transpose();
    }
    const double c = (static_cast<double>(N) / (N - 1)) *
                     (static_cast<double>(n - 1) / dof);
    V = c * xtx_inv * meat * xtx_inv;
    report.se_type = "cluster-entity";
  } else {
    const double s2 = resid.squaredNorm() / dof;
    V = s2 * xtx_inv;
    report.se_type = "conventional";
  }
  report.standard_errors = V.diagonal().cwiseMax(0.0).cwiseSqrt();
  report.z_stats.resize(k);
  for (int j = 0; j < k; ++j)
    report.z_stats(j) = report.standard_errors(j) > 0.0
                            ? beta(j) / report.standard_errors(j)
                            : 0.0;
  return report;
}

}  // namespace panelkit
