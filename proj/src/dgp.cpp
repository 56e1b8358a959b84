#include "panelkit/dgp.hpp"

#include <cmath>

#include "panelkit/errors.hpp"
#include "panelkit/rng.hpp"

namespace panelkit {

DgpSpec::Family dgp_family_from_string(const std::string& name) {
  if (name == "independent-random-walks")
    return DgpSpec::Family::IndependentRandomWalks;
  if (name == "cointegrated-homogeneous")
    return DgpSpec::Family::CointegratedHomogeneous;
  if (name == "cointegrated-heterogeneous")
    return DgpSpec::Family::CointegratedHeterogeneous;
  if (name == "ecm-pmg") return DgpSpec::Family::EcmPmg;
  if (name == "causal-var") return DgpSpec::Family::CausalVar;
  throw InvalidParametersError("unknown DGP family '" + name + "'");
}

std::string dgp_family_to_string(DgpSpec::Family family) {
  switch (family) {
    case DgpSpec::Family::IndependentRandomWalks:
      return "independent-random-walks";
    case DgpSpec::Family::CointegratedHomogeneous:
      return "cointegrated-homogeneous";
    case DgpSpec::Family::CointegratedHeterogeneous:
      return "cointegrated-heterogeneous";
    case DgpSpec::Family::EcmPmg:
      return "ecm-pmg";
    case DgpSpec::Family::CausalVar:
      return "causal-var";
  }
  return "?";
}

namespace {

void validate(const DgpSpec& s) {
  if (s.n_entities < 1 || s.n_periods < 20)
    throw InvalidParametersError("synth_dgp: need N >= 1 and T >= 20");
  if (s.n_regressors < 1)
    throw InvalidParametersError("synth_dgp: need at least one regressor");
  if (s.noise_sd <= 0.0)
    throw InvalidParametersError("synth_dgp: noise_sd must be > 0");
  if (std::fabs(s.error_rho) >= 1.0)
    throw InvalidParametersError("synth_dgp: |error_rho| must be < 1");
  if (s.family == DgpSpec::Family::EcmPmg) {
    if (!(s.phi_min <= s.phi_max) || s.phi_min <= -2.0 || s.phi_max >= 0.0)
      throw InvalidParametersError(
          "synth_dgp: ecm-pmg needs -2 < phi_min <= phi_max < 0");
  }
  if (s.family == DgpSpec::Family::CausalVar &&
      (std::fabs(s.var_self) >= 1.0 || std::fabs(s.var_cause_ar) >= 1.0))
    throw InvalidParametersError(
        "synth_dgp: causal-var AR coefficients must be inside the unit "
        "circle");
}

std::vector<std::string> names_for(const DgpSpec& s, int n_vars) {
  if (!s.variable_names.empty()) {
    if (static_cast<int>(s.variable_names.size()) != n_vars)
      throw InvalidParametersError("synth_dgp: expected " +
                                   std::to_string(n_vars) +
                                   " variable names");
    return s.variable_names;
  }
  std::vector<std::string> names = {"Y"};
  for (int j = 1; j < n_vars; ++j)
    names.push_back("X" + std::to_string(j));
  return names;
}

}  // namespace

Panel synth_dgp(const DgpSpec& spec) {
  validate(spec);
  const int N = spec.n_entities, T = spec.n_periods;
  const int k = spec.family == DgpSpec::Family::CausalVar
                    ? 1
                    : spec.n_regressors;
  const auto names = names_for(spec, 1 + k);

  std::vector<Quarter> periods(T);
  periods[0] = spec.start;
  for (int t = 1; t < T; ++t) periods[t] = periods[t - 1].next();

  std::vector<PanelRecord> records;
  records.reserve(static_cast<size_t>(N) * T * (1 + k));

  for (int e = 0; e < N; ++e) {
    Rng rng(substream_seed(spec.seed, static_cast<uint64_t>(e)));
    Eigen::MatrixXd X(T, k);
    Eigen::VectorXd y(T);
    const double frac = N > 1 ? static_cast<double>(e) / (N - 1) : 0.5;

    switch (spec.family) {
      case DgpSpec::Family::IndependentRandomWalks: {
        const double drift =
            spec.entity_trends ? spec.trend_slope * (e + 1) : 0.0;
        double cy = rng.gaussian();
        for (int t = 0; t < T; ++t) {
          if (t > 0) cy += drift + spec.noise_sd * rng.gaussian();
          y(t) = cy;
          for (int j = 0; j < k; ++j) {
            if (t == 0)
              X(0, j) = rng.gaussian();
            else
              X(t, j) = X(t - 1, j) + drift + spec.noise_sd * rng.gaussian();
          }
        }
        break;
      }
      case DgpSpec::Family::CointegratedHomogeneous:
      case DgpSpec::Family::CointegratedHeterogeneous: {
        const double beta_e =
            spec.family == DgpSpec::Family::CointegratedHomogeneous
                ? spec.beta
                : spec.beta - spec.beta_spread +
                      2.0 * spec.beta_spread * frac;
        const double trend =
            spec.entity_trends ? spec.trend_slope * (e + 1) : 0.0;
        double u = spec.noise_sd * rng.gaussian() /
                   std::sqrt(1.0 - spec.error_rho * spec.error_rho);
        for (int t = 0; t < T; ++t) {
          double xsum = 0.0;
          for (int j = 0; j < k; ++j) {
            X(t, j) = t == 0 ? rng.gaussian() : X(t - 1, j) + rng.gaussian();
            xsum += X(t, j);
          }
          if (t > 0)
            u = spec.error_rho * u + spec.noise_sd * rng.gaussian();
          y(t) = spec.intercept + beta_e * xsum + trend * (t + 1) + u;
        }
        break;
      }
      case DgpSpec::Family::EcmPmg: {
        Eigen::VectorXd theta = Eigen::VectorXd::Zero(k);
        for (int j = 0; j < k; ++j)
          theta(j) = spec.theta.empty()
                         ? 0.5
                         : spec.theta[j % spec.theta.size()];
        const double phi =
            spec.phi_min + (spec.phi_max - spec.phi_min) * frac;
        const double a = 1.0 + phi;  // AR coefficient of the error term
        const double alpha = spec.intercept + e;
        double z = spec.noise_sd * rng.gaussian() / std::sqrt(1.0 - a * a);
        for (int t = 0; t < T; ++t) {
          double xth = 0.0;
          for (int j = 0; j < k; ++j) {
            X(t, j) = t == 0 ? rng.gaussian() : X(t - 1, j) + rng.gaussian();
            xth += theta(j) * X(t, j);
          }
          if (t > 0) z = a * z + spec.noise_sd * rng.gaussian();
          y(t) = alpha + xth + z;
        }
        break;
      }
      case DgpSpec::Family::CausalVar: {
        double x = rng.gaussian() /
                   std::sqrt(1.0 - spec.var_cause_ar * spec.var_cause_ar);
        double yy = rng.gaussian();
        for (int t = 0; t < T; ++t) {
          if (t > 0) {
            const double xprev = X(t - 1, 0);
            x = spec.var_cause_ar * xprev + rng.gaussian();
            yy = spec.var_self * y(t - 1) + spec.var_causal * xprev +
                 spec.noise_sd * rng.gaussian();
          }
          X(t, 0) = x;
          y(t) = yy;
        }
        break;
      }
    }

    std::string entity = "E" + std::to_string(e + 1);
    if (N > 9 && e + 1 < 10) entity = "E0" + std::to_string(e + 1);
    for (int t = 0; t < T; ++t) {
      records.push_back({entity, periods[t], names[0], y(t)});
      for (int j = 0; j < k; ++j)
        records.push_back({entity, periods[t], names[1 + j], X(t, j)});
    }
  }
  return Panel::build(records);
}

}  // namespace panelkit
