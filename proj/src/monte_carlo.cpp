#include "panelkit/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "panelkit/dh.hpp"
#include "panelkit/errors.hpp"
#include "panelkit/kao.hpp"
#include "panelkit/pedroni.hpp"
#include "panelkit/rng.hpp"
#include "panelkit/stats.hpp"

namespace panelkit {

namespace {

bool reject(double value, Tail tail, double nominal) {
  switch (tail) {
    case Tail::Left:
      return value < normal_quantile(nominal);
    case Tail::Right:
      return value > normal_quantile(1.0 - nominal);
    case Tail::TwoSided:
      return std::fabs(value) > normal_quantile(1.0 - nominal / 2.0);
  }
  return false;
}

struct RepOutcome {
  bool error = false;
  std::vector<unsigned char> rejected;
};

}  // namespace

McResult monte_carlo(const std::string& test, const DgpSpec& dgp, int reps,
                     double nominal, const McStageParams& params,
                     int threads) {
  if (reps < 100)
    throw InvalidParametersError("monte_carlo: need reps >= 100");
  if (!(nominal > 0.0 && nominal < 1.0))
    throw InvalidParametersError("monte_carlo: nominal level in (0,1)");
  if (threads < 1) threads = 1;

  // Variable roles implied by the DGP's naming convention.
  Panel probe = [&] {
    DgpSpec s = dgp;
    s.seed = substream_seed(dgp.seed, 0);
    return synth_dgp(s);
  }();
  // The panel stores variables sorted by name; recover roles from the
  // spec's naming (first declared name is the dependent).
  const std::string dependent =
      dgp.variable_names.empty() ? "Y" : dgp.variable_names[0];
  std::vector<std::string> regressors;
  for (const auto& v : probe.variables())
    if (v != dependent) regressors.push_back(v);
  const std::string first_regressor =
      regressors.empty() ? "" : regressors.front();

  McResult out;
  out.test = test;
  out.reps = reps;
  out.nominal = nominal;
  out.threads = threads;

  CointSpec cspec;
  cspec.dependent = dependent;
  cspec.regressors = regressors;
  cspec.bandwidth = params.bandwidth;
  cspec.aug_lags = params.aug_lags;

  // One evaluation to freeze the statistic names.
  auto run_one = [&](const Panel& p, std::vector<double>& values,
                     std::vector<Tail>& tails,
                     std::vector<std::string>* names) {
    if (test == "kao") {
      CointSpec s = cspec;
      s.homogeneity = VectorHomogeneity::SameForAll;
      s.deterministic = CointDeterministic::Means;
      const CointReport r = kao_test(p, s);
      for (const auto& st : r.statistics) {
        values.push_back(st.value);
        tails.push_back(st.tail);
        if (names) names->push_back(st.name);
      }
    } else if (test == "pedroni") {
      CointSpec s = cspec;
      s.homogeneity = VectorHomogeneity::PanelSpecific;
      s.deterministic = params.pedroni_det;
      const CointReport r = pedroni_test(p, s);
      for (const auto& st : r.statistics) {
        values.push_back(st.value);
        tails.push_back(st.tail);
        if (names) names->push_back(st.name);
      }
    } else if (test == "dh") {
      const DhReport r = dh_test(p, first_regressor, dependent,
                                 params.dh_lags);
      values.push_back(r.z_bar);
      tails.push_back(Tail::TwoSided);
      values.push_back(r.z_bar_tilde);
      tails.push_back(Tail::TwoSided);
      if (names) {
        names->push_back("Z-bar");
        names->push_back("Z-bar tilde");
      }
    } else if (test == "adf") {
      const AdfResult r =
          adf_test(p.series(0, p.variable_index(dependent)),
                   params.aug_lags, params.adf_det);
      values.push_back(r.statistic);
      tails.push_back(Tail::Left);
      if (names) names->push_back("ADF t");
    } else {
      throw InvalidParametersError("monte_carlo: unknown test '" + test +
                                   "'");
    }
  };

  {
    std::vector<double> v;
    std::vector<Tail> t;
    run_one(probe, v, t, &out.statistic_names);
  }
  const size_t n_stats = out.statistic_names.size();

  std::vector<RepOutcome> outcomes(reps);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= reps) return;
      RepOutcome& oc = outcomes[r];
      try {
        DgpSpec s = dgp;
        s.seed = substream_seed(dgp.seed, static_cast<uint64_t>(r) + 1);
        const Panel p = synth_dgp(s);
        std::vector<double> values;
        std::vector<Tail> tails;
        run_one(p, values, tails, nullptr);
        oc.rejected.resize(n_stats, 0);
        for (size_t j = 0; j < n_stats; ++j) {
          if (test == "adf") {
            oc.rejected[j] =
                values[j] < adf_critical_value(params.adf_det, nominal);
          } else {
            oc.rejected[j] = reject(values[j], tails[j], nominal) &&
                             std::isfinite(values[j]);
          }
        }
      } catch (const Error&) {
        oc.error = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::vector<long> hits(n_stats, 0);
  long ok = 0;
  for (const auto& oc : outcomes) {
    if (oc.error) {
      ++out.errors;
      continue;
    }
    ++ok;
    for (size_t j = 0; j < n_stats; ++j) hits[j] += oc.rejected[j];
  }
  for (size_t j = 0; j < n_stats; ++j) {
    const double p = ok > 0 ? static_cast<double>(hits[j]) / ok : 0.0;
    out.rejection_rates.push_back(p);
    out.binomial_se.push_back(ok > 0 ? std::sqrt(p * (1.0 - p) / ok) : 0.0);
  }
  return out;
}

}  // namespace panelkit
