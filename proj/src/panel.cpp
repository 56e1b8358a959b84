#include "panelkit/panel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace panelkit {

Quarter Quarter::parse(std::string_view s) {
  // Accepted form: YYYYQ# with # in 1..4.
  auto qpos = s.find('Q');
  if (qpos == std::string_view::npos) qpos = s.find('q');
  if (qpos == std::string_view::npos || qpos == 0 || qpos + 2 != s.size())
    throw ParseError("bad quarter label '" + std::string(s) +
                     "' (expected YYYYQ#)");
  int year = 0, q = 0;
  auto ybeg = s.data();
  auto yres = std::from_chars(ybeg, ybeg + qpos, year);
  auto qres = std::from_chars(ybeg + qpos + 1, ybeg + s.size(), q);
  if (yres.ec != std::errc{} || yres.ptr != ybeg + qpos ||
      qres.ec != std::errc{} || qres.ptr != ybeg + s.size())
    throw ParseError("bad quarter label '" + std::string(s) +
                     "' (expected YYYYQ#)");
  if (q < 1 || q > 4)
    throw ParseError("bad quarter label '" + std::string(s) +
                     "' (quarter must be 1..4)");
  return Quarter{year, q};
}

Panel Panel::build(const std::vector<PanelRecord>& records) {
  if (records.empty()) throw EmptySequenceError("build_panel: no records");

  std::set<std::string> entity_set, variable_set;
  std::set<Quarter> period_set;
  for (const auto& r : records) {
    entity_set.insert(r.entity);
    variable_set.insert(r.variable);
    period_set.insert(r.period);
  }

  Panel p;
  p.entities_.assign(entity_set.begin(), entity_set.end());
  p.variables_.assign(variable_set.begin(), variable_set.end());
  p.periods_.assign(period_set.begin(), period_set.end());

  for (size_t i = 1; i < p.periods_.size(); ++i) {
    if (p.periods_[i] != p.periods_[i - 1].next())
      throw GapInPeriodsError("build_panel: gap between " +
                              p.periods_[i - 1].str() + " and " +
                              p.periods_[i].str());
  }

  const int E = p.n_entities(), T = p.n_periods(), V = p.n_variables();
  std::map<std::string, int> eidx, vidx;
  for (int e = 0; e < E; ++e) eidx[p.entities_[e]] = e;
  for (int v = 0; v < V; ++v) vidx[p.variables_[v]] = v;

  p.data_.setConstant(static_cast<Eigen::Index>(E) * T, V,
                      std::numeric_limits<double>::quiet_NaN());
  std::vector<char> seen(static_cast<size_t>(E) * T * V, 0);
  const Quarter first = p.periods_.front();
  for (const auto& r : records) {
    if (!std::isfinite(r.value))
      throw MissingCellError("build_panel: non-finite value for (" + r.entity +
                             ", " + r.period.str() + ", " + r.variable + ")");
    const int e = eidx[r.entity];
    const int t = (r.period.year - first.year) * 4 +
                  (r.period.quarter - first.quarter);
    const int v = vidx[r.variable];
    const size_t cell = (static_cast<size_t>(e) * T + t) * V + v;
    if (seen[cell])
      throw DuplicateCellError("build_panel: duplicate cell (" + r.entity +
                               ", " + r.period.str() + ", " + r.variable +
                               ")");
    seen[cell] = 1;
    p.data_(e * T + t, v) = r.value;
  }

  for (int e = 0; e < E; ++e)
    for (int t = 0; t < T; ++t)
      for (int v = 0; v < V; ++v)
        if (!seen[(static_cast<size_t>(e) * T + t) * V + v])
          throw MissingCellError("build_panel: missing cell (" +
                                 p.entities_[e] + ", " + p.periods_[t].str() +
                                 ", " + p.variables_[v] + ")");
  return p;
}

int Panel::entity_index(const std::string& name) const {
  auto it = std::lower_bound(entities_.begin(), entities_.end(), name);
  if (it == entities_.end() || *it != name) return -1;
  return static_cast<int>(it - entities_.begin());
}

int Panel::variable_index(const std::string& name) const {
  auto it = std::lower_bound(variables_.begin(), variables_.end(), name);
  if (it == variables_.end() || *it != name) return -1;
  return static_cast<int>(it - variables_.begin());
}

Eigen::VectorXd Panel::series(int entity, int variable) const {
  return data_.col(variable).segment(entity * n_periods(), n_periods());
}

Eigen::VectorXd Panel::series(const std::string& entity,
                              const std::string& variable) const {
  const int e = entity_index(entity);
  if (e < 0) throw MissingVariableError("unknown entity '" + entity + "'");
  const int v = variable_index(variable);
  if (v < 0) throw MissingVariableError("unknown variable '" + variable + "'");
  return series(e, v);
}

Eigen::MatrixXd Panel::entity_matrix(
    int entity, const std::vector<std::string>& vars) const {
  Eigen::MatrixXd out(n_periods(), vars.size());
  for (size_t j = 0; j < vars.size(); ++j) {
    const int v = variable_index(vars[j]);
    if (v < 0) throw MissingVariableError("unknown variable '" + vars[j] + "'");
    out.col(j) = series(entity, v);
  }
  return out;
}

Panel Panel::transformed(const VariableSpec& spec) const {
  const int v = variable_index(spec.name);
  if (v < 0)
    throw MissingVariableError("apply_transform: unknown variable '" +
                               spec.name + "'");
  Panel out = *this;
  if (spec.transform == Transform::Level) return out;
  for (Eigen::Index i = 0; i < out.data_.rows(); ++i) {
    const double x = out.data_(i, v);
    if (x <= 0.0)
      throw NonPositiveForLogError("apply_transform: variable '" + spec.name +
                                   "' has non-positive value " +
                                   std::to_string(x));
    out.data_(i, v) = std::log(x);
  }
  return out;
}

Panel Panel::with_variable(const std::string& name,
                           const std::vector<double>& values) const {
  const size_t cells = static_cast<size_t>(n_entities()) * n_periods();
  if (values.size() != cells)
    throw InvalidParametersError("with_variable: expected " +
                                 std::to_string(cells) + " values, got " +
                                 std::to_string(values.size()));
  for (double x : values)
    if (!std::isfinite(x))
      throw MissingCellError("with_variable: non-finite value for '" + name +
                             "'");
  Panel out;
  out.entities_ = entities_;
  out.periods_ = periods_;
  out.variables_ = variables_;
  const int existing = variable_index(name);
  int v;
  if (existing >= 0) {
    v = existing;
    out.data_ = data_;
  } else {
    auto pos = std::lower_bound(out.variables_.begin(), out.variables_.end(),
                                name);
    v = static_cast<int>(pos - out.variables_.begin());
    out.variables_.insert(pos, name);
    out.data_.resize(data_.rows(), data_.cols() + 1);
    out.data_.leftCols(v) = data_.leftCols(v);
    out.data_.rightCols(data_.cols() - v) = data_.rightCols(data_.cols() - v);
  }
  for (size_t i = 0; i < cells; ++i)
    out.data_(static_cast<Eigen::Index>(i), v) = values[i];
  return out;
}

Eigen::VectorXd lag(const Eigen::VectorXd& x, int k) {
  if (k < 1) throw InvalidParametersError("lag: k must be >= 1");
  if (x.size() <= k)
    throw SequenceTooShortError("lag: need length > " + std::to_string(k));
  return x.head(x.size() - k);
}

Eigen::VectorXd diff(const Eigen::VectorXd& x, int k) {
  if (k < 1) throw InvalidParametersError("diff: k must be >= 1");
  if (x.size() <= k)
    throw SequenceTooShortError("diff: need length > " + std::to_string(k));
  Eigen::VectorXd out = x;
  for (int i = 0; i < k; ++i)
    out = (out.tail(out.size() - 1) - out.head(out.size() - 1)).eval();
  return out;
}

}  // namespace panelkit
