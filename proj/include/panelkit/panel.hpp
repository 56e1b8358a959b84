#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "panelkit/errors.hpp"
#include "panelkit/quarter.hpp"

namespace panelkit {

enum class Transform { Level, NaturalLog };
enum class Role { Dependent, Regressor, Auxiliary };

struct VariableSpec {
  std::string name;
  Transform transform = Transform::Level;
  Role role = Role::Auxiliary;
};

struct PanelRecord {
  std::string entity;
  Quarter period;
  std::string variable;
  double value = 0.0;
};

// Balanced entity x quarter x variable data cube. Immutable after
// construction; every accessor is const and safe for concurrent reads.
// Entity ids and variable names are kept in lexicographic order and
// periods in chronological order, so construction is insensitive to the
// ordering of the input records.
class Panel {
 public:
  static Panel build(const std::vector<PanelRecord>& records);

  const std::vector<std::string>& entities() const { return entities_; }
  const std::vector<Quarter>& periods() const { return periods_; }
  const std::vector<std::string>& variables() const { return variables_; }

  int n_entities() const { return static_cast<int>(entities_.size()); }
  int n_periods() const { return static_cast<int>(periods_.size()); }
  int n_variables() const { return static_cast<int>(variables_.size()); }

  int entity_index(const std::string& name) const;   // -1 when absent
  int variable_index(const std::string& name) const; // -1 when absent
  bool has_variable(const std::string& name) const {
    return variable_index(name) >= 0;
  }

  double value(int entity, int period, int variable) const {
    return data_(entity * n_periods() + period, variable);
  }

  // Full time series of one variable for one entity (length n_periods).
  Eigen::VectorXd series(int entity, int variable) const;
  Eigen::VectorXd series(const std::string& entity,
                         const std::string& variable) const;

  // T x k matrix of the named variables for one entity, column order as given.
  Eigen::MatrixXd entity_matrix(int entity,
                                const std::vector<std::string>& vars) const;

  // apply_transform: returns a copy with the named variable transformed.
  Panel transformed(const VariableSpec& spec) const;

  // Copy with a variable added or replaced; values is (entity, period) major,
  // i.e. values[e * n_periods() + t].
  Panel with_variable(const std::string& name,
                      const std::vector<double>& values) const;

  bool operator==(const Panel& other) const {
    return entities_ == other.entities_ && periods_ == other.periods_ &&
           variables_ == other.variables_ && data_ == other.data_;
  }

 private:
  Panel() = default;

  std::vector<std::string> entities_;
  std::vector<Quarter> periods_;
  std::vector<std::string> variables_;
  Eigen::MatrixXd data_;  // (n_entities * n_periods) x n_variables
};

// lag k: value at t becomes the value at t-k; drops the first k alignment
// positions, so the result has length n-k and index i holds x[i].
Eigen::VectorXd lag(const Eigen::VectorXd& x, int k);

// diff k: k-fold first difference, length n-k.
Eigen::VectorXd diff(const Eigen::VectorXd& x, int k);

}  // namespace panelkit
