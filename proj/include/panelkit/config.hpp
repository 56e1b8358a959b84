#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace panelkit {

// Declarative pipeline configuration. File form is one `key = value` per
// line with '#' comments; lists are comma separated and the per-regressor
// ARDL orders use NAME:LAGS pairs. Command-line flags override file values.
struct PipelineConfig {
  std::string input;
  std::string annual_inst;  // optional entity,year,value CSV
  std::string inst_variable = "INST";
  std::string output_dir = "out";
  std::vector<std::string> stages = {"describe", "kao",  "pedroni", "dh",
                                     "fmols",    "pmg",  "ecm"};
  std::string dependent = "HP";
  std::vector<std::string> regressors = {"FLOW", "INCOME", "INTEREST",
                                         "EXRATE", "STOCKPRICE"};
  std::vector<std::string> log_vars;
  int bandwidth = 3;
  int aug_lags = 1;
  bool pedroni_trend = true;
  bool pedroni_group = false;
  std::string dh_cause = "FLOW";
  std::string dh_effect = "HP";
  int dh_lags = 2;
  bool dh_both_directions = true;
  int pmg_p = 2;
  std::map<std::string, int> pmg_q = {{"FLOW", 4}};
  int pmg_q_default = 1;
  std::string ecm_flow = "FLOW";
  std::string ecm_dependent = "HP";
  std::vector<std::string> ecm_controls = {"INTEREST"};
  std::vector<std::string> ecm_extra;
  std::string ecm_time_fe = "both";  // no | yes | both
  bool ecm_cluster = false;
  bool unit_roots = false;
  uint64_t seed = 12345;
};

PipelineConfig parse_config_file(const std::string& path);

// Applies one key/value pair; throws InvalidParametersError for unknown
// keys or malformed values. Shared by the file parser and flag overrides.
void apply_config_entry(PipelineConfig& config, const std::string& key,
                        const std::string& value);

std::vector<std::string> split_list(const std::string& csv);

}  // namespace panelkit
