#include "panelkit/config.hpp"

#include <fstream>

#include "panelkit/errors.hpp"

namespace panelkit {

namespace {

std::string trim(const std::string& s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw InvalidParametersError("config: bad boolean for '" + key + "': " + v);
}

int parse_int(const std::string& v, const std::string& key) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InvalidParametersError("config: bad integer for '" + key + "': " +
                                 v);
  }
}

}  // namespace

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t comma = csv.find(',', pos);
    const std::string item =
        trim(csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void apply_config_entry(PipelineConfig& c, const std::string& key,
                        const std::string& value) {
  if (key == "input") c.input = value;
  else if (key == "annual_inst") c.annual_inst = value;
  else if (key == "inst_variable") c.inst_variable = value;
  else if (key == "output") c.output_dir = value;
  else if (key == "stages") c.stages = split_list(value);
  else if (key == "dependent") c.dependent = value;
  else if (key == "regressors") c.regressors = split_list(value);
  else if (key == "log_vars") c.log_vars = split_list(value);
  else if (key == "bandwidth") c.bandwidth = parse_int(value, key);
  else if (key == "aug_lags") c.aug_lags = parse_int(value, key);
  else if (key == "pedroni_trend") c.pedroni_trend = parse_bool(value, key);
  else if (key == "pedroni_group") c.pedroni_group = parse_bool(value, key);
  else if (key == "dh_cause") c.dh_cause = value;
  else if (key == "dh_effect") c.dh_effect = value;
  else if (key == "dh_lags") c.dh_lags = parse_int(value, key);
  else if (key == "dh_both_directions")
    c.dh_both_directions = parse_bool(value, key);
  else if (key == "pmg_p") c.pmg_p = parse_int(value, key);
  else if (key == "pmg_q_default") c.pmg_q_default = parse_int(value, key);
  else if (key == "pmg_q") {
    c.pmg_q.clear();
    for (const auto& item : split_list(value)) {
      const size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw InvalidParametersError("config: pmg_q entries are NAME:LAGS");
      c.pmg_q[trim(item.substr(0, colon))] =
          parse_int(trim(item.substr(colon + 1)), key);
    }
  } else if (key == "ecm_flow") c.ecm_flow = value;
  else if (key == "ecm_dependent") c.ecm_dependent = value;
  else if (key == "ecm_controls") c.ecm_controls = split_list(value);
  else if (key == "ecm_extra") c.ecm_extra = split_list(value);
  else if (key == "ecm_time_fe") {
    if (value != "no" && value != "yes" && value != "both")
      throw InvalidParametersError("config: ecm_time_fe is no|yes|both");
    c.ecm_time_fe = value;
  } else if (key == "ecm_cluster") c.ecm_cluster = parse_bool(value, key);
  else if (key == "unit_roots") c.unit_roots = parse_bool(value, key);
  else if (key == "seed") {
    try {
      c.seed = std::stoull(value);
    } catch (const std::exception&) {
      throw InvalidParametersError("config: bad seed: " + value);
    }
  } else {
    throw InvalidParametersError("config: unknown key '" + key + "'");
  }
}

PipelineConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  PipelineConfig config;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(row) +
                       ": expected key = value");
    apply_config_entry(config, trim(line.substr(0, eq)),
                       trim(line.substr(eq + 1)));
  }
  return config;
}

}  // namespace panelkit
