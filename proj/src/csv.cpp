#include "panelkit/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "panelkit/errors.hpp"

namespace panelkit {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim copies of surrounding whitespace
    size_t b = field.find_first_not_of(" \t\r");
    size_t e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? ""
                                         : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, int row, const std::string& col) {
  double v = 0.0;
  const char* b = s.data();
  const auto res = std::from_chars(b, b + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != b + s.size())
    throw ParseError("row " + std::to_string(row) + ", column '" + col +
                     "': bad number '" + s + "'");
  return v;
}

}  // namespace

Panel ingest_csv(const std::string& path,
                 const std::vector<VariableSpec>& mapping) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line))
    throw ParseError("'" + path + "': empty file");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "entity" || header[1] != "period")
    throw ParseError("'" + path +
                     "': header must be entity,period,<var1>,...");
  const std::vector<std::string> vars(header.begin() + 2, header.end());

  std::vector<PanelRecord> records;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    Quarter q;
    try {
      q = Quarter::parse(fields[1]);
    } catch (const ParseError& e) {
      throw ParseError("row " + std::to_string(row) + ", column 'period': " +
                       e.what());
    }
    for (size_t j = 0; j < vars.size(); ++j)
      records.push_back(
          {fields[0], q, vars[j], parse_double(fields[2 + j], row, vars[j])});
  }

  Panel panel = Panel::build(records);
  for (const auto& spec : mapping) {
    if (spec.transform == Transform::Level) continue;
    if (!panel.has_variable(spec.name))
      throw MissingVariableError("ingest_csv: transform names unknown column '" +
                                 spec.name + "'");
    panel = panel.transformed(spec);
  }
  return panel;
}

std::map<std::string, std::vector<std::pair<int, double>>> read_annual_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("'" + path + "': empty file");
  const auto header = split_csv_line(line);
  if (header.size() != 3 || header[0] != "entity" || header[1] != "year")
    throw ParseError("'" + path + "': header must be entity,year,value");

  std::map<std::string, std::vector<std::pair<int, double>>> out;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw ParseError("row " + std::to_string(row) +
                       ": expected 3 fields");
    const int year =
        static_cast<int>(parse_double(fields[1], row, "year"));
    out[fields[0]].emplace_back(year,
                                parse_double(fields[2], row, "value"));
  }
  return out;
}

std::vector<double> expand_annual(
    const std::vector<std::pair<int, double>>& annual, Quarter from,
    Quarter to) {
  if (to < from)
    throw InvalidParametersError("expand_annual: empty quarter range");
  std::map<int, double> by_year;
  for (const auto& [year, value] : annual) by_year[year] = value;
  std::vector<double> out;
  for (Quarter q = from; q <= to; q = q.next()) {
    const auto it = by_year.find(q.year);
    if (it == by_year.end())
      throw MissingYearError("expand_annual: no value for year " +
                             std::to_string(q.year));
    out.push_back(it->second);
  }
  return out;
}

Panel merge_annual_variable(
    const Panel& panel, const std::string& name,
    const std::map<std::string, std::vector<std::pair<int, double>>>&
        annual) {
  const Quarter from = panel.periods().front();
  const Quarter to = panel.periods().back();
  std::vector<double> values;
  values.reserve(static_cast<size_t>(panel.n_entities()) *
                 panel.n_periods());
  for (const auto& entity : panel.entities()) {
    const auto it = annual.find(entity);
    if (it == annual.end())
      throw MissingCellError("annual data: no rows for entity '" + entity +
                             "'");
    const auto expanded = expand_annual(it->second, from, to);
    values.insert(values.end(), expanded.begin(), expanded.end());
  }
  return panel.with_variable(name, values);
}

void write_panel_csv(const Panel& panel, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << "entity,period";
  for (const auto& v : panel.variables()) out << "," << v;
  out << "\n";
  char buf[64];
  for (int e = 0; e < panel.n_entities(); ++e)
    for (int t = 0; t < panel.n_periods(); ++t) {
      out << panel.entities()[e] << "," << panel.periods()[t].str();
      for (int v = 0; v < panel.n_variables(); ++v) {
        std::snprintf(buf, sizeof buf, "%.12g", panel.value(e, t, v));
        out << "," << buf;
      }
      out << "\n";
    }
}

}  // namespace panelkit
