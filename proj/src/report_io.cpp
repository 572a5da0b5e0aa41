#include "bitension/report_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace bitension {

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "gnuplot") return OutputFormat::gnuplot;
  throw ConfigError("unknown output format '" + s + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j)
    os << (j ? "," : "") << t.columns[j];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "," : "") << format_double(row[j]);
    os << "\n";
  }
}

void write_gnuplot(std::ostream& os, const Table& t) {
  // One two-column block per series: (first column, series), blank-line
  // separated, each headed by a comment naming the series.
  for (std::size_t j = 1; j < t.columns.size(); ++j) {
    os << "# " << t.columns[0] << " " << t.columns[j] << "\n";
    for (const auto& row : t.rows)
      os << format_double(row[0]) << " " << format_double(row[j]) << "\n";
    os << "\n";
  }
}

nlohmann::json table_json(const Table& t, const std::string& name) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t j = 0; j < row.size(); ++j) r[t.columns[j]] = row[j];
    rows.push_back(std::move(r));
  }
  return {{"name", name}, {"rows", rows}};
}

} // namespace

void write_table(std::ostream& os, const Table& t, OutputFormat fmt,
                 const std::string& json_name) {
  switch (fmt) {
  case OutputFormat::csv: write_csv(os, t); break;
  case OutputFormat::gnuplot: write_gnuplot(os, t); break;
  case OutputFormat::json: os << table_json(t, json_name).dump(2) << "\n"; break;
  }
}

namespace {

nlohmann::json grid_json(const GridSpec& g) {
  return {{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}, {"margin", g.margin}};
}

GridSpec grid_from_json(const nlohmann::json& j) {
  return {j.at("lo").get<double>(), j.at("hi").get<double>(),
          j.at("n").get<std::size_t>(), j.at("margin").get<double>()};
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "harmonic") return Verdict::harmonic;
  if (s == "proper-biharmonic") return Verdict::proper_biharmonic;
  if (s == "neither") return Verdict::neither;
  throw ConfigError("unknown verdict '" + s + "'");
}

} // namespace

void write_sweep(std::ostream& os, const SweepReport& rep, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    os << sweep_to_json(rep) << "\n";
    return;
  }
  if (fmt == OutputFormat::csv) {
    os << "a,k,a1,sup_tension,sup_residual,range_flag,verdict\n";
    for (const auto& r : rep.rows)
      os << format_double(r.a) << "," << format_double(r.k) << ","
         << format_double(r.a1) << "," << format_double(r.sup_tension) << ","
         << format_double(r.sup_residual) << "," << (r.range_flag ? 1 : 0)
         << "," << to_string(r.verdict) << "\n";
    return;
  }
  // gnuplot: residual landscape, one block per verdict class
  for (Verdict v : {Verdict::harmonic, Verdict::proper_biharmonic,
                    Verdict::neither}) {
    os << "# a k a1 sup_residual (" << to_string(v) << ")\n";
    for (const auto& r : rep.rows)
      if (r.verdict == v)
        os << format_double(r.a) << " " << format_double(r.k) << " "
           << format_double(r.a1) << " " << format_double(r.sup_residual)
           << "\n";
    os << "\n";
  }
}

std::string sweep_to_json(const SweepReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"a", r.a},
                    {"k", r.k},
                    {"a1", r.a1},
                    {"sup_tension", r.sup_tension},
                    {"sup_residual", r.sup_residual},
                    {"range_flag", r.range_flag},
                    {"verdict", to_string(r.verdict)}});
  nlohmann::json j{{"grid", grid_json(rep.grid)}, {"rows", rows}};
  return j.dump(2);
}

SweepReport sweep_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SweepReport rep;
  rep.grid = grid_from_json(j.at("grid"));
  for (const auto& r : j.at("rows")) {
    SweepRow row;
    row.a = r.at("a").get<double>();
    row.k = r.at("k").get<double>();
    row.a1 = r.at("a1").get<double>();
    row.sup_tension = r.at("sup_tension").get<double>();
    row.sup_residual = r.at("sup_residual").get<double>();
    row.range_flag = r.at("range_flag").get<bool>();
    row.verdict = verdict_from_string(r.at("verdict").get<std::string>());
    rep.rows.push_back(row);
  }
  return rep;
}

Table residual_table(const ResidualReport& rep) {
  Table t;
  t.columns = {"r", "x", "y", "res1", "res2"};
  t.rows.reserve(rep.samples.size());
  for (const auto& s : rep.samples)
    t.rows.push_back({s.r, s.x, s.y, s.res1, s.res2});
  return t;
}

std::string residual_to_json(const ResidualReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : rep.samples)
    rows.push_back({{"r", s.r},
                    {"x", s.x},
                    {"y", s.y},
                    {"res1", s.res1},
                    {"res2", s.res2}});
  nlohmann::json j{{"grid", grid_json(rep.grid)},
                   {"route", to_string(rep.route)},
                   {"sup_tension", rep.sup_tension},
                   {"sup_residual", rep.sup_residual},
                   {"verdict", to_string(rep.verdict)},
                   {"samples", rows}};
  return j.dump(2);
}

} // namespace bitension
