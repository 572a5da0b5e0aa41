#ifndef BITENSION_REPORT_IO_HPP
#define BITENSION_REPORT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bitension/classify.hpp"
#include "bitension/map.hpp"

namespace bitension {

enum class OutputFormat { csv, json, gnuplot };

OutputFormat parse_format(const std::string& s);

/// Column-named table of doubles; the common shape of all CLI outputs.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// All numeric output uses 17 significant digits (full double round-trip),
/// so repeated runs diff clean.
std::string format_double(double v);

void write_table(std::ostream& os, const Table& t, OutputFormat fmt,
                 const std::string& json_name = "table");

// ---- sweep report ----

void write_sweep(std::ostream& os, const SweepReport& rep, OutputFormat fmt);
std::string sweep_to_json(const SweepReport& rep);
SweepReport sweep_from_json(const std::string& text);

// ---- residual report ----

Table residual_table(const ResidualReport& rep);
std::string residual_to_json(const ResidualReport& rep);

} // namespace bitension

#endif
