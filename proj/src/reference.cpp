#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "mdrk/harness.hpp"

namespace mdrk {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) {
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

ReferenceProfile ingest_reference(std::istream& is) {
  ReferenceProfile r;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line);
    if (!header) {
      if (fields.size() < 2 || fields[0] != "x")
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'x,var...'", lineno);
      r.names.assign(fields.begin() + 1, fields.end());
      r.columns.resize(r.names.size());
      header = true;
      continue;
    }
    if (fields.size() != r.names.size() + 1)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(r.names.size() + 1) +
                           " fields, found " + std::to_string(fields.size()),
                       lineno);
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto& f = fields[i];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), row[i]);
      if (ec != std::errc() || ptr != f.data() + f.size() || f.empty())
        throw ParseError("line " + std::to_string(lineno) + ": not a number: '" + f + "'", lineno);
    }
    if (!r.x.empty() && row[0] < r.x.back())
      throw ParseError("line " + std::to_string(lineno) + ": x is not ascending", lineno);
    r.x.push_back(row[0]);
    for (std::size_t v = 0; v < r.names.size(); ++v) r.columns[v].push_back(row[v + 1]);
  }
  if (!header) throw ParseError("missing header", lineno);
  if (r.x.empty()) throw ParseError("no data rows", lineno);
  return r;
}

ReferenceProfile ingest_reference_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference file " + path);
  return ingest_reference(in);
}

ReferenceProfile::Sample ReferenceProfile::at(double xq, int var) const {
  const auto& c = columns.at(var);
  if (xq <= x.front()) return {c.front(), xq < x.front()};
  if (xq >= x.back()) return {c.back(), xq > x.back()};
  // first row with x >= xq; exact hits take the left-most duplicate
  const auto i = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), xq) - x.begin());
  if (x[i] == xq) return {c[i], false};
  const double s = (xq - x[i - 1]) / (x[i] - x[i - 1]);
  return {c[i - 1] + s * (c[i] - c[i - 1]), false};
}

}  // namespace mdrk
