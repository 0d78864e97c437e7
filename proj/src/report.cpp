#include "foel/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace foel::report {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

std::string cell(double x) { return format_double(x); }
std::string cell(int x) { return std::to_string(x); }
std::string cell(std::size_t x) { return std::to_string(x); }
std::string cell(bool x) { return x ? "true" : "false"; }
std::string cell(const std::string& s) { return quote(s); }

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw std::logic_error("CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(header_.size()));
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  std::vector<std::string> h;
  for (const auto& c : header_) h.push_back(quote(c));
  line(h);
  for (const auto& r : rows_) line(r);
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("write to " + path.string() + " failed");
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) { write_text(path, table.str()); }

void write_json(const std::filesystem::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

CsvTable sector_table(const SectorMap& entries) {
  CsvTable t({"S_times2", "dim", "min_energy", "max_energy"});
  for (const auto& [S, e] : entries) t.add_row({cell(S.twice()), cell(e.dimension), cell(e.min_energy), cell(e.max_energy)});
  return t;
}

nlohmann::json margins_json(const std::vector<FoelMargin>& margins) {
  nlohmann::json out = nlohmann::json::array();
  for (const FoelMargin& m : margins)
    out.push_back({{"S_high_times2", m.higher.twice()},
                   {"S_low_times2", m.lower.twice()},
                   {"gap", m.gap},
                   {"crossing", m.crossing}});
  return out;
}

}  // namespace foel::report
