#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "foel/half_int.hpp"
#include "foel/sector_spectra.hpp"

namespace foel::report {

/// %.17g; nan and inf spelled out so the CSV stays parseable.
std::string format_double(double x);

std::string cell(double x);
std::string cell(int x);
std::string cell(std::size_t x);
std::string cell(bool x);
/// Quoted when it contains a comma, quote or newline.
std::string cell(const std::string& s);
inline std::string cell(const char* s) { return cell(std::string(s)); }

/// Fixed-column CSV of preformatted cells.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  /// Throws std::logic_error when the width differs from the header.
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& header() const { return header_; }
  std::size_t size() const { return rows_.size(); }
  /// Header line plus one line per row, LF endings.
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
/// Two-space indent, sorted keys, trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Columns S_times2, dim, min_energy, max_energy.
CsvTable sector_table(const SectorMap& entries);
/// [{S_high_times2, S_low_times2, gap, crossing}] from high S to low S.
nlohmann::json margins_json(const std::vector<FoelMargin>& margins);

}  // namespace foel::report
