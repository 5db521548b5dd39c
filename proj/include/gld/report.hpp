#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gld/module.hpp"

namespace gld {

/// One verified identity: lhs_dims must equal rhs_dims.
struct CheckRecord {
  std::string check_id;
  std::optional<BiDegree> bidegree;
  std::vector<long> lhs_dims;
  std::vector<long> rhs_dims;
  bool pass = true;
  std::string note;
};

struct VerificationReport {
  std::string command;
  std::string input_digest;
  std::optional<Window> window;
  std::optional<int> cap;
  std::vector<CheckRecord> records;
  std::optional<long> wall_time_ms;

  bool overall() const;
  /// Number of failing records.
  int failures() const;
  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const std::vector<CheckRecord>& rs) { records.insert(records.end(), rs.begin(), rs.end()); }
};

/// Record comparing two dimension lists at a bidegree.
CheckRecord compare_record(std::string id, std::optional<BiDegree> deg, std::vector<long> lhs, std::vector<long> rhs,
                           std::string note = {});
/// Informational record (always passes).
CheckRecord note_record(std::string id, std::string note);

}  // namespace gld

#include <json.hpp>

namespace gld {

/// Canonical record order: check id, then bidegree (records without one
/// first), then note.
void sort_records(std::vector<CheckRecord>& records);

nlohmann::json to_json(const BiDegree& d);
nlohmann::json to_json(const Window& w);
nlohmann::json to_json(const CheckRecord& r);
/// Keys sorted, records in canonical order; wall time only when set.
nlohmann::json to_json(const VerificationReport& r);
/// One line per record plus a verdict line.
std::string render_text(const VerificationReport& r);

}  // namespace gld
