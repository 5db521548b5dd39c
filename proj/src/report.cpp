#include "gld/report.hpp"

#include <algorithm>

namespace gld {

bool VerificationReport::overall() const { return failures() == 0; }

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

CheckRecord compare_record(std::string id, std::optional<BiDegree> deg, std::vector<long> lhs, std::vector<long> rhs,
                           std::string note) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.bidegree = deg;
  r.pass = lhs == rhs;
  r.lhs_dims = std::move(lhs);
  r.rhs_dims = std::move(rhs);
  r.note = std::move(note);
  return r;
}

CheckRecord note_record(std::string id, std::string note) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.note = std::move(note);
  return r;
}

}  // namespace gld

namespace gld {

void sort_records(std::vector<CheckRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.check_id != b.check_id) return a.check_id < b.check_id;
    if (a.bidegree != b.bidegree) return !a.bidegree || (b.bidegree && *a.bidegree < *b.bidegree);
    return a.note < b.note;
  });
}

nlohmann::json to_json(const BiDegree& d) { return {{"x", d.x}, {"t", d.t}}; }

nlohmann::json to_json(const Window& w) { return {{"x", {w.x_lo, w.x_hi}}, {"t", {w.t_lo, w.t_hi}}}; }

nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["bidegree"] = r.bidegree ? to_json(*r.bidegree) : nlohmann::json(nullptr);
  j["lhs_dims"] = r.lhs_dims;
  j["rhs_dims"] = r.rhs_dims;
  j["pass"] = r.pass;
  j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  std::vector<CheckRecord> records = r.records;
  sort_records(records);
  nlohmann::json j;
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  j["window"] = r.window ? to_json(*r.window) : nlohmann::json(nullptr);
  j["cap"] = r.cap ? nlohmann::json(*r.cap) : nlohmann::json(nullptr);
  j["records"] = nlohmann::json::array();
  for (const auto& rec : records) j["records"].push_back(to_json(rec));
  j["overall"] = r.overall() ? "pass" : "fail";
  j["failures"] = r.failures();
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

namespace {

std::string join(const std::vector<long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string render_text(const VerificationReport& r) {
  std::vector<CheckRecord> records = r.records;
  sort_records(records);
  std::string out = r.command;
  if (r.window) out += "  window " + r.window->to_string();
  if (r.cap) out += "  cap " + std::to_string(*r.cap);
  out += "\n";
  for (const auto& rec : records) {
    out += rec.pass ? "PASS " : "FAIL ";
    out += rec.check_id;
    if (rec.bidegree) out += " " + to_string(*rec.bidegree);
    if (!rec.lhs_dims.empty() || !rec.rhs_dims.empty()) out += " " + join(rec.lhs_dims) + " vs " + join(rec.rhs_dims);
    if (!rec.note.empty()) out += "  (" + rec.note + ")";
    out += "\n";
  }
  out += std::string(r.overall() ? "overall: pass" : "overall: fail") + " (" + std::to_string(records.size()) +
         " records, " + std::to_string(r.failures()) + " failing)";
  if (r.wall_time_ms) out += ", " + std::to_string(*r.wall_time_ms) + " ms";
  return out + "\n";
}

}  // namespace gld
