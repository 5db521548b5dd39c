#include "gld/module_file.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gld/errors.hpp"
#include "gld/parser.hpp"

namespace gld {

using nlohmann::json;

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

int get_int(const json& j, const std::string& path, int lo, int hi) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  long v = j.get<long>();
  if (v < lo || v > hi)
    throw InputError(path + ": value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  return static_cast<int>(v);
}

void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw InputError(path + ": unknown key \"" + key + "\"");
}

const json& require(const json& j, const std::string& path, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing key \"" + key + "\"");
  return *it;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ModuleFile parse_module_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!doc.is_object()) throw InputError("module file: expected a JSON object");
  only_keys(doc, "module file", {"base_vars", "fiber_vars", "generators", "relations", "metadata"});

  RingSignature sig{get_int(require(doc, "module file", "base_vars"), "base_vars", 0, 16),
                    get_int(require(doc, "module file", "fiber_vars"), "fiber_vars", 0, 16)};

  const json& gens = require(doc, "module file", "generators");
  if (!gens.is_array()) throw InputError("generators: expected an array");
  std::vector<BiDegree> shifts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string path = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_object()) throw InputError(path + ": expected an object");
    only_keys(gens[i], path, {"x_shift", "t_shift"});
    shifts.push_back({get_int(require(gens[i], path, "x_shift"), path + ".x_shift", -1000, 1000),
                      get_int(require(gens[i], path, "t_shift"), path + ".t_shift", -1000, 1000)});
  }

  std::vector<std::vector<Polynomial>> cols;
  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_array()) throw InputError("relations: expected an array of columns");
    for (std::size_t j = 0; j < rels.size(); ++j) {
      std::string path = "relations[" + std::to_string(j) + "]";
      if (!rels[j].is_array()) throw InputError(path + ": expected an array of polynomial strings");
      if (rels[j].size() != shifts.size())
        throw InputError(path + ": has " + std::to_string(rels[j].size()) + " entries, expected one per generator (" +
                         std::to_string(shifts.size()) + ")");
      std::vector<Polynomial> col;
      for (std::size_t i = 0; i < rels[j].size(); ++i) {
        std::string epath = path + "[" + std::to_string(i) + "]";
        if (!rels[j][i].is_string()) throw InputError(epath + ": expected a string");
        try {
          col.push_back(parse_polynomial(rels[j][i].get<std::string>(), sig));
        } catch (const ParseError& e) {
          throw ParseError(epath + ": " + std::string(e.what()).substr(0, std::string(e.what()).rfind(" (column")),
                           e.column());
        }
      }
      cols.push_back(std::move(col));
    }
  }

  ModuleFile out{BigradedPresentation::zero(sig), {}, std::nullopt, fnv1a_hex(text)};
  try {
    out.presentation = BigradedPresentation::from_columns(sig, std::move(shifts), std::move(cols));
  } catch (const InputError& e) {
    throw InputError(std::string("relations: ") + e.what());
  }
  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    if (!meta.is_object()) throw InputError("metadata: expected an object");
    only_keys(meta, "metadata", {"name", "weight_hint"});
    if (meta.contains("name")) {
      if (!meta["name"].is_string()) throw InputError("metadata.name: expected a string");
      out.name = meta["name"].get<std::string>();
    }
    if (meta.contains("weight_hint")) out.weight_hint = get_int(meta["weight_hint"], "metadata.weight_hint", -1000, 1000);
  }
  return out;
}

ModuleFile load_module_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_file(buf.str());
}

std::string to_module_json(const BigradedPresentation& g, const std::string& name) {
  json doc;
  doc["base_vars"] = g.signature().x_vars;
  doc["fiber_vars"] = g.signature().t_vars;
  doc["generators"] = json::array();
  for (const auto& s : g.generators().shifts) doc["generators"].push_back({{"x_shift", s.x}, {"t_shift", s.t}});
  doc["relations"] = json::array();
  for (const auto& col : g.relations().columns()) {
    json c = json::array();
    for (const auto& p : col) c.push_back(p.to_string());
    doc["relations"].push_back(std::move(c));
  }
  if (!name.empty()) doc["metadata"] = {{"name", name}};
  return doc.dump(2);
}

}  // namespace gld
