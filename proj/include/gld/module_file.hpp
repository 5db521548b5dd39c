#pragma once

#include <optional>
#include <string>

#include "gld/module.hpp"

namespace gld {

/// A presentation read from the JSON module format:
///
///   {"base_vars": m, "fiber_vars": d,
///    "generators": [{"x_shift": a, "t_shift": b}, ...],
///    "relations": [[f_1, ..., f_r], ...],      one column per relation
///    "metadata": {"name": "...", "weight_hint": w}}
struct ModuleFile {
  BigradedPresentation presentation;
  std::string name;
  std::optional<int> weight_hint;
  std::string digest;  // FNV-1a 64 of the raw text, hex
};

/// Throws InputError naming the JSON path (and line/column for syntax
/// errors, column for polynomial errors).
ModuleFile parse_module_file(const std::string& text);
ModuleFile load_module_file(const std::string& path);

std::string to_module_json(const BigradedPresentation& g, const std::string& name = {});

std::string fnv1a_hex(const std::string& bytes);

}  // namespace gld
