#include <doctest.h>

#include "gld/cech.hpp"
#include "gld/errors.hpp"
#include "gld/homology.hpp"
#include "gld/module_file.hpp"
#include "gld/verify.hpp"
#include "helpers.hpp"

using namespace gld;
using gld::testing::cyclic;
using gld::testing::make;

namespace {

std::string module_text(int m, int d, const std::string& gens, const std::string& rels) {
  return "{\"base_vars\": " + std::to_string(m) + ", \"fiber_vars\": " + std::to_string(d) +
         ", \"generators\": " + gens + ", \"relations\": " + rels + "}";
}

const std::string one_gen = "[{\"x_shift\": 0, \"t_shift\": 0}]";

std::string error_of(const std::string& text) {
  try {
    parse_module_file(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

bool has_skip(const VerificationReport& r, const std::string& id) {
  for (const auto& rec : r.records)
    if (rec.check_id == id && rec.note.rfind("skipped:", 0) == 0) return true;
  return false;
}

int count(const VerificationReport& r, const std::string& id) {
  int n = 0;
  for (const auto& rec : r.records) n += rec.check_id == id;
  return n;
}

}  // namespace

TEST_CASE("module files") {
  ModuleFile f = parse_module_file(module_text(1, 1, one_gen, "[[\"x1\"]]"));
  CHECK(f.presentation == cyclic(1, 1, {"x1"}));
  CHECK(f.digest.size() == 16);
  CHECK(!f.weight_hint);

  ModuleFile meta = parse_module_file(
      "{\"base_vars\":1,\"fiber_vars\":1,\"generators\":[{\"x_shift\":0,\"t_shift\":0}],\"relations\":[[\"t1\"]],"
      "\"metadata\":{\"name\":\"S/(t1)\",\"weight_hint\":1}}");
  CHECK(meta.name == "S/(t1)");
  CHECK(meta.weight_hint == 1);

  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");

  auto g = make(2, 2, {{0, 0}, {1, 0}}, {{"x1", "1"}, {"x1*t1 - x2*t2", "0"}});
  CHECK(parse_module_file(to_module_json(g)).presentation == g);
}

TEST_CASE("module file errors name their position") {
  CHECK(error_of(module_text(1, 1, one_gen, "[[\"t1^\"]]")).find("relations[0][0]") != std::string::npos);
  CHECK(error_of(module_text(1, 1, one_gen, "[[\"t1^\"]]")).find("(column 4)") != std::string::npos);
  try {
    parse_module_file(module_text(1, 1, one_gen, "[[\"t1^\"]]"));
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK(error_of("{\"base_vars\": 1,\n \"fiber_vars\": }").find("line 2") != std::string::npos);
  CHECK(error_of(module_text(1, 1, one_gen, "[[\"x1\", \"t1\"]]")).find("relations[0]") != std::string::npos);
  CHECK(error_of(module_text(1, 1, "[{\"x_shift\": 0}]", "[]")).find("t_shift") != std::string::npos);
  CHECK(error_of(module_text(1, 1, one_gen, "[[3]]")).find("expected a string") != std::string::npos);
  CHECK(error_of(module_text(1, 1, one_gen, "[[\"x1 + t1\"]]")).find("bihomogeneous") != std::string::npos);
  CHECK(error_of("{\"base_vars\": 1, \"fiber_vars\": 1, \"generators\": [], \"colour\": 1}").find("colour") !=
        std::string::npos);
  CHECK(error_of("[1, 2]").find("object") != std::string::npos);
  CHECK(error_of(module_text(-1, 1, "[]", "[]")).find("base_vars") != std::string::npos);
}

TEST_CASE("report JSON is canonical") {
  VerificationReport r;
  r.command = "x";
  r.add(compare_record("b", BiDegree{1, 0}, {1}, {1}));
  r.add(compare_record("b", BiDegree{0, 2}, {1}, {2}));
  r.add(note_record("a", "first"));
  auto j = to_json(r);
  CHECK(j["records"][0]["check_id"] == "a");
  CHECK(j["records"][1]["bidegree"]["x"] == 0);
  CHECK(j["overall"] == "fail");
  CHECK(j["failures"] == 1);
  CHECK(!j.contains("wall_time_ms"));
  std::string dump = j.dump();
  CHECK(dump.find("\"cap\"") < dump.find("\"command\""));
  r.wall_time_ms = 5;
  CHECK(to_json(r)["wall_time_ms"] == 5);
}

TEST_CASE("hilbert tables") {
  ModuleFile sx = parse_module_file(module_text(1, 1, one_gen, "[[\"x1\"]]"));
  CommandOptions o;
  o.window = Window{0, 2, 0, 2};
  auto res = run_command("hilbert", sx, o);
  for (const auto& e : res.doc["table"]) CHECK(e["dim"] == (e["x"] == 0 ? 1 : 0));
  ModuleFile s = parse_module_file(module_text(1, 1, one_gen, "[]"));
  for (const auto& e : run_command("hilbert", s, o).doc["table"]) CHECK(e["dim"] == 1);
}

TEST_CASE("local cohomology table of the free module") {
  ModuleFile s = parse_module_file(module_text(0, 2, one_gen, "[]"));
  CommandOptions o;
  o.window = Window{0, 0, -4, -2};
  o.index = 2;
  auto res = run_command("localcoh", s, o);
  CHECK(res.exit_code == 0);
  std::map<int, int> dims;
  for (const auto& e : res.doc["table"]) dims[e["t"].get<int>()] = e["dim"].get<int>();
  CHECK(dims == std::map<int, int>{{-4, 3}, {-3, 2}, {-2, 1}});
}

TEST_CASE("CM duality dimensions") {
  auto sx = cyclic(1, 1, {"x1"});
  for (int k = -3; k <= 2; ++k) {
    DualityDims v = duality_dims(sx, {0, k}, 1);
    std::vector<long> got{v.g, v.gamma, v.D[0], v.D[1]};
    CHECK(got == (k <= -1 ? std::vector<long>{0, 1, 0, 1} : std::vector<long>{1, 1, 0, 0}));
  }
  auto st = cyclic(1, 1, {"t1"});
  for (int k = -2; k <= 2; ++k)
    for (int a = 0; a <= 2; ++a) {
      DualityDims v = duality_dims(st, {a, k}, 1);
      CHECK(v.gamma == 0);
      CHECK(v.D[0] == v.g);
    }
}

TEST_CASE("verify-duality on the corpus") {
  std::vector<BigradedPresentation> cm = {cyclic(1, 1, {"x1"}), cyclic(1, 1, {"t1"}), cyclic(2, 2, {"x1", "t2"})};
  for (const auto& g : cm) {
    Window w = default_window(g);
    auto r = verify_duality(g, w, 1, 256, -3, 5);
    CHECK(r.overall());
    CHECK(count(r, "duality.iv") == static_cast<int>(w.points().size()));
    CHECK(count(r, "duality.euler") == 0);
  }
  auto mixed = direct_sum(cyclic(1, 1, {"x1", "t1"}), make(1, 1, {{0, 0}}, {}));
  Window w = default_window(mixed);
  auto r = verify_duality(mixed, w, 1, 256, -3, 5);
  CHECK(r.overall());
  CHECK(count(r, "duality.euler") == static_cast<int>(w.points().size()));
  CHECK(has_skip(r, "selfdual.scan"));
}

TEST_CASE("verify-derham gating") {
  auto s = make(1, 2, {{0, 0}}, {});
  auto free_report = verify_derham(s, default_window(s), std::nullopt);
  CHECK(free_report.overall());
  for (const auto& rec : free_report.records)
    if (rec.check_id == "der3.vanishing") CHECK(rec.bidegree->t == -1);
  CHECK(has_skip(free_report, "final_prop"));

  auto sx = cyclic(1, 1, {"x1"});
  auto rx = verify_derham(sx, default_window(sx), 2);
  CHECK(rx.overall());
  CHECK(count(rx, "final_prop.exact") > 0);
  CHECK(count(rx, "e1.euler") == static_cast<int>(default_window(sx).points().size()));
  CHECK(count(rx, "der4.euler") > 0);

  auto mixed = direct_sum(cyclic(1, 1, {"x1", "t1"}), make(1, 1, {{0, 0}}, {}));
  auto rm = verify_derham(mixed, default_window(mixed), 1);
  CHECK(rm.overall());
  CHECK(has_skip(rm, "e1.euler"));
  CHECK(count(rm, "der3.vanishing") > 0);

  auto st = cyclic(1, 1, {"t1"});
  auto rt = verify_derham(st, default_window(st), 3);
  CHECK(has_skip(rt, "e1.euler"));
}

TEST_CASE("command output is byte-stable") {
  ModuleFile f = parse_module_file(module_text(2, 2, one_gen, "[[\"x1\"], [\"t2\"]]"));
  for (std::string c : {"hilbert", "resolve", "ext", "cm-check", "localcoh", "verify-duality", "verify-derham",
                        "selfdual-scan"}) {
    CommandOptions o;
    o.window = Window{0, 2, -3, 2};
    CHECK(run_command(c, f, o).doc.dump() == run_command(c, f, o).doc.dump());
  }
  CHECK_THROWS_AS(run_command("frobnicate", f, CommandOptions{}), InputError);
}
