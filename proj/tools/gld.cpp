#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "gld/errors.hpp"
#include "gld/module_file.hpp"
#include "gld/verify.hpp"

namespace {

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int w = std::stoi(text);
      return {w, w};
    }
    std::size_t used = 0;
    int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    int hi = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    if (lo > hi) throw gld::InputError("empty weight range " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw gld::InputError("malformed weight range \"" + text + "\" (expected w0:w1)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded modules over A[t1..td]: local cohomology, graded duals, de Rham complexes"};
  std::string command, path, window, weight_range;
  std::optional<int> cap, weight, index;
  int max_cap = 256;
  bool as_json = false, schreyer = false, timing = false;

  app.add_option("command", command, "hilbert | resolve | ext | cm-check | localcoh | verify-duality | "
                                     "verify-derham | selfdual-scan")
      ->required()
      ->check(CLI::IsMember({"hilbert", "resolve", "ext", "cm-check", "localcoh", "verify-duality", "verify-derham",
                             "selfdual-scan"}));
  app.add_option("file", path, "module file (JSON)")->required();
  app.add_option("--window", window, "bidegree window a0:a1,b0:b1 (x-range, t-range)");
  app.add_option("--cap", cap, "initial Čech denominator cap");
  app.add_option("--max-cap", max_cap, "largest cap tried before giving up")->capture_default_str();
  app.add_option("--weight", weight, "weight w");
  app.add_option("--weight-range", weight_range, "weight range w0:w1");
  app.add_option("--index", index, "cohomological index (ext: q, localcoh: i)");
  app.add_flag("--json", as_json, "print JSON");
  app.add_flag("--schreyer", schreyer, "use the Schreyer resolution instead of the minimal one");
  app.add_flag("--timing", timing, "record wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    gld::ModuleFile file = gld::load_module_file(path);
    gld::CommandOptions opts;
    if (!window.empty()) opts.window = gld::parse_window(window);
    opts.cap = cap;
    opts.max_cap = max_cap;
    opts.weight = weight;
    if (!weight_range.empty()) opts.weight_range = parse_range(weight_range);
    opts.index = index;
    opts.schreyer = schreyer;
    gld::CommandResult res = gld::run_command(command, file, opts);
    if (timing) {
      long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      res.doc["wall_time_ms"] = ms;
      res.text += "wall time " + std::to_string(ms) + " ms\n";
    }
    if (as_json)
      std::cout << res.doc.dump(2) << '\n';
    else
      std::cout << res.text;
    return res.exit_code;
  } catch (const gld::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const gld::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const gld::CutoffError& e) {
    std::cerr << "cutoff: " << e.what() << '\n';
    return 3;
  }
}
