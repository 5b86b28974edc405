// Command-line front end for the dominotile shared library. Everything goes
// through the public C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dominotile.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { dt_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct RegionDeleter {
  void operator()(dt_region* r) const { dt_region_free(r); }
};
using RegionHandle = std::unique_ptr<dt_region, RegionDeleter>;

struct RegionSource {
  std::string gen;
  std::string file;
};

void add_region_options(CLI::App* cmd, RegionSource& src) {
  auto* g = cmd->add_option("--gen", src.gen, "builder spec, e.g. rect:2,3 or holey:1,2");
  auto* f = cmd->add_option("--in", src.file, "region file in the ASCII grid format");
  g->excludes(f);
  f->excludes(g);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Loads the region named by --gen/--in, or reports the problem and returns
// null (usage error).
RegionHandle load_region(const RegionSource& src, std::string& label) {
  dt_region* raw = nullptr;
  if (!src.gen.empty()) {
    label = src.gen;
    if (dt_region_build(src.gen.c_str(), &raw) != DT_OK) {
      std::cerr << "error: " << dt_last_error() << "\n";
      return nullptr;
    }
    return RegionHandle(raw);
  }
  if (!src.file.empty()) {
    label = src.file;
    std::string text;
    if (!read_file(src.file, text)) {
      std::cerr << "error: cannot read " << src.file << "\n";
      return nullptr;
    }
    if (dt_region_parse(text.c_str(), &raw) != DT_OK) {
      std::cerr << "error: " << dt_last_error() << "\n";
      return nullptr;
    }
    return RegionHandle(raw);
  }
  std::cerr << "error: one of --gen or --in is required\n";
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominotile: exact domino tiling counts, corner analysis, parity reductions"};
  app.require_subcommand(1);

  RegionSource src;
  int wmax = 0;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    add_region_options(cmd, src);
    cmd->add_option("--wmax", wmax, "profile width guard (default 20)");
    if (with_format)
      cmd->add_option("--format", format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
  };

  auto* c_count = app.add_subcommand("count", "exact number of domino tilings");
  add_common(c_count);
  auto* c_parity = app.add_subcommand("parity", "parity of the number of tilings");
  add_common(c_parity);
  auto* c_corners = app.add_subcommand("corners", "list corners with annotations");
  add_common(c_corners);

  auto* c_render = app.add_subcommand("render", "ASCII picture of the region");
  add_region_options(c_render, src);
  std::string render_trace;
  int render_step = 0;
  c_render->add_option("--trace", render_trace, "trace file to overlay");
  c_render->add_option("--step", render_step, "1-based trace step to overlay");

  auto* c_reduce = app.add_subcommand("reduce", "emit a reduction trace");
  add_region_options(c_reduce, src);
  c_reduce->add_option("--wmax", wmax, "profile width guard (default 20)");
  std::string strategy = "wall-greedy";
  std::string script;
  c_reduce->add_option("--strategy", strategy, "wall-greedy")
      ->check(CLI::IsMember({"wall-greedy"}));
  c_reduce->add_option("--script", script, "named schedule (cor42)")
      ->check(CLI::IsMember({"cor42"}));

  auto* c_vtrace = app.add_subcommand("verify-trace", "replay and check a trace");
  add_region_options(c_vtrace, src);
  c_vtrace->add_option("--wmax", wmax, "profile width guard (default 20)");
  std::string trace_file;
  c_vtrace->add_option("--trace", trace_file, "trace file")->required();

  auto* c_verify = app.add_subcommand("verify", "run a verification sweep");
  std::string target;
  int max_n = 0, max_k = 0, max_p = 0, trials = 0;
  unsigned seed = 7;
  c_verify->add_option("target", target, "holey|holey-odd|rect|tfamily|dfamily|theorem")
      ->required()
      ->check(CLI::IsMember({"holey", "holey-odd", "rect", "tfamily", "dfamily", "theorem"}));
  c_verify->add_option("--max-n", max_n, "largest n in the sweep");
  c_verify->add_option("--max-k", max_k, "largest k in the sweep");
  c_verify->add_option("--max-p", max_p, "largest p in the sweep");
  c_verify->add_option("--trials", trials, "random trials (theorem)");
  c_verify->add_option("--seed", seed, "random seed (theorem)");
  c_verify->add_option("--wmax", wmax, "profile width guard (default 20)");
  c_verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool json = format == "json";
  std::string label;

  if (c_count->parsed() || c_parity->parsed() || c_corners->parsed() ||
      c_render->parsed() || c_reduce->parsed() || c_vtrace->parsed()) {
    RegionHandle region = load_region(src, label);
    if (!region) return kExitUsage;

    if (c_count->parsed()) {
      char* dec = nullptr;
      if (dt_count(region.get(), wmax, &dec) != DT_OK) {
        std::cerr << "error: " << dt_last_error() << "\n";
        return kExitUsage;
      }
      ApiString s(dec);
      if (json)
        std::cout << "{\"count\":\"" << s.get() << "\"}\n";
      else
        std::cout << s.get() << "\n";
      return kExitOk;
    }
    if (c_parity->parsed()) {
      int bit = 0;
      if (dt_parity(region.get(), wmax, &bit) != DT_OK) {
        std::cerr << "error: " << dt_last_error() << "\n";
        return kExitUsage;
      }
      if (json)
        std::cout << "{\"parity\":" << bit << "}\n";
      else
        std::cout << bit << "\n";
      return kExitOk;
    }
    if (c_corners->parsed()) {
      char* text = nullptr;
      if (dt_corners(region.get(), json ? 1 : 0, &text) != DT_OK) {
        std::cerr << "error: " << dt_last_error() << "\n";
        return kExitUsage;
      }
      ApiString s(text);
      std::cout << s.get();
      return kExitOk;
    }
    if (c_render->parsed()) {
      std::string trace_text;
      if (!render_trace.empty() && !read_file(render_trace, trace_text)) {
        std::cerr << "error: cannot read " << render_trace << "\n";
        return kExitUsage;
      }
      char* text = nullptr;
      if (dt_render(region.get(), render_trace.empty() ? nullptr : trace_text.c_str(),
                    render_step, &text) != DT_OK) {
        std::cerr << "error: " << dt_last_error() << "\n";
        return kExitUsage;
      }
      ApiString s(text);
      std::cout << s.get();
      return kExitOk;
    }
    if (c_reduce->parsed()) {
      const std::string strat = script.empty() ? strategy : script;
      char* text = nullptr;
      if (dt_reduce(region.get(), strat.c_str(), label.c_str(), wmax, &text) != DT_OK) {
        std::cerr << "error: " << dt_last_error() << "\n";
        return kExitUsage;
      }
      ApiString s(text);
      std::cout << s.get();
      return kExitOk;
    }
    // verify-trace
    std::string trace_text;
    if (!read_file(trace_file, trace_text)) {
      std::cerr << "error: cannot read " << trace_file << "\n";
      return kExitUsage;
    }
    char* report = nullptr;
    int all_pass = 0;
    if (dt_verify_trace(region.get(), trace_text.c_str(), wmax, &report, &all_pass) != DT_OK) {
      std::cerr << "error: " << dt_last_error() << "\n";
      return kExitUsage;
    }
    ApiString s(report);
    std::cout << s.get();
    return all_pass ? kExitOk : kExitVerifyFail;
  }

  // verify sweep
  char* report = nullptr;
  int all_pass = 0;
  if (dt_verify(target.c_str(), max_n, max_k, max_p, trials, seed, wmax, json ? 1 : 0,
                &report, &all_pass) != DT_OK) {
    std::cerr << "error: " << dt_last_error() << "\n";
    return kExitUsage;
  }
  ApiString s(report);
  std::cout << s.get();
  return all_pass ? kExitOk : kExitVerifyFail;
}
