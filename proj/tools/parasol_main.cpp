// Copyright 2026 The parasol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. All mathematics lives behind the C API in
// libparasol; this binary only parses flags, forwards calls, and renders the
// returned JSON reports (verbatim, or as human tables with --format table).
//
// Exit codes: 0 success, 1 mathematical check failure, 2 usage error,
// 3 I/O or parse error.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "parasol/parasol.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct StringHolder {
  char* s = nullptr;
  ~StringHolder() { parasol_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct ManifoldHolder {
  parasol_manifold* m = nullptr;
  ~ManifoldHolder() { parasol_manifold_close(m); }
};

bool color_enabled() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string status_word(const std::string& s) {
  if (s == "pass") return paint(s, "32");
  if (s == "fail") return paint(s, "31");
  if (s == "conditional") return paint(s, "33");
  return paint(s, "2");
}

void render_checks(const Json& checks, const std::string& indent) {
  for (const Json& c : checks) {
    std::cout << indent << status_word(c.value("status", "?")) << "  "
              << c.value("name", "?");
    if (c.contains("detail")) std::cout << "  - " << c["detail"].get<std::string>();
    std::cout << "\n";
    if (c.contains("witnesses")) {
      const Json& ws = c["witnesses"];
      std::size_t shown = 0;
      for (const Json& w : ws) {
        if (shown++ == 4) {
          std::cout << indent << "    ... " << (ws.size() - 4) << " more witnesses\n";
          break;
        }
        std::cout << indent << "    at " << w["index"].dump() << ": expected "
                  << w.value("expected", "?") << ", got " << w.value("actual", "?") << "\n";
      }
    }
  }
}

void render_value(const std::string& key, const Json& v, const std::string& indent);

void render_object(const Json& obj, const std::string& indent) {
  for (auto it = obj.begin(); it != obj.end(); ++it) render_value(it.key(), it.value(), indent);
}

void render_value(const std::string& key, const Json& v, const std::string& indent) {
  if (v.is_object()) {
    std::cout << indent << key << ":\n";
    render_object(v, indent + "  ");
  } else if (v.is_array()) {
    std::cout << indent << key << ": " << v.dump() << "\n";
  } else if (v.is_string()) {
    std::cout << indent << key << ": " << v.get<std::string>() << "\n";
  } else {
    std::cout << indent << key << ": " << v.dump() << "\n";
  }
}

void render_table(const std::string& json_text) {
  Json report;
  try {
    report = Json::parse(json_text);
  } catch (...) {
    std::cout << json_text;
    return;
  }
  if (report.contains("error")) {
    std::cout << "error: " << report["error"].value("message", "?") << "\n";
    if (report["error"].contains("location")) {
      std::cout << "  at " << report["error"]["location"].get<std::string>() << "\n";
    }
    if (report["error"].contains("checks")) render_checks(report["error"]["checks"], "  ");
    return;
  }

  std::cout << "parasol " << report.value("command", "?") << " - "
            << report.value("subject", "?") << "\n";
  if (report.contains("parameters") && !report["parameters"].empty()) {
    std::cout << "parameters:\n";
    render_object(report["parameters"], "  ");
  }
  if (report.contains("checks") && !report["checks"].empty()) {
    std::cout << "checks:\n";
    render_checks(report["checks"], "  ");
  }
  if (report.contains("grid")) {
    for (const Json& point : report["grid"]) {
      std::cout << "grid point a=" << point.value("a", "?") << " b=" << point.value("b", "?");
      if (point.contains("presets")) std::cout << " " << point["presets"].dump();
      std::cout << ":\n";
      if (point.contains("values")) render_object(point["values"], "  ");
      render_checks(point["checks"], "  ");
    }
  }
  if (report.contains("data") && !report["data"].empty()) {
    std::cout << "data:\n";
    render_object(report["data"], "  ");
  }
  if (report.contains("summary")) {
    const Json& s = report["summary"];
    std::cout << "summary: " << s.value("pass", 0) << " pass, " << s.value("fail", 0)
              << " fail, " << s.value("conditional", 0) << " conditional, "
              << s.value("skipped", 0) << " skipped\n";
  }
}

int print_report(parasol_status status, const StringHolder& out, const std::string& format) {
  const std::string text = out.str();
  if (status == PARASOL_BAD_ARGUMENT || status == PARASOL_IO_ERROR) {
    std::cerr << text;
    return static_cast<int>(status);
  }
  if (format == "table") {
    render_table(text);
  } else {
    std::cout << text;
  }
  return static_cast<int>(status);
}

int load_manifold(const std::string& file, ManifoldHolder& holder) {
  if (file == "builtin") {
    if (parasol_manifold_builtin(&holder.m) != PARASOL_OK) {
      std::cerr << "error: cannot construct builtin example\n";
      return kExitIo;
    }
    return 0;
  }
  StringHolder diag;
  const parasol_status status = parasol_manifold_open(file.c_str(), &holder.m, &diag.s);
  if (status != PARASOL_OK) {
    std::cerr << diag.str();
    return static_cast<int>(status);
  }
  return 0;
}

int env_threads() {
  const char* v = std::getenv("PARASOL_THREADS");
  if (!v) return 1;
  const int t = std::atoi(v);
  return t > 0 ? t : 1;
}

struct ConnArgs {
  std::string a;
  std::string b;
  std::string preset;

  const char* a_ptr() const { return a.empty() ? nullptr : a.c_str(); }
  const char* b_ptr() const { return b.empty() ? nullptr : b.c_str(); }
  const char* preset_ptr() const { return preset.empty() ? nullptr : preset.c_str(); }
};

void add_conn_flags(CLI::App* cmd, ConnArgs& args) {
  auto* oa = cmd->add_option("--a", args.a, "family parameter a, rational \"p/q\"");
  auto* ob = cmd->add_option("--b", args.b, "family parameter b, rational \"p/q\"");
  auto* op = cmd->add_option(
      "--preset", args.preset,
      "quarter-symmetric | schouten-van-kampen | tanaka-webster | zamkovoy");
  op->excludes(oa);
  op->excludes(ob);
  oa->needs(ob);
  ob->needs(oa);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for LP-Sasakian structures, the general connection family, "
               "and generalized eta-Ricci solitons"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string file;
  ConnArgs conn;
  std::string x_spec;
  int grid_n = 5;
  bool include_presets = false;
  std::string out_path;

  CLI::App* c_verify = app.add_subcommand("verify", "run the full axiom and identity battery");
  c_verify->add_option("file", file, "manifold JSON file (or \"builtin\")")->required();

  CLI::App* c_conn = app.add_subcommand("connection", "frame connection table and its torsion/metricity");
  c_conn->add_option("file", file)->required();
  add_conn_flags(c_conn, conn);

  CLI::App* c_curv = app.add_subcommand("curvature", "curvature, Ricci data and scalar");
  c_curv->add_option("file", file)->required();
  add_conn_flags(c_curv, conn);

  CLI::App* c_ricci = app.add_subcommand("ricci", "Ricci tensor and operator");
  c_ricci->add_option("file", file)->required();
  add_conn_flags(c_ricci, conn);

  CLI::App* c_scalar = app.add_subcommand("scalar", "scalar curvature");
  c_scalar->add_option("file", file)->required();
  add_conn_flags(c_scalar, conn);

  CLI::App* c_soliton = app.add_subcommand("soliton", "solve the generalized eta-Ricci soliton system");
  c_soliton->add_option("file", file)->required();
  c_soliton->add_option("--x", x_spec, "potential vector: \"xi\" or comma-separated rationals")
      ->required();
  add_conn_flags(c_soliton, conn);

  CLI::App* c_cross = app.add_subcommand("crosscheck", "audit closed forms against direct computation");
  c_cross->add_option("file", file)->required();
  c_cross->add_option("--grid", grid_n, "grid size N (N x N parameter points)")->check(CLI::PositiveNumber);
  c_cross->add_flag("--include-presets", include_presets, "force the four presets into the grid");

  CLI::App* c_thms = app.add_subcommand("theorems", "soliton theorem battery (default preset: zamkovoy)");
  c_thms->add_option("file", file)->required();
  add_conn_flags(c_thms, conn);

  CLI::App* c_example = app.add_subcommand("paper-example", "emit the bundled example manifold file");
  c_example->add_option("--out", out_path, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (c_example->parsed()) {
    StringHolder out;
    if (parasol_example_json(&out.s) != PARASOL_OK) {
      std::cerr << "error: cannot serialize the bundled example\n";
      return kExitIo;
    }
    if (out_path.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitIo;
      }
      f << out.str();
      if (!f.good()) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return kExitIo;
      }
    }
    return 0;
  }

  ManifoldHolder manifold;
  if (int rc = load_manifold(file, manifold); rc != 0) return rc;

  StringHolder out;
  parasol_status status = PARASOL_BAD_ARGUMENT;
  if (c_verify->parsed()) {
    status = parasol_verify(manifold.m, &out.s);
  } else if (c_conn->parsed()) {
    status = parasol_connection(manifold.m, conn.a_ptr(), conn.b_ptr(), conn.preset_ptr(), &out.s);
  } else if (c_curv->parsed()) {
    status = parasol_curvature(manifold.m, conn.a_ptr(), conn.b_ptr(), conn.preset_ptr(), &out.s);
  } else if (c_ricci->parsed()) {
    status = parasol_ricci(manifold.m, conn.a_ptr(), conn.b_ptr(), conn.preset_ptr(), &out.s);
  } else if (c_scalar->parsed()) {
    status = parasol_scalar(manifold.m, conn.a_ptr(), conn.b_ptr(), conn.preset_ptr(), &out.s);
  } else if (c_soliton->parsed()) {
    status = parasol_soliton(manifold.m, x_spec.c_str(), conn.a_ptr(), conn.b_ptr(),
                             conn.preset_ptr(), &out.s);
  } else if (c_cross->parsed()) {
    status = parasol_crosscheck(manifold.m, grid_n, include_presets ? 1 : 0, env_threads(),
                                &out.s);
  } else if (c_thms->parsed()) {
    status = parasol_theorems(manifold.m, conn.a_ptr(), conn.b_ptr(), conn.preset_ptr(), &out.s);
  }
  return print_report(status, out, format);
}
