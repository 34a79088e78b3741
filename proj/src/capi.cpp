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

#include "parasol/parasol.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "commands.hpp"
#include "errors.hpp"
#include "specfile.hpp"

struct parasol_manifold {
  parasol::LoadedManifold lm;
};

namespace {

using parasol::CommandOutcome;
using parasol::ConnectionChoice;
using parasol::Json;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

Json error_json(const char* type, const std::string& message, const std::string& location) {
  Json j;
  j["error"] = Json::object();
  j["error"]["type"] = type;
  if (!location.empty()) j["error"]["location"] = location;
  j["error"]["message"] = message;
  return j;
}

/* Exception-to-status boundary: nothing C++ may escape an extern "C" frame. */
template <typename Fn>
parasol_status guarded(char** out_json, Fn&& fn) {
  try {
    const CommandOutcome outcome = fn();
    emit(out_json, outcome.report.dump(2) + "\n");
    return outcome.exit_code == 0 ? PARASOL_OK : PARASOL_CHECK_FAILED;
  } catch (const parasol::SpecFileError& e) {
    emit(out_json, error_json("load", e.what(), e.location()).dump(2) + "\n");
    return PARASOL_IO_ERROR;
  } catch (const parasol::ValueError& e) {
    emit(out_json, error_json("argument", e.what(), "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  } catch (const parasol::Error& e) {
    emit(out_json, error_json("argument", e.what(), "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  } catch (const std::exception& e) {
    emit(out_json, error_json("internal", e.what(), "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  }
}

parasol_status parse_choice(const char* a, const char* b, const char* preset,
                            ConnectionChoice* out, char** out_json) {
  try {
    ConnectionChoice choice;
    if (preset) {
      const auto name = parasol::preset_from_string(preset);
      if (!name) throw parasol::ValueError(std::string("unknown preset: ") + preset);
      choice.preset = *name;
    }
    if (a || b) {
      if (!a || !b) throw parasol::ValueError("both a and b are required");
      if (preset) throw parasol::ValueError("choose either explicit parameters or a preset");
      choice.params = parasol::ConnectionParams{parasol::Rational::parse(a),
                                                parasol::Rational::parse(b)};
    }
    *out = choice;
    return PARASOL_OK;
  } catch (const std::exception& e) {
    emit(out_json, error_json("argument", e.what(), "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  }
}

parasol_status load_guarded(char** diagnostics, parasol_manifold** out,
                            parasol::LoadedManifold (*loader)(const std::string&),
                            const char* arg) {
  if (!out) return PARASOL_BAD_ARGUMENT;
  *out = nullptr;
  if (!arg) {
    emit(diagnostics, error_json("argument", "null input", "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  }
  try {
    auto* handle = new parasol_manifold{loader(arg)};
    *out = handle;
    return PARASOL_OK;
  } catch (const parasol::SpecValidationError& e) {
    Json j = error_json("validation", e.what(), e.location());
    j["error"]["checks"] = e.checks().to_json();
    emit(diagnostics, j.dump(2) + "\n");
    return PARASOL_IO_ERROR;
  } catch (const parasol::SpecFileError& e) {
    emit(diagnostics, error_json("load", e.what(), e.location()).dump(2) + "\n");
    return PARASOL_IO_ERROR;
  } catch (const std::exception& e) {
    emit(diagnostics, error_json("load", e.what(), "").dump(2) + "\n");
    return PARASOL_IO_ERROR;
  }
}

}  // namespace

extern "C" {

const char* parasol_version(void) { return parasol::tool_version(); }

void parasol_string_free(char* s) { std::free(s); }

parasol_status parasol_manifold_open(const char* path, parasol_manifold** out,
                                     char** diagnostics) {
  return load_guarded(diagnostics, out, &parasol::load_spec_file, path);
}

parasol_status parasol_manifold_from_json(const char* text, parasol_manifold** out,
                                          char** diagnostics) {
  return load_guarded(diagnostics, out, &parasol::load_spec_text, text);
}

parasol_status parasol_manifold_builtin(parasol_manifold** out) {
  if (!out) return PARASOL_BAD_ARGUMENT;
  try {
    *out = new parasol_manifold{parasol::builtin_example()};
    return PARASOL_OK;
  } catch (const std::exception&) {
    *out = nullptr;
    return PARASOL_BAD_ARGUMENT;
  }
}

void parasol_manifold_close(parasol_manifold* m) { delete m; }

int parasol_manifold_dim(const parasol_manifold* m) { return m ? m->lm.manifold.n() : 0; }

parasol_status parasol_example_json(char** out_json) {
  if (!out_json) return PARASOL_BAD_ARGUMENT;
  try {
    emit(out_json, parasol::builtin_example_json());
    return PARASOL_OK;
  } catch (const std::exception& e) {
    emit(out_json, error_json("internal", e.what(), "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  }
}

parasol_status parasol_verify(const parasol_manifold* m, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  return guarded(out_json, [&] { return parasol::cmd_verify(m->lm); });
}

parasol_status parasol_connection(const parasol_manifold* m, const char* a, const char* b,
                                  const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_connection(m->lm, choice); });
}

parasol_status parasol_curvature(const parasol_manifold* m, const char* a, const char* b,
                                 const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_curvature(m->lm, choice); });
}

parasol_status parasol_ricci(const parasol_manifold* m, const char* a, const char* b,
                             const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_ricci(m->lm, choice); });
}

parasol_status parasol_scalar(const parasol_manifold* m, const char* a, const char* b,
                              const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_scalar(m->lm, choice); });
}

parasol_status parasol_soliton(const parasol_manifold* m, const char* x, const char* a,
                               const char* b, const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  if (!x) {
    emit(out_json, error_json("argument", "x is required", "").dump(2) + "\n");
    return PARASOL_BAD_ARGUMENT;
  }
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_soliton(m->lm, x, choice); });
}

parasol_status parasol_crosscheck(const parasol_manifold* m, int grid_n, int include_presets,
                                  int threads, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  return guarded(out_json, [&] {
    return parasol::cmd_crosscheck(m->lm, grid_n, include_presets != 0, threads);
  });
}

parasol_status parasol_theorems(const parasol_manifold* m, const char* a, const char* b,
                                const char* preset, char** out_json) {
  if (!m) return PARASOL_BAD_ARGUMENT;
  ConnectionChoice choice;
  if (parasol_status s = parse_choice(a, b, preset, &choice, out_json); s != PARASOL_OK) return s;
  return guarded(out_json, [&] { return parasol::cmd_theorems(m->lm, choice); });
}

}  // extern "C"
