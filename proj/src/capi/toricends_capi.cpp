#include "toricends/toricends.h"

#include "toricends/error.hpp"
#include "toricends/jobs.hpp"
#include "toricends/schema.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>

struct tt_path {
  toric::BlockDecomposition decomposition;
};

struct tt_end {
  toric::EndDescription description;
};

struct tt_invariant {
  toric::EndInvariant invariant;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
tt_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return TT_OK;
  } catch (const toric::Error& e) {
    last_error = e.what();
    return static_cast<tt_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return TT_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TT_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw toric::Error(toric::ErrorCode::invalid_argument, std::string(what) + " is null");
}

toric::InvariantOptions options_for(size_t horizon) {
  toric::InvariantOptions o;
  if (horizon > 0) o.horizon = horizon;
  return o;
}

toric::JobOptions job_options(const tt_job_options* o) {
  toric::JobOptions j;
  if (o) {
    j.horizon = o->horizon;
    j.format = o->format == TT_FORMAT_HUMAN ? toric::OutputFormat::human : toric::OutputFormat::structured;
    j.family_cap = o->family_cap;
    j.period_search = o->period_search;
  }
  return j;
}

void emit(const toric::JobResult& r, char** output, char** error_text, int* exit_code) {
  *output = dup(r.output);
  if (error_text) *error_text = dup(r.error);
  *exit_code = r.exit_code;
}

}  // namespace

extern "C" {

const char* tt_version(void) { return "0.1.0"; }

const char* tt_status_name(tt_status status) {
  if (status == TT_OK) return "ok";
  if (status == TT_INTERNAL) return "internal";
  if (status >= 1 && status <= 16) return toric::error_code_name(static_cast<toric::ErrorCode>(status));
  return "unknown";
}

const char* tt_last_error(void) { return last_error.c_str(); }

void tt_string_free(char* s) { std::free(s); }

tt_status tt_path_create(const char* start, const char* target_json, tt_path** out) {
  return guarded([&] {
    require(start, "start");
    require(target_json, "target");
    require(out, "out");
    toric::SlopeTarget t = toric::schema::read_target(nlohmann::json::parse(target_json));
    *out = new tt_path{toric::BlockDecomposition(toric::farey_sequence(toric::Slope::parse(start), t, 2))};
  });
}

tt_status tt_path_extend(tt_path* path, size_t n) {
  return guarded([&] {
    require(path, "path");
    path->decomposition.extend_path_to(n);
  });
}

size_t tt_path_size(const tt_path* path) { return path ? path->decomposition.path().size() : 0; }

tt_status tt_path_vertex(const tt_path* path, size_t i, char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    if (i >= path->decomposition.path().size())
      throw toric::Error(toric::ErrorCode::invalid_argument, "vertex index out of range");
    *out = dup(path->decomposition.path()[i].str());
  });
}

tt_status tt_path_blocks_json(const tt_path* path, char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : path->decomposition.blocks()) blocks.push_back(toric::schema::write_block(b));
    *out = dup(nlohmann::json{{"blocks", blocks}}.dump());
  });
}

void tt_path_free(tt_path* path) { delete path; }

tt_status tt_end_parse(const char* json, tt_end** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new tt_end{toric::schema::read_description(nlohmann::json::parse(json))};
  });
}

tt_status tt_end_validate(const tt_end* end, char** violations_json) {
  std::vector<toric::Violation> v;
  tt_status s = guarded([&] {
    require(end, "end");
    require(violations_json, "out");
    v = toric::validate(end->description);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& x : v) list.push_back({{"invariant", x.invariant}, {"message", x.message}});
    *violations_json = dup(list.dump());
  });
  if (s != TT_OK) return s;
  if (!v.empty()) {
    last_error = v.front().invariant + ": " + v.front().message;
    return TT_VALIDATION;
  }
  return TT_OK;
}

tt_status tt_end_classify(const tt_end* end, size_t horizon, tt_invariant** out) {
  return guarded([&] {
    require(end, "end");
    require(out, "out");
    *out = new tt_invariant{toric::classify(end->description, options_for(horizon))};
  });
}

void tt_end_free(tt_end* end) { delete end; }

tt_status tt_invariant_parse(const char* json, tt_invariant** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new tt_invariant{toric::schema::read_invariant(nlohmann::json::parse(json))};
  });
}

tt_status tt_invariant_to_json(const tt_invariant* inv, char** out) {
  return guarded([&] {
    require(inv, "invariant");
    require(out, "out");
    *out = dup(toric::schema::write_invariant(inv->invariant).dump());
  });
}

tt_status tt_invariant_equivalent(const tt_invariant* a, const tt_invariant* b, size_t horizon, tt_equivalence* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    switch (toric::equivalent(a->invariant, b->invariant, options_for(horizon))) {
      case toric::Equivalence::distinct: *out = TT_DISTINCT; break;
      case toric::Equivalence::equivalent: *out = TT_EQUIVALENT; break;
      case toric::Equivalence::undecided: *out = TT_UNDECIDED; break;
    }
  });
}

tt_status tt_invariant_extension(const tt_invariant* inv, size_t horizon, char** out) {
  return guarded([&] {
    require(inv, "invariant");
    require(out, "out");
    toric::ExtensionVerdict v = toric::extension_obstruction(inv->invariant, options_for(horizon));
    *out = dup(nlohmann::json{{"verdict", toric::verdict_name(v.kind)}, {"reason", v.reason}, {"horizon", v.horizon}}.dump());
  });
}

void tt_invariant_free(tt_invariant* inv) { delete inv; }

tt_job_options tt_job_options_default(void) {
  toric::JobOptions j;
  return tt_job_options{j.horizon, TT_FORMAT_STRUCTURED, j.family_cap, j.period_search};
}

tt_status tt_run(const char* command, const char* input, const tt_job_options* options, char** output,
                 char** error_text, int* exit_code) {
  return guarded([&] {
    require(command, "command");
    require(input, "input");
    require(output, "output");
    require(exit_code, "exit_code");
    emit(toric::run_job(command, input, job_options(options)), output, error_text, exit_code);
  });
}

tt_status tt_run_batch(const char* input, const tt_job_options* options, char** output, char** error_text,
                       int* exit_code) {
  return guarded([&] {
    require(input, "input");
    require(output, "output");
    require(exit_code, "exit_code");
    emit(toric::run_batch(input, job_options(options)), output, error_text, exit_code);
  });
}

}  // extern "C"
