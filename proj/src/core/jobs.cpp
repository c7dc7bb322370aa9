#include "toricends/jobs.hpp"

#include "toricends/error.hpp"
#include "toricends/schema.hpp"

#include <sstream>

namespace toric {

using schema::json;

namespace {

json error_doc(const std::string& code, const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}};
}

std::string join_counts(const std::vector<std::uint64_t>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
  return "(" + s + ")";
}

std::string describe_kind(const std::variant<MinimallyTwisting, NonMinimallyTwisting, InfiniteDivision>& kind) {
  std::ostringstream os;
  if (const auto* mt = std::get_if<MinimallyTwisting>(&kind)) {
    if (const auto* irr = std::get_if<IrrationalInvariant>(&mt->invariant)) {
      os << "minimally twisting, irrational slope at infinity\nf = " << join_counts(irr->f);
      const auto& e = irr->eventual;
      switch (e.kind) {
        case EventualRule::Kind::none: os << ", unknown past block " << irr->f.size(); break;
        case EventualRule::Kind::maximal: os << ", maximal from block " << e.from + 1; break;
        case EventualRule::Kind::minimal: os << ", minimal from block " << e.from + 1; break;
        case EventualRule::Kind::periodic:
          os << ", periodic from block " << e.from + 1 << " with period " << e.length;
          break;
      }
    } else if (const auto* r = std::get_if<RationalNonAttainedInvariant>(&mt->invariant)) {
      os << "minimally twisting, rational slope at infinity not attained\nf = " << join_counts(r->finite_f)
         << "\ninfinite block: ";
      const auto& b = r->infinite_block;
      if (b.form == InfiniteBlock::Form::alternating) os << "alternating (inf, inf)";
      else if (b.form == InfiniteBlock::Form::positive_finite) os << "xi_" << b.m << "^+ (" << b.m << ", inf)";
      else os << "xi_" << b.m << "^- (inf, " << b.m << ")";
    } else {
      const auto& a = std::get<AttainedInvariant>(mt->invariant);
      os << "minimally twisting, slope at infinity attained with division " << a.d << "\nf = " << join_counts(a.f);
      if (a.vacuous()) os << " (vacuous: no basic slices)";
    }
  } else if (const auto* nm = std::get_if<NonMinimallyTwisting>(&kind)) {
    os << "nonminimally twisting, rotativity " << (nm->rotativity ? std::to_string(*nm->rotativity) : "inf")
       << ", sign " << sign_char(nm->sign);
    if (nm->residual) os << "\nresidual: " << describe_kind(nm->residual->kind);
  } else {
    const auto& d = std::get<InfiniteDivision>(kind).descriptor;
    os << "infinite division at infinity: nested annuli on slope " << d.slope.str() << ", tb " << d.tb_start
       << " with step " << d.tb_step << " (equivalence undecided)";
  }
  return os.str();
}

std::string describe(const EndInvariant& inv) {
  return "boundary " + inv.context.boundary.str() + ", target " + inv.context.target.describe() + " after framing\n" +
         describe_kind(inv.kind);
}

struct Output {
  json doc;
  std::string human;
};

InvariantOptions invariant_options(const JobOptions& o) {
  InvariantOptions io;
  io.horizon = o.horizon;
  io.period_search = o.period_search;
  return io;
}

EndInvariant read_end(const json& j, const InvariantOptions& o) {
  if (j.is_object() && j.contains("invariant")) return schema::read_invariant(j);
  return classify(schema::read_description(j), o);
}

Output cmd_path(const json& in, const JobOptions&) {
  schema::expect_keys(in, {"start", "target", "n"}, "path job");
  Slope start = schema::read_slope(in.at("start"));
  SlopeTarget t = schema::read_target(in.at("target"));
  std::uint64_t n = schema::read_count(in.at("n"), "n");
  FareyPath p = farey_sequence(start, t, n);
  json v = json::array();
  std::string h;
  for (const Slope& s : p.vertices()) {
    v.push_back(schema::write_slope(s));
    h += (h.empty() ? "" : " ") + s.str();
  }
  return {json{{"vertices", v}}, h};
}

Output cmd_blocks(const json& in, const JobOptions&) {
  schema::expect_keys(in, {"start", "target", "n", "vertices"}, "blocks job");
  SlopeTarget t = schema::read_target(in.at("target"));
  std::optional<BlockDecomposition> d;
  Slope start(-1);
  if (in.contains("vertices")) {
    if (in.contains("start") || in.contains("n")) throw Error(ErrorCode::parse, "blocks job: give vertices or start and n");
    std::vector<Slope> vs;
    for (const auto& s : in["vertices"]) vs.push_back(schema::read_slope(s));
    if (vs.empty()) throw Error(ErrorCode::parse, "blocks job: vertices must be nonempty");
    start = vs.front();
    d.emplace(FareyPath::from_vertices(std::move(vs), t));
  } else {
    start = schema::read_slope(in.at("start"));
    d.emplace(farey_sequence(start, t, schema::read_count(in.at("n"), "n")));
  }
  json blocks = json::array();
  std::ostringstream h;
  for (std::size_t i = 0; i < d->blocks().size(); ++i) {
    const Block& b = d->blocks()[i];
    blocks.push_back(schema::write_block(b));
    const auto& w = b.witness;
    h << "block " << i + 1 << ": vertices " << b.start << ".." << b.end << ", length " << b.length() << ", witness ["
      << w.a() << " " << w.b() << "; " << w.c() << " " << w.d() << "]" << (b.infinite ? ", infinite" : "")
      << (b.complete || b.infinite ? "" : ", open") << "\n";
  }
  json out{{"blocks", blocks}};
  if (t.is_rational() && !t.is_attained()) {
    std::size_t n = n_of_r(t.slope(), start);
    out["n_of_r"] = n;
    h << "n(r) = " << n << "\n";
  }
  std::string hs = h.str();
  if (!hs.empty()) hs.pop_back();
  return {out, hs};
}

Output cmd_classify(const json& in, const JobOptions& o) {
  EndInvariant inv = classify(schema::read_description(in), invariant_options(o));
  return {schema::write_invariant(inv), describe(inv)};
}

Output cmd_compare(const json& in, const JobOptions& o) {
  schema::expect_keys(in, {"a", "b"}, "compare job");
  InvariantOptions io = invariant_options(o);
  EndInvariant a = read_end(in.at("a"), io);
  EndInvariant b = read_end(in.at("b"), io);
  const char* e = equivalence_name(equivalent(a, b, io));
  return {json{{"equivalent", e}}, std::string("equivalent: ") + e};
}

Output cmd_count(const json& in, const JobOptions&) {
  schema::expect_keys(in, {"lengths", "start", "target", "k"}, "count job");
  BigInt c;
  if (in.contains("lengths")) {
    if (in.contains("start") || in.contains("target") || in.contains("k"))
      throw Error(ErrorCode::parse, "count job: give lengths or start, target and k");
    std::vector<std::size_t> lengths;
    if (!in["lengths"].is_array()) throw Error(ErrorCode::parse, "count job: lengths must be an array");
    for (const auto& v : in["lengths"]) lengths.push_back(schema::read_count(v, "lengths"));
    c = count_invariants(lengths);
  } else {
    BlockDecomposition d(farey_sequence(schema::read_slope(in.at("start")), schema::read_target(in.at("target")), 2));
    c = count_invariants(d, schema::read_count(in.at("k"), "k"));
  }
  return {json{{"count", schema::write_bigint(c)}}, c.str()};
}

Output cmd_euler(const json& in, const JobOptions& o) {
  EndDescription e = schema::read_description(in);
  auto violations = validate(e);
  if (!violations.empty()) throw Error(ErrorCode::validation, violations.front().invariant + ": " + violations.front().message);
  if (!e.rotative.empty() || !division_at_infinity(e))
    throw Error(ErrorCode::invalid_argument, "the Euler class is computed for minimally twisting ends of finite division");
  BlockDecomposition d(farey_sequence(e.boundary.slope, e.target, 2));
  EulerClass ec = euler_class(d, e.signs, o.horizon);
  std::size_t slices = d.path().infinite() ? o.horizon : d.path().edge_count();
  json out{{"euler", json::array({schema::write_bigint(ec.x), schema::write_bigint(ec.y)})},
           {"slices", slices},
           {"truncated", d.path().infinite()}};
  std::string h = "euler class: (" + ec.x.str() + ", " + ec.y.str() + ")";
  if (d.path().infinite()) h += " over the first " + std::to_string(slices) + " basic slices";
  return {out, h};
}

Output cmd_extend(const json& in, const JobOptions& o) {
  InvariantOptions io = invariant_options(o);
  ExtensionVerdict v = extension_obstruction(read_end(in, io), io);
  return {json{{"verdict", verdict_name(v.kind)}, {"reason", v.reason}, {"horizon", v.horizon}},
          std::string(verdict_name(v.kind)) + ": " + v.reason};
}

Output cmd_family(const json& in, const JobOptions& o) {
  schema::expect_keys(in, {"target", "k"}, "family job");
  FamilyOptions fo;
  fo.invariant = invariant_options(o);
  fo.max_k = o.family_cap;
  auto fam = non_extendable_family(schema::read_target(in.at("target")), schema::read_count(in.at("k"), "k"), fo);
  json list = json::array();
  std::string h;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    list.push_back(schema::write_invariant(fam[i]));
    h += (i ? "\n" : "") + std::to_string(i + 1) + ". " + describe_kind(fam[i].kind);
  }
  return {json{{"invariants", list}}, h};
}

Output cmd_solid(const json& in, const JobOptions& o) {
  InvariantOptions io = invariant_options(o);
  EndDescription e = schema::read_description(in);
  auto [s, inv] = classify_solid_torus(e, io);
  SolidTorusEnd f = solid_torus_factor(e, io);
  json out{{"s", schema::write_slope(s)},
           {"dropped_slices", f.dropped_slices},
           {"framing", schema::write_matrix(boundary_framing(s))},
           {"end", schema::write_description(f.end)},
           {"invariant", schema::write_invariant(inv)}};
  return {out, "s(r) = " + s.str() + "\n" + describe(inv)};
}

Output cmd_t2xr(const json& in, const JobOptions& o) {
  InvariantOptions io = invariant_options(o);
  OpenToricAnnulus a = normalize_rotativity(schema::read_annulus(in));
  EndInvariant p = classify(a.plus, io);
  EndInvariant m = classify(a.minus, io);
  json out{{"annulus", schema::write_annulus(a)},
           {"plus_invariant", schema::write_invariant(p)},
           {"minus_invariant", schema::write_invariant(m)}};
  auto rot = [](const RotativeLayers& r) {
    if (r.infinite) return std::string("inf ") + sign_char(r.infinite_sign);
    if (r.layers.empty()) return std::string("0");
    return std::to_string(r.layers.size()) + " " + sign_char(r.layers.front());
  };
  return {out, "plus rotativity: " + rot(a.plus.rotative) + "\nminus rotativity: " + rot(a.minus.rotative) +
                   "\nplus end: " + describe_kind(p.kind) + "\nminus end: " + describe_kind(m.kind)};
}

using Handler = Output (*)(const json&, const JobOptions&);

Handler handler(const std::string& command) {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"path", cmd_path},         {"blocks", cmd_blocks}, {"classify", cmd_classify},
      {"compare", cmd_compare},   {"count", cmd_count},   {"euler", cmd_euler},
      {"extend-check", cmd_extend}, {"family", cmd_family}, {"reduce-solid-torus", cmd_solid},
      {"reduce-t2xr", cmd_t2xr},
  };
  for (const auto& [name, h] : table)
    if (name == command) return h;
  return nullptr;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

// Returns the exit code; fills doc or err.
int run_parsed(const std::string& command, const json& in, const JobOptions& options, Output& out, json& err,
               std::string& err_text) {
  auto fail = [&](int code, const std::string& name, const std::string& msg) {
    err = error_doc(name, msg);
    err_text = name + ": " + msg;
    return code;
  };
  Handler h = handler(command);
  if (!h) return fail(2, "parse", "unknown command \"" + command + "\"");
  if (options.horizon < 1) return fail(2, "parse", "horizon must be at least 1");
  try {
    out = h(in, options);
    return 0;
  } catch (const Error& e) {
    return fail(e.code() == ErrorCode::parse ? 2 : 1, error_code_name(e.code()), e.what());
  } catch (const json::exception& e) {
    return fail(2, "parse", e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what());
  }
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = {"path",    "blocks",       "classify", "compare",
                                                 "count",   "euler",        "extend-check", "family",
                                                 "reduce-solid-torus", "reduce-t2xr"};
  return names;
}

JobResult run_job(const std::string& command, const std::string& input, const JobOptions& options) {
  JobResult r;
  json in;
  try {
    in = json::parse(input);
  } catch (const json::exception& e) {
    r.exit_code = 2;
    r.error = std::string("parse: ") + e.what();
    if (options.format == OutputFormat::structured) r.output = render(error_doc("parse", e.what()));
    return r;
  }
  Output out;
  json err;
  r.exit_code = run_parsed(command, in, options, out, err, r.error);
  if (r.exit_code == 0) r.output = options.format == OutputFormat::structured ? render(out.doc) : out.human + "\n";
  else if (options.format == OutputFormat::structured) r.output = render(err);
  return r;
}

JobResult run_batch(const std::string& input, const JobOptions& options) {
  JobResult r;
  json in;
  try {
    in = json::parse(input);
    schema::expect_keys(in, {"jobs"}, "batch");
    if (!in.contains("jobs") || !in["jobs"].is_array()) throw Error(ErrorCode::parse, "batch: \"jobs\" must be an array");
    for (const auto& job : in["jobs"]) {
      schema::expect_keys(job, {"command", "input", "horizon"}, "batch job");
      if (!job.contains("command") || !job["command"].is_string() || !job.contains("input"))
        throw Error(ErrorCode::parse, "batch job needs a command string and an input document");
    }
  } catch (const std::exception& e) {
    r.exit_code = 2;
    r.error = std::string("parse: ") + e.what();
    if (options.format == OutputFormat::structured) r.output = render(error_doc("parse", e.what()));
    return r;
  }
  json results = json::array();
  std::string human;
  for (std::size_t i = 0; i < in["jobs"].size(); ++i) {
    const json& job = in["jobs"][i];
    JobOptions o = options;
    Output out;
    json err;
    std::string err_text;
    int code;
    if (job.contains("horizon") && !job["horizon"].is_number_unsigned()) {
      code = 2;
      err = error_doc("parse", "batch job horizon must be a positive integer");
      err_text = "parse: batch job horizon must be a positive integer";
    } else {
      if (job.contains("horizon")) o.horizon = job["horizon"].get<std::size_t>();
      code = run_parsed(job["command"].get<std::string>(), job["input"], o, out, err, err_text);
    }
    r.exit_code = std::max(r.exit_code, code);
    json entry{{"command", job["command"]}, {"status", code}};
    if (code == 0) entry["output"] = out.doc;
    else entry["error"] = err["error"];
    results.push_back(entry);
    human += "[" + std::to_string(i + 1) + "] " + job["command"].get<std::string>() + "\n" +
             (code == 0 ? out.human : "error: " + err_text) + "\n";
    if (code != 0) r.error += (r.error.empty() ? "" : "\n") + ("job " + std::to_string(i + 1) + ": " + err_text);
  }
  r.output = options.format == OutputFormat::structured ? render(json{{"results", results}}) : human;
  return r;
}

}  // namespace toric
