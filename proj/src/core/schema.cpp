#include "toricends/schema.hpp"

#include "toricends/error.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace toric::schema {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::parse, msg); }

const json& field(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

void expect_object(const json& j, const char* what) {
  if (!j.is_object()) fail(std::string(what) + " must be an object");
}

void expect_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
}

Sign read_sign(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "+") return Sign::plus;
    if (s == "-") return Sign::minus;
  }
  fail("sign must be \"+\" or \"-\", got " + j.dump());
}

json write_sign(Sign s) { return std::string(1, sign_char(s)); }

std::vector<Sign> read_sign_list(const json& j, const char* what) {
  expect_array(j, what);
  std::vector<Sign> out;
  for (const auto& v : j) out.push_back(read_sign(v));
  return out;
}

json write_sign_list(const std::vector<Sign>& v) {
  json a = json::array();
  for (Sign s : v) a.push_back(write_sign(s));
  return a;
}

std::vector<std::uint64_t> read_counts(const json& j, const char* what) {
  expect_array(j, what);
  std::vector<std::uint64_t> out;
  for (const auto& v : j) out.push_back(read_count(v, what));
  return out;
}

std::vector<BigInt> read_bigints(const json& j, const char* what) {
  expect_array(j, what);
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(read_bigint(v, what));
  return out;
}

json write_bigints(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(write_bigint(x));
  return a;
}

}  // namespace

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  expect_object(j, what);
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!ok) fail(std::string(what) + ": unknown field \"" + it.key() + "\"");
  }
}

std::uint64_t read_count(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  fail(std::string(what) + ": expected a non-negative integer, got " + j.dump());
}

BigInt read_bigint(const json& j, const char* what) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_bigint(j.get_ref<const std::string&>());
    } catch (const Error&) {
    }
  }
  fail(std::string(what) + ": expected an integer, got " + j.dump());
}

json write_bigint(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Slope read_slope(const json& j) {
  if (j.is_number_integer()) return Slope(read_bigint(j, "slope"), BigInt(1));
  if (!j.is_string()) fail("slope must be a string such as \"-4/3\", \"2\" or \"inf\", got " + j.dump());
  try {
    return Slope::parse(j.get_ref<const std::string&>());
  } catch (const Error& e) {
    fail(std::string("bad slope: ") + e.what());
  }
}

json write_slope(const Slope& s) { return s.str(); }

json write_matrix(const GL2ZMatrix& m) {
  json a = json::array();
  for (const auto& v : m.entries()) a.push_back(write_bigint(v));
  return a;
}

GL2ZMatrix read_matrix(const json& j) {
  if (!j.is_array() || j.size() != 4) fail("matrix must be an array [a, b, c, d]");
  try {
    return GL2ZMatrix(read_bigint(j[0], "matrix"), read_bigint(j[1], "matrix"), read_bigint(j[2], "matrix"),
                      read_bigint(j[3], "matrix"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    fail(std::string("bad matrix: ") + e.what());
  }
}

SlopeTarget read_target(const json& j) {
  expect_object(j, "target");
  const std::string type = field(j, "type", "target").is_string() ? j["type"].get<std::string>() : "";
  try {
    if (type == "rational") {
      expect_keys(j, {"type", "slope", "attained"}, "rational target");
      const json& a = field(j, "attained", "rational target");
      if (!a.is_boolean()) fail("rational target: \"attained\" must be true or false");
      return SlopeTarget::rational(read_slope(field(j, "slope", "rational target")), a.get<bool>());
    }
    if (type == "quadratic") {
      expect_keys(j, {"type", "a", "b", "c", "d"}, "quadratic target");
      return SlopeTarget::quadratic(QuadraticSurd::make(
          read_bigint(field(j, "a", "quadratic target"), "a"), read_bigint(field(j, "b", "quadratic target"), "b"),
          read_bigint(field(j, "c", "quadratic target"), "c"), read_bigint(field(j, "d", "quadratic target"), "d")));
    }
    if (type == "cf") {
      expect_keys(j, {"type", "prefix", "period", "homography"}, "cf target");
      std::vector<BigInt> prefix = j.contains("prefix") ? read_bigints(j["prefix"], "prefix") : std::vector<BigInt>{};
      CfStream s = CfStream::periodic(std::move(prefix), read_bigints(field(j, "period", "cf target"), "period"));
      if (j.contains("homography")) {
        const json& h = j["homography"];
        if (!h.is_array() || h.size() != 4) fail("cf target: homography must be [A, B, C, D]");
        s = s.transformed(std::array<BigInt, 4>{read_bigint(h[0], "homography"), read_bigint(h[1], "homography"),
                                                read_bigint(h[2], "homography"), read_bigint(h[3], "homography")});
      }
      return SlopeTarget::cf_stream(std::move(s));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse) throw;
    fail(std::string("bad target: ") + e.what());
  }
  fail("target type must be \"rational\", \"quadratic\" or \"cf\", got " + j["type"].dump());
}

json write_target(const SlopeTarget& t) {
  switch (t.kind()) {
    case SlopeTarget::Kind::rational:
      return json{{"type", "rational"}, {"slope", write_slope(t.slope())}, {"attained", t.is_attained()}};
    case SlopeTarget::Kind::quadratic: {
      const QuadraticSurd& q = t.surd();
      return json{{"type", "quadratic"},
                  {"a", write_bigint(q.a())},
                  {"b", write_bigint(q.b())},
                  {"c", write_bigint(q.c())},
                  {"d", write_bigint(q.d())}};
    }
    case SlopeTarget::Kind::cf_stream: {
      const CfStream& s = t.stream();
      if (!s.periodic_form())
        throw Error(ErrorCode::invalid_argument, "continued fraction " + s.key() + " has no finite description");
      json out{{"type", "cf"}, {"prefix", write_bigints(s.periodic_form()->first)},
               {"period", write_bigints(s.periodic_form()->second)}};
      const auto& h = s.homography();
      if (!(h[0] == 1 && h[1] == 0 && h[2] == 0 && h[3] == 1)) {
        json hj = json::array();
        for (const auto& v : h) hj.push_back(write_bigint(v));
        out["homography"] = hj;
      }
      return out;
    }
  }
  return {};
}

SignData read_signs(const json& j) {
  expect_keys(j, {"prefix", "tail"}, "signs");
  std::vector<Sign> prefix = j.contains("prefix") ? read_sign_list(j["prefix"], "signs prefix") : std::vector<Sign>{};
  TailRule tail = TailRule::none();
  if (j.contains("tail")) {
    const json& t = j["tail"];
    expect_object(t, "tail");
    const json& type = field(t, "type", "tail");
    std::string k = type.is_string() ? type.get<std::string>() : "";
    if (k == "none") {
      expect_keys(t, {"type"}, "tail");
    } else if (k == "all-positive" || k == "all-negative") {
      expect_keys(t, {"type"}, "tail");
      tail = TailRule::all(k == "all-positive" ? Sign::plus : Sign::minus);
    } else if (k == "eventually") {
      expect_keys(t, {"type", "sign", "after"}, "tail");
      tail = TailRule::eventually(read_sign(field(t, "sign", "tail")), t.contains("after") ? read_count(t["after"], "after") : 0);
    } else if (k == "alternating") {
      expect_keys(t, {"type"}, "tail");
      tail = TailRule::alternating();
    } else if (k == "periodic") {
      expect_keys(t, {"type", "pattern"}, "tail");
      try {
        tail = TailRule::periodic(read_sign_list(field(t, "pattern", "tail"), "pattern"));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::parse) throw;
        fail(std::string("bad tail: ") + e.what());
      }
    } else {
      fail("tail type must be one of none, all-positive, all-negative, eventually, alternating, periodic; got " + type.dump());
    }
  }
  return SignData(std::move(prefix), std::move(tail));
}

json write_signs(const SignData& s) {
  json out{{"prefix", write_sign_list(s.prefix())}};
  const TailRule& t = s.tail();
  switch (t.kind) {
    case TailRule::Kind::none: break;
    case TailRule::Kind::all_positive: out["tail"] = {{"type", "all-positive"}}; break;
    case TailRule::Kind::all_negative: out["tail"] = {{"type", "all-negative"}}; break;
    case TailRule::Kind::eventually:
      out["tail"] = {{"type", "eventually"}, {"sign", write_sign(t.sign)}, {"after", t.after}};
      break;
    case TailRule::Kind::alternating: out["tail"] = {{"type", "alternating"}}; break;
    case TailRule::Kind::periodic: out["tail"] = {{"type", "periodic"}, {"pattern", write_sign_list(t.pattern)}}; break;
  }
  return out;
}

TorusRecord read_torus(const json& j) {
  expect_keys(j, {"slope", "div"}, "torus");
  TorusRecord t;
  t.slope = read_slope(field(j, "slope", "torus"));
  t.division = j.contains("div") ? read_count(j["div"], "div") : 1;
  return t;
}

json write_torus(const TorusRecord& t) { return json{{"slope", write_slope(t.slope)}, {"div", t.division}}; }

namespace {

DivisionTail read_division_tail(const json& j) {
  expect_object(j, "division_tail");
  const json& type = field(j, "type", "division_tail");
  std::string k = type.is_string() ? type.get<std::string>() : "";
  if (k == "constant") {
    expect_keys(j, {"type", "value"}, "division_tail");
    return DivisionTail::constant(j.contains("value") ? read_count(j["value"], "value") : 1);
  }
  if (k == "eventually-constant") {
    expect_keys(j, {"type", "prefix", "after", "value"}, "division_tail");
    std::vector<std::uint64_t> prefix = j.contains("prefix") ? read_counts(j["prefix"], "prefix") : std::vector<std::uint64_t>{};
    DivisionTail d = DivisionTail::eventually(std::move(prefix), read_count(field(j, "value", "division_tail"), "value"));
    if (j.contains("after")) d.after = read_count(j["after"], "after");
    return d;
  }
  if (k == "strictly-increasing") {
    expect_keys(j, {"type"}, "division_tail");
    return DivisionTail::increasing();
  }
  fail("division_tail type must be constant, eventually-constant or strictly-increasing; got " + type.dump());
}

json write_division_tail(const DivisionTail& d) {
  switch (d.kind) {
    case DivisionTail::Kind::constant: return json{{"type", "constant"}, {"value", d.value}};
    case DivisionTail::Kind::eventually_constant: {
      json p = json::array();
      for (auto v : d.prefix) p.push_back(v);
      return json{{"type", "eventually-constant"}, {"prefix", p}, {"after", d.after}, {"value", d.value}};
    }
    case DivisionTail::Kind::strictly_increasing: return json{{"type", "strictly-increasing"}};
  }
  return {};
}

RotativeLayers read_rotative(const json& j) {
  expect_keys(j, {"n", "sign", "layers"}, "rotative");
  if (j.contains("layers")) {
    if (j.contains("n") || j.contains("sign")) fail("rotative: give either \"layers\" or \"n\" with \"sign\"");
    return RotativeLayers{read_sign_list(j["layers"], "layers"), false, Sign::plus};
  }
  Sign s = j.contains("sign") ? read_sign(j["sign"]) : Sign::plus;
  const json& n = field(j, "n", "rotative");
  if (n.is_string() && n.get<std::string>() == "inf") return RotativeLayers::infinitely_many(s);
  return RotativeLayers::finite(read_count(n, "rotative n"), s);
}

json write_rotative(const RotativeLayers& r) {
  if (r.infinite) return json{{"n", "inf"}, {"sign", write_sign(r.infinite_sign)}};
  if (r.mixed()) return json{{"layers", write_sign_list(r.layers)}};
  return json{{"n", r.layers.size()}, {"sign", write_sign(r.layers.empty() ? Sign::plus : r.layers.front())}};
}

}  // namespace

EndDescription read_description(const json& j) {
  expect_keys(j, {"boundary", "target", "signs", "division_tail", "rotative", "tori"}, "end description");
  EndDescription e;
  e.boundary = read_torus(field(j, "boundary", "end description"));
  e.target = read_target(field(j, "target", "end description"));
  if (j.contains("signs")) e.signs = read_signs(j["signs"]);
  if (j.contains("division_tail")) e.division_tail = read_division_tail(j["division_tail"]);
  if (j.contains("rotative")) e.rotative = read_rotative(j["rotative"]);
  if (j.contains("tori")) {
    expect_array(j["tori"], "tori");
    for (const auto& s : j["tori"]) e.tori.push_back(read_slope(s));
  }
  return e;
}

json write_description(const EndDescription& e) {
  json out{{"boundary", write_torus(e.boundary)},
           {"target", write_target(e.target)},
           {"signs", write_signs(e.signs)},
           {"division_tail", write_division_tail(e.division_tail)},
           {"rotative", write_rotative(e.rotative)}};
  if (!e.tori.empty()) {
    json t = json::array();
    for (const auto& s : e.tori) t.push_back(write_slope(s));
    out["tori"] = t;
  }
  return out;
}

json write_block(const Block& b) {
  return json{{"start", b.start},
              {"end", b.end},
              {"length", b.length()},
              {"witness", write_matrix(b.witness)},
              {"infinite", b.infinite}};
}

namespace {

json counts_json(const std::vector<std::uint64_t>& f) {
  json a = json::array();
  for (auto v : f) a.push_back(v);
  return a;
}

json write_minimal(const MinimalInvariant& m) {
  if (const auto* irr = std::get_if<IrrationalInvariant>(&m)) {
    json ev;
    switch (irr->eventual.kind) {
      case EventualRule::Kind::none: ev = {{"rule", "none"}}; break;
      case EventualRule::Kind::maximal: ev = {{"rule", "maximal"}, {"from", irr->eventual.from}}; break;
      case EventualRule::Kind::minimal: ev = {{"rule", "minimal"}, {"from", irr->eventual.from}}; break;
      case EventualRule::Kind::periodic:
        ev = {{"rule", "periodic"}, {"from", irr->eventual.from}, {"length", irr->eventual.length}};
        break;
    }
    return json{{"kind", "irrational"}, {"f", counts_json(irr->f)}, {"eventually", ev}};
  }
  if (const auto* r = std::get_if<RationalNonAttainedInvariant>(&m)) {
    json inf;
    switch (r->infinite_block.form) {
      case InfiniteBlock::Form::positive_finite: inf = {{"form", "pos"}, {"m", r->infinite_block.m}}; break;
      case InfiniteBlock::Form::negative_finite: inf = {{"form", "neg"}, {"m", r->infinite_block.m}}; break;
      case InfiniteBlock::Form::alternating: inf = {{"form", "alt"}}; break;
    }
    return json{{"kind", "rational"}, {"f", counts_json(r->finite_f)}, {"infinite", inf}};
  }
  const auto& a = std::get<AttainedInvariant>(m);
  return json{{"kind", "attained"}, {"f", counts_json(a.f)}, {"d", a.d}, {"vacuous", a.vacuous()}};
}

json write_kind_of(const std::variant<MinimallyTwisting, NonMinimallyTwisting, InfiniteDivision>& kind) {
  if (const auto* mt = std::get_if<MinimallyTwisting>(&kind)) return write_minimal(mt->invariant);
  if (const auto* nm = std::get_if<NonMinimallyTwisting>(&kind)) {
    json out{{"kind", "nonminimal"}, {"sign", write_sign(nm->sign)}};
    out["rotativity"] = nm->rotativity ? json(*nm->rotativity) : json("inf");
    out["residual"] = nm->residual ? write_kind_of(nm->residual->kind) : json(nullptr);
    return out;
  }
  const auto& d = std::get<InfiniteDivision>(kind).descriptor;
  return json{{"kind", "infinite-division"}, {"slope", write_slope(d.slope)}, {"tb_start", d.tb_start}, {"tb_step", d.tb_step}};
}

long long read_ll(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long long>();
  fail(std::string(what) + ": expected an integer");
}

std::variant<MinimallyTwisting, NonMinimallyTwisting, InfiniteDivision> read_kind(const json& j, const EndContext& ctx) {
  expect_object(j, "invariant");
  const json& kind = field(j, "kind", "invariant");
  std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "irrational") {
    expect_keys(j, {"kind", "f", "eventually"}, "irrational invariant");
    IrrationalInvariant inv;
    inv.f = read_counts(field(j, "f", "irrational invariant"), "f");
    if (j.contains("eventually")) {
      const json& e = j["eventually"];
      expect_keys(e, {"rule", "from", "length"}, "eventually");
      const json& r = field(e, "rule", "eventually");
      std::string rule = r.is_string() ? r.get<std::string>() : "";
      if (rule == "none") inv.eventual.kind = EventualRule::Kind::none;
      else if (rule == "maximal") inv.eventual.kind = EventualRule::Kind::maximal;
      else if (rule == "minimal") inv.eventual.kind = EventualRule::Kind::minimal;
      else if (rule == "periodic") inv.eventual.kind = EventualRule::Kind::periodic;
      else fail("eventually rule must be none, maximal, minimal or periodic");
      if (e.contains("from")) inv.eventual.from = read_count(e["from"], "from");
      if (e.contains("length")) inv.eventual.length = read_count(e["length"], "length");
      if (inv.eventual.kind == EventualRule::Kind::periodic &&
          (inv.eventual.length == 0 || inv.f.size() < inv.eventual.from + inv.eventual.length))
        fail("periodic rule needs length >= 1 and f listed through one full period");
    }
    return MinimallyTwisting{inv};
  }
  if (k == "rational") {
    expect_keys(j, {"kind", "f", "infinite"}, "rational invariant");
    RationalNonAttainedInvariant inv;
    inv.finite_f = read_counts(field(j, "f", "rational invariant"), "f");
    const json& b = field(j, "infinite", "rational invariant");
    expect_keys(b, {"form", "m"}, "infinite block");
    const json& form = field(b, "form", "infinite block");
    std::string fs = form.is_string() ? form.get<std::string>() : "";
    if (fs == "alt") {
      if (b.contains("m")) fail("infinite block: the alternating form takes no m");
      inv.infinite_block = InfiniteBlock::alternating();
    } else if (fs == "pos" || fs == "neg") {
      std::uint64_t m = read_count(field(b, "m", "infinite block"), "m");
      inv.infinite_block = fs == "pos" ? InfiniteBlock::positive(m) : InfiniteBlock::negative(m);
    } else {
      fail("infinite block form must be pos, neg or alt");
    }
    return MinimallyTwisting{inv};
  }
  if (k == "attained") {
    expect_keys(j, {"kind", "f", "d", "vacuous"}, "attained invariant");
    AttainedInvariant inv;
    inv.f = read_counts(field(j, "f", "attained invariant"), "f");
    inv.d = j.contains("d") ? read_count(j["d"], "d") : 1;
    if (inv.d < 1) fail("attained invariant: d must be at least 1");
    if (j.contains("vacuous") && (!j["vacuous"].is_boolean() || j["vacuous"].get<bool>() != inv.vacuous()))
      fail("attained invariant: \"vacuous\" disagrees with f");
    return MinimallyTwisting{inv};
  }
  if (k == "nonminimal") {
    expect_keys(j, {"kind", "rotativity", "sign", "residual"}, "nonminimal invariant");
    NonMinimallyTwisting nm;
    nm.sign = read_sign(field(j, "sign", "nonminimal invariant"));
    const json& r = field(j, "rotativity", "nonminimal invariant");
    if (r.is_string() && r.get<std::string>() == "inf") nm.rotativity = std::nullopt;
    else nm.rotativity = read_count(r, "rotativity");
    if (j.contains("residual") && !j["residual"].is_null()) {
      if (!nm.rotativity) fail("nonminimal invariant: infinite rotativity has no residual");
      nm.residual = std::make_shared<const EndInvariant>(EndInvariant{ctx, read_kind(j["residual"], ctx)});
    } else if (nm.rotativity) {
      fail("nonminimal invariant: finite rotativity needs a residual");
    }
    return nm;
  }
  if (k == "infinite-division") {
    expect_keys(j, {"kind", "slope", "tb_start", "tb_step"}, "infinite-division invariant");
    NestedAnnuliDescriptor d;
    d.slope = read_slope(field(j, "slope", "infinite-division invariant"));
    if (j.contains("tb_start")) d.tb_start = read_ll(j["tb_start"], "tb_start");
    if (j.contains("tb_step")) d.tb_step = read_ll(j["tb_step"], "tb_step");
    return InfiniteDivision{d};
  }
  fail("invariant kind must be irrational, rational, attained, nonminimal or infinite-division; got " + kind.dump());
}

}  // namespace

json write_invariant(const EndInvariant& inv) {
  return json{{"boundary", write_torus(TorusRecord{inv.context.boundary, inv.context.boundary_division})},
              {"framing", write_matrix(inv.context.framing)},
              {"target", write_target(inv.context.target)},
              {"invariant", write_kind_of(inv.kind)}};
}

EndInvariant read_invariant(const json& j) {
  expect_keys(j, {"boundary", "framing", "target", "invariant"}, "invariant document");
  EndContext ctx;
  TorusRecord b = read_torus(field(j, "boundary", "invariant document"));
  ctx.boundary = b.slope;
  ctx.boundary_division = b.division;
  ctx.framing = j.contains("framing") ? read_matrix(j["framing"]) : boundary_framing(b.slope);
  ctx.target = read_target(field(j, "target", "invariant document"));
  if (!(ctx.framing.apply(ctx.boundary) == Slope(-1))) fail("invariant document: framing does not send the boundary to -1");
  return EndInvariant{ctx, read_kind(field(j, "invariant", "invariant document"), ctx)};
}

OpenToricAnnulus read_annulus(const json& j) {
  expect_keys(j, {"plus", "minus", "middle", "framing"}, "open toric annulus");
  if (j.contains("framing") && !(read_matrix(j["framing"]) == minus_side_reflection()))
    fail("open toric annulus: the minus end framing is fixed to [1, 0, 0, -1]");
  OpenToricAnnulus a;
  a.plus = read_description(field(j, "plus", "open toric annulus"));
  a.minus = read_description(field(j, "minus", "open toric annulus"));
  a.middle = read_torus(field(j, "middle", "open toric annulus"));
  return a;
}

json write_annulus(const OpenToricAnnulus& a) {
  return json{{"plus", write_description(a.plus)},
              {"minus", write_description(a.minus)},
              {"middle", write_torus(a.middle)},
              {"framing", write_matrix(minus_side_reflection())}};
}

}  // namespace toric::schema
