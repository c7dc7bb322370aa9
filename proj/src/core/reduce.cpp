#include "toricends/reduce.hpp"

#include "toricends/error.hpp"

namespace toric {

GL2ZMatrix minus_side_reflection() { return GL2ZMatrix(1, 0, 0, -1); }

namespace {

bool unit_fraction(const Slope& s) { return s.is_infinite() || boost::multiprecision::abs(s.num()) == 1; }

std::optional<Slope> first_unit_vertex(const Slope& boundary, const SlopeTarget& target) {
  FareyPath p(boundary, target);
  for (std::size_t i = 0; i < BlockDecomposition::kDefaultMaxVertices; ++i) {
    p.extend_to(i + 1);
    if (i >= p.size()) return std::nullopt;
    if (unit_fraction(p[i])) return p[i];
  }
  return std::nullopt;
}

}  // namespace

std::optional<Slope> last_unit_fraction(const Slope& boundary, const SlopeTarget& target) {
  const bool attained = target.is_attained();
  if (target.is_rational() && attained && unit_fraction(target.slope())) return target.slope();
  if (target.equals_slope(Slope(0))) return first_unit_vertex(boundary, target);

  // Walk counterclockwise (upward) from the target to the first 1/n point.
  std::optional<Slope> c;
  if (target.equals_slope(Slope::infinity()) || target.compare(Slope(-1)) > 0) {
    c = Slope(-1);
  } else if (target.compare(Slope(0)) > 0) {
    // -1 <= r < 0: the first -1/k above r has k = floor(-1/r) + 1.
    BigInt y = target.transformed(GL2ZMatrix(0, -1, 1, 0)).floor();
    c = Slope(BigInt(-1), y + 1);
  } else if (target.compare(Slope(1)) > 0) {
    // 0 < r < 1: the first 1/k above r.
    SlopeTarget inv = target.transformed(GL2ZMatrix(0, 1, 1, 0));
    BigInt y = inv.floor();
    bool exact = inv.is_rational() && inv.slope().den() == 1;
    c = Slope(BigInt(1), exact ? y - 1 : y);
  } else {
    c = Slope::infinity();
  }
  if (*c == boundary) return c;
  if (on_arc_to_target(boundary, target, *c, attained)) return c;
  return std::nullopt;
}

SolidTorusEnd solid_torus_factor(const EndDescription& e, const InvariantOptions&) {
  auto violations = validate(e);
  if (!violations.empty())
    throw Error(ErrorCode::validation, violations.front().invariant + ": " + violations.front().message);
  auto s = last_unit_fraction(e.boundary.slope, e.target);
  if (!s) throw Error(ErrorCode::no_realized_point, "no slope of the form 1/n lies on the arc from the boundary to the target");
  FareyPath p(e.boundary.slope, e.target);
  std::size_t k = 0;
  for (;; ++k) {
    if (k >= BlockDecomposition::kDefaultMaxVertices)
      throw Error(ErrorCode::horizon_exceeded, "s(r) = " + s->str() + " not reached along the path");
    p.extend_to(k + 1);
    if (k >= p.size())
      throw Error(ErrorCode::no_realized_point, "s(r) = " + s->str() + " is not a torus of the factorization");
    if (p[k] == *s) break;
    if (!e.target.equals_slope(*s) && on_arc_to_target(*s, e.target, p[k], true))
      throw Error(ErrorCode::no_realized_point,
                  "s(r) = " + s->str() + " lies inside a basic slice and is not a torus of the factorization");
  }
  if (k > 0 && !e.rotative.empty())
    throw Error(ErrorCode::invalid_argument, "rotative layers at the boundary would fall inside the solid torus");

  SolidTorusEnd out;
  out.realized_start = *s;
  out.dropped_slices = k;
  out.end = e;
  out.end.boundary = TorusRecord{*s, 1};
  out.end.signs = e.signs.drop(k);
  if (!e.tori.empty()) {
    out.end.tori.clear();
    if (e.tori.size() > k) out.end.tori.assign(e.tori.begin() + static_cast<std::ptrdiff_t>(k), e.tori.end());
  }
  DivisionTail& dt = out.end.division_tail;
  if (dt.kind == DivisionTail::Kind::eventually_constant) {
    std::size_t drop = std::min(k, dt.prefix.size());
    dt.prefix.erase(dt.prefix.begin(), dt.prefix.begin() + static_cast<std::ptrdiff_t>(drop));
    dt.after = dt.prefix.size();
  }
  return out;
}

std::pair<Slope, EndInvariant> classify_solid_torus(const EndDescription& e, const InvariantOptions& options) {
  if (e.target.is_attained() && e.target.equals_slope(Slope(0)))
    throw Error(ErrorCode::attained_zero_slope, "an open solid torus cannot attain the meridian slope 0 at infinity");
  SolidTorusEnd f = solid_torus_factor(e, options);
  return {f.realized_start, classify(f.end, options)};
}

OpenToricAnnulus normalize_rotativity(const OpenToricAnnulus& a) {
  if (a.middle.division != 1)
    throw Error(ErrorCode::no_division_one_torus, "the cutting torus has division number " +
                                                      std::to_string(a.middle.division) + ", not 1");
  if (!(a.plus.boundary.slope == a.middle.slope))
    throw Error(ErrorCode::validation, "plus end boundary " + a.plus.boundary.slope.str() + " is not the middle slope " +
                                           a.middle.slope.str());
  Slope reflected = minus_side_reflection().apply(a.middle.slope);
  if (!(a.minus.boundary.slope == reflected))
    throw Error(ErrorCode::validation, "minus end boundary " + a.minus.boundary.slope.str() +
                                           " is not the reflected middle slope " + reflected.str());
  const RotativeLayers& p = a.plus.rotative;
  const RotativeLayers& m = a.minus.rotative;
  if (p.mixed() || m.mixed()) throw Error(ErrorCode::mixed_rotativity, "rotative layers of both signs on one side");
  auto sp = p.sign();
  auto sm = m.sign();
  if (sp && sm && *sp != *sm)
    throw Error(ErrorCode::mixed_rotativity, "the two ends carry rotativity of opposite signs");
  OpenToricAnnulus out = a;
  out.minus.rotative = RotativeLayers::none();
  if (!sp && !sm) return out;
  Sign s = sp ? *sp : *sm;
  if (p.infinite || m.infinite) out.plus.rotative = RotativeLayers::infinitely_many(s);
  else out.plus.rotative = RotativeLayers::finite(p.layers.size() + m.layers.size(), s);
  return out;
}

}  // namespace toric
