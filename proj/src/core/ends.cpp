#include "toricends/ends.hpp"

#include "toricends/error.hpp"

#include <algorithm>
#include <limits>

namespace toric {

std::optional<std::uint64_t> RotativeLayers::count() const {
  if (infinite) return std::nullopt;
  return layers.size();
}

std::optional<Sign> RotativeLayers::sign() const {
  if (infinite) return infinite_sign;
  if (layers.empty() || mixed()) return std::nullopt;
  return layers.front();
}

bool RotativeLayers::mixed() const {
  return std::any_of(layers.begin(), layers.end(), [&](Sign s) { return s != layers.front(); });
}

GL2ZMatrix boundary_framing(const Slope& boundary) {
  if (boundary == Slope(-1)) return GL2ZMatrix::identity();
  return to_infinity(Slope(-1)).inverse() * to_infinity(boundary);
}

std::optional<std::uint64_t> division_at_infinity(const EndDescription& e) {
  if (e.division_tail.kind == DivisionTail::Kind::strictly_increasing) return std::nullopt;
  return e.division_tail.value;
}

bool is_minimally_twisting(const EndDescription& e) { return e.rotative.empty(); }

namespace {

std::optional<Violation> check_tori(const EndDescription& e) {
  if (e.tori.empty()) return std::nullopt;
  if (!(e.tori.front() == e.boundary.slope))
    return Violation{"divergent net", "first factorization torus " + e.tori.front().str() +
                                          " is not the boundary torus " + e.boundary.slope.str()};
  GL2ZMatrix f = boundary_framing(e.boundary.slope);
  std::vector<Slope> normalized;
  for (const Slope& s : e.tori) normalized.push_back(f.apply(s));
  try {
    BlockDecomposition d(FareyPath::from_vertices(std::move(normalized), e.target.transformed(f)));
  } catch (const Error& err) {
    return Violation{"divergent net", std::string("factorization tori do not converge clockwise to the target: ") +
                                          err.what()};
  }
  return std::nullopt;
}

}  // namespace

SlopeTarget slope_at_infinity(const EndDescription& e, const InvariantOptions&) {
  if (auto v = check_tori(e)) throw Error(ErrorCode::divergent_net, v->message);
  return e.target;
}

std::vector<Violation> validate(const EndDescription& e) {
  std::vector<Violation> out;
  auto flag = [&](std::string inv, std::string msg) { out.push_back({std::move(inv), std::move(msg)}); };

  if (e.boundary.division < 1) flag("torus division", "boundary division number must be at least 1");
  else if (e.boundary.division > 1)
    flag("boundary division", "boundary division number " + std::to_string(e.boundary.division) +
                                  " is not 1; only division-1 boundaries are classified");
  if (e.rotative.mixed()) flag("nonminimal sign conflict", "rotative layers of both signs cannot both embed");

  const DivisionTail& dt = e.division_tail;
  if (dt.kind == DivisionTail::Kind::eventually_constant) {
    if (dt.prefix.size() != dt.after)
      flag("division tail", "eventually-constant division tail lists " + std::to_string(dt.prefix.size()) +
                                " prefix values but after = " + std::to_string(dt.after));
    for (std::uint64_t v : dt.prefix)
      if (v < 1) flag("torus division", "division numbers are at least 1");
  }
  if (dt.kind != DivisionTail::Kind::strictly_increasing && dt.value < 1)
    flag("torus division", "division numbers are at least 1");

  const SlopeTarget& t = e.target;
  if (!t.is_attained() && t.equals_slope(e.boundary.slope)) {
    flag("degenerate target", "a non-attained slope at infinity equals the boundary slope");
    return out;
  }
  auto d_inf = division_at_infinity(e);
  if (!d_inf) {
    if (!t.is_attained() || !t.equals_slope(e.boundary.slope))
      flag("infinite division", "infinite division at infinity needs an attained slope equal to the boundary slope");
    if (!e.rotative.empty()) flag("infinite division", "infinite division at infinity with rotative layers");
  } else if (!t.is_attained() && *d_inf != 1) {
    flag("division at infinity", "a slope at infinity that is not attained has division number 1 at infinity, not " +
                                     std::to_string(*d_inf));
  }

  if (e.rotative.infinite) {
    if (!e.signs.prefix().empty() || e.signs.has_tail())
      flag("infinite rotativity", "infinite rotativity leaves no residual end to carry signs");
    if (!t.is_attained() || !t.equals_slope(e.boundary.slope))
      flag("infinite rotativity", "infinite rotativity needs an attained slope equal to the boundary slope");
    return out;
  }

  if (t.is_attained()) {
    if (e.signs.has_tail()) flag("finite path, infinite tail", "an attained slope at infinity ends the path, so no tail rule applies");
    try {
      GL2ZMatrix f = boundary_framing(e.boundary.slope);
      FareyPath p = farey_sequence(Slope(-1), t.transformed(f), 1);
      p.extend_to(BlockDecomposition::kDefaultMaxVertices);
      if (!p.terminated()) {
        flag("sign coverage", "path to the attained slope is longer than " +
                                  std::to_string(BlockDecomposition::kDefaultMaxVertices) + " vertices");
      } else if (!e.signs.has_tail() && e.signs.prefix().size() != p.edge_count()) {
        flag("sign coverage", "sign prefix has " + std::to_string(e.signs.prefix().size()) + " entries but the path has " +
                                  std::to_string(p.edge_count()) + " basic slices");
      }
    } catch (const Error& err) {
      flag("sign coverage", err.what());
    }
  } else if (!e.signs.has_tail()) {
    flag("sign coverage", "an infinite path needs a tail rule to cover every basic slice");
  }

  if (auto v = check_tori(e)) out.push_back(*v);
  return out;
}

EndInvariant classify(const EndDescription& e, const InvariantOptions& options) {
  auto violations = validate(e);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.invariant + ": " + v.message;
    throw Error(ErrorCode::validation, msg);
  }
  GL2ZMatrix f = boundary_framing(e.boundary.slope);
  EndInvariant inv{EndContext{e.boundary.slope, e.boundary.division, f, e.target.transformed(f)},
                   InfiniteDivision{}};
  auto d_inf = division_at_infinity(e);
  if (!d_inf) {
    inv.kind = InfiniteDivision{NestedAnnuliDescriptor{e.target.slope(), -1, -1}};
    return inv;
  }
  if (!e.rotative.empty()) {
    NonMinimallyTwisting nm;
    nm.rotativity = e.rotative.count();
    nm.sign = *e.rotative.sign();
    if (!e.rotative.infinite) {
      EndDescription rest = e;
      rest.rotative = RotativeLayers::none();
      nm.residual = std::make_shared<const EndInvariant>(classify(rest, options));
    }
    inv.kind = nm;
    return inv;
  }
  InvariantOptions o = options;
  o.division = *d_inf;
  BlockDecomposition d(farey_sequence(Slope(-1), inv.context.target, 2));
  inv.kind = MinimallyTwisting{invariant_from_signs(d, e.signs, o)};
  return inv;
}

const char* verdict_name(ExtensionVerdict::Kind k) {
  switch (k) {
    case ExtensionVerdict::Kind::no_tight_extension: return "no-tight-extension";
    case ExtensionVerdict::Kind::extends_by_construction: return "extends-by-construction";
    case ExtensionVerdict::Kind::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using VK = ExtensionVerdict::Kind;

ExtensionVerdict irrational_verdict(const IrrationalInvariant& inv, const SlopeTarget& target, std::size_t horizon) {
  BlockDecomposition d(farey_sequence(Slope(-1), target, 2));
  auto length = [&](std::size_t i) -> std::uint64_t {
    d.ensure_complete_blocks(i + 1);
    return d.blocks()[i].length();
  };
  auto explicit_all = [&](std::size_t n, bool maximal) {
    for (std::size_t i = 0; i < n; ++i)
      if (inv.f[i] != (maximal ? length(i) - 1 : 0)) return false;
    return true;
  };
  const EventualRule& e = inv.eventual;
  switch (e.kind) {
    case EventualRule::Kind::maximal:
    case EventualRule::Kind::minimal: {
      bool maximal = e.kind == EventualRule::Kind::maximal;
      if (explicit_all(std::min(e.from, inv.f.size()), maximal))
        return {VK::extends_by_construction,
                std::string("every basic slice is ") + (maximal ? "positive" : "negative") +
                    " up to shuffling, so the end embeds in a toric annulus past the slope at infinity",
                horizon};
      return {VK::unknown, "f is eventually extreme; the obstruction does not apply and no extension is constructed",
              horizon};
    }
    case EventualRule::Kind::periodic: {
      for (std::size_t i = e.from; i < e.from + e.length; ++i) {
        std::uint64_t len = length(i);
        if (inv.f[i] != 0 && inv.f[i] != len - 1)
          return {VK::no_tight_extension,
                  "f(" + std::to_string(i + 1) + ") = " + std::to_string(inv.f[i]) + " is neither 0 nor " +
                      std::to_string(len - 1) + ", and f repeats with period " + std::to_string(e.length) +
                      ", so f is neither maximal nor minimal infinitely often",
                  horizon};
      }
      std::size_t n = e.from + e.length;
      if (explicit_all(n, true) || explicit_all(n, false))
        return {VK::extends_by_construction,
                "every basic slice has the same sign up to shuffling, so the end embeds in a toric annulus past the "
                "slope at infinity",
                horizon};
      return {VK::unknown, "f is extreme on every block of the period; the obstruction does not apply", horizon};
    }
    case EventualRule::Kind::none: break;
  }
  return {VK::unknown, "f is known only on its first " + std::to_string(inv.f.size()) + " blocks", horizon};
}

}  // namespace

ExtensionVerdict extension_obstruction(const EndInvariant& inv, const InvariantOptions& options) {
  const auto* mt = std::get_if<MinimallyTwisting>(&inv.kind);
  if (!mt) throw Error(ErrorCode::invalid_argument, "extension obstructions apply to minimally twisting ends only");
  if (std::holds_alternative<AttainedInvariant>(mt->invariant))
    return {VK::extends_by_construction, "the slope at infinity is attained, so the end is a toric annulus with a torus removed",
            options.horizon};
  if (const auto* r = std::get_if<RationalNonAttainedInvariant>(&mt->invariant)) {
    const InfiniteBlock& b = r->infinite_block;
    if (b.form == InfiniteBlock::Form::alternating)
      return {VK::no_tight_extension, "the infinite block has infinitely many basic slices of each sign", options.horizon};
    if (b.m >= 1)
      return {VK::no_tight_extension,
              "the infinite block has " + std::to_string(b.m) + " basic slice(s) of one sign and infinitely many of the other",
              options.horizon};
    return {VK::extends_by_construction,
            "the infinite block has a single sign, so it extends to the attained slope", options.horizon};
  }
  return irrational_verdict(std::get<IrrationalInvariant>(mt->invariant), inv.context.target, options.horizon);
}

namespace {

// Mixed-radix digits of `index`, most significant first.
std::vector<std::uint64_t> digits(std::uint64_t index, const std::vector<std::uint64_t>& radix) {
  std::vector<std::uint64_t> out(radix.size());
  for (std::size_t i = radix.size(); i-- > 0;) {
    out[i] = index % radix[i];
    index /= radix[i];
  }
  return out;
}

EndInvariant with_minimal(const EndContext& ctx, MinimalInvariant m) { return EndInvariant{ctx, MinimallyTwisting{std::move(m)}}; }

}  // namespace

std::vector<EndInvariant> non_extendable_family(const SlopeTarget& target, std::size_t k, const FamilyOptions& options) {
  if (k > options.max_k)
    throw Error(ErrorCode::invalid_argument, "family size " + std::to_string(k) + " exceeds the cap of " +
                                                 std::to_string(options.max_k));
  std::vector<EndInvariant> out;
  if (k == 0) return out;
  const InvariantOptions& o = options.invariant;
  SlopeTarget t = target.is_attained() ? target.with_attained(false) : target;
  EndContext ctx{Slope(-1), 1, GL2ZMatrix::identity(), t};
  BlockDecomposition d(farey_sequence(Slope(-1), t, 2));

  if (t.is_rational()) {
    d.ensure_infinite_block();
    std::vector<std::uint64_t> radix;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i + 1 < d.blocks().size(); ++i) {
      radix.push_back(d.blocks()[i].length());
      combos = combos > k ? combos : combos * radix.back();
    }
    for (std::uint64_t j = 0; j < combos && out.size() < k; ++j)
      out.push_back(with_minimal(ctx, RationalNonAttainedInvariant{digits(j, radix), InfiniteBlock::alternating()}));
    std::vector<std::uint64_t> zeros(radix.size(), 0);
    for (std::uint64_t m = 1; out.size() < k; ++m)
      out.push_back(with_minimal(ctx, RationalNonAttainedInvariant{zeros, InfiniteBlock::positive(m)}));
  } else {
    auto bp = find_block_period(d, o.period_search);
    if (!bp)
      throw Error(ErrorCode::insufficient_blocks, "no repeating block structure found within " +
                                                      std::to_string(o.period_search) + " blocks");
    d.ensure_complete_blocks(bp->from + bp->length);
    bool has_long = false;
    for (std::size_t i = bp->from; i < bp->from + bp->length; ++i) has_long |= d.blocks()[i].length() >= 3;
    if (!has_long)
      throw Error(ErrorCode::insufficient_blocks,
                  "every periodic block has length 2, so f is always maximal or minimal there");
    std::vector<std::uint64_t> radix;
    std::uint64_t combos = 1;
    while (combos < k) {
      if (radix.size() >= o.horizon)
        throw Error(ErrorCode::insufficient_blocks, "the first " + std::to_string(o.horizon) + " blocks distinguish only " +
                                                        std::to_string(combos) + " invariants");
      d.ensure_complete_blocks(radix.size() + 1);
      radix.push_back(d.blocks()[radix.size()].length());
      combos *= radix.back();
    }
    std::size_t from = std::max(radix.size(), bp->from);
    std::size_t n = from + bp->length;
    d.ensure_complete_blocks(n);
    for (std::uint64_t j = 0; j < k; ++j) {
      IrrationalInvariant inv;
      inv.f = digits(j, radix);
      for (std::size_t i = radix.size(); i < n; ++i) inv.f.push_back(d.blocks()[i].length() >= 3 ? 1 : 0);
      inv.eventual = {EventualRule::Kind::periodic, from, bp->length};
      out.push_back(with_minimal(ctx, std::move(inv)));
    }
  }
  for (const EndInvariant& inv : out) {
    ExtensionVerdict v = extension_obstruction(inv, o);
    if (v.kind != VK::no_tight_extension)
      throw Error(ErrorCode::insufficient_blocks, "family member is not certified: " + v.reason);
  }
  return out;
}

}  // namespace toric
