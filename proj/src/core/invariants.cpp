#include "toricends/invariants.hpp"

#include "toricends/error.hpp"

#include <limits>
#include <numeric>

namespace toric {

std::optional<InfiniteBlock> InfiniteBlock::from_counts(ExtCount plus, ExtCount minus) {
  if (plus.is_infinite() && minus.is_infinite()) return alternating();
  if (minus.is_infinite()) return positive(*plus.value);
  if (plus.is_infinite()) return negative(*minus.value);
  return std::nullopt;
}

std::pair<ExtCount, ExtCount> InfiniteBlock::counts() const {
  switch (form) {
    case Form::positive_finite: return {ExtCount::finite(m), ExtCount::infinite()};
    case Form::negative_finite: return {ExtCount::infinite(), ExtCount::finite(m)};
    case Form::alternating: return {ExtCount::infinite(), ExtCount::infinite()};
  }
  return {};
}

std::optional<std::uint64_t> IrrationalInvariant::value_at(
    std::size_t i, const std::function<std::uint64_t(std::size_t)>& length) const {
  if (i < f.size()) return f[i];
  switch (eventual.kind) {
    case EventualRule::Kind::none: return std::nullopt;
    case EventualRule::Kind::maximal: return length(i) - 1;
    case EventualRule::Kind::minimal: return 0;
    case EventualRule::Kind::periodic: {
      std::size_t j = eventual.from + (i - eventual.from) % eventual.length;
      if (j >= f.size()) return std::nullopt;
      return f[j];
    }
  }
  return std::nullopt;
}

bool operator==(const NonMinimallyTwisting& x, const NonMinimallyTwisting& y) {
  if (x.rotativity != y.rotativity || x.sign != y.sign) return false;
  if (!x.residual || !y.residual) return !x.residual && !y.residual;
  return *x.residual == *y.residual;
}

bool operator==(const EndInvariant& x, const EndInvariant& y) { return x.context == y.context && x.kind == y.kind; }

namespace {

std::uint64_t positives_in(const Block& b, const SignData& signs) {
  std::uint64_t n = 0;
  for (std::size_t i = b.start; i < b.end; ++i) n += signs.at(i) == Sign::plus ? 1 : 0;
  return n;
}

std::function<std::uint64_t(std::size_t)> length_provider(BlockDecomposition& d) {
  return [&d](std::size_t i) -> std::uint64_t {
    d.ensure_complete_blocks(i + 1);
    if (i >= d.blocks().size()) throw Error(ErrorCode::insufficient_blocks, "block " + std::to_string(i) + " does not exist");
    return d.blocks()[i].length();
  };
}

// First block index >= from_block whose slices all lie at or after slice `slice`.
std::size_t first_block_from_slice(BlockDecomposition& d, std::size_t from_block, std::size_t slice) {
  std::size_t i = from_block;
  for (;; ++i) {
    d.ensure_complete_blocks(i + 1);
    if (d.blocks()[i].start >= slice) return i;
  }
}

IrrationalInvariant irrational_invariant(BlockDecomposition& d, const SignData& signs, const InvariantOptions& o) {
  IrrationalInvariant inv;
  std::size_t needed = o.horizon;
  if (auto c = signs.eventual_constant()) {
    std::size_t i0 = first_block_from_slice(d, 0, signs.periodic_from());
    inv.eventual = {*c == Sign::plus ? EventualRule::Kind::maximal : EventualRule::Kind::minimal, i0, 0};
    needed = std::max(needed, i0);
  } else if (auto bp = find_block_period(d, o.period_search)) {
    std::size_t p = signs.period();
    std::size_t block_period = bp->length * (p / std::gcd(bp->slices, p));
    std::size_t i0 = first_block_from_slice(d, bp->from, signs.periodic_from());
    inv.eventual = {EventualRule::Kind::periodic, i0, block_period};
    needed = std::max(needed, i0 + block_period);
  }
  d.ensure_complete_blocks(needed);
  for (std::size_t i = 0; i < needed; ++i) inv.f.push_back(positives_in(d.blocks()[i], signs));
  return inv;
}

}  // namespace

MinimalInvariant invariant_from_signs(BlockDecomposition& d, const SignData& signs, const InvariantOptions& o) {
  const SlopeTarget& t = d.target();
  if (t.is_attained()) {
    if (signs.has_tail()) throw Error(ErrorCode::illegal_tail, "a path ending at an attained target takes no tail rule");
    d.ensure_complete_blocks(std::numeric_limits<std::size_t>::max());
    if (signs.prefix().size() != d.path().edge_count())
      throw Error(ErrorCode::coverage_mismatch, "sign prefix has " + std::to_string(signs.prefix().size()) +
                                                    " entries but the path has " + std::to_string(d.path().edge_count()) +
                                                    " basic slices");
    if (o.division < 1) throw Error(ErrorCode::invalid_argument, "division number must be at least 1");
    AttainedInvariant a;
    for (const Block& b : d.blocks()) a.f.push_back(positives_in(b, signs));
    a.d = o.division;
    return a;
  }
  if (!signs.has_tail())
    throw Error(ErrorCode::coverage_mismatch, "an infinite path needs a tail rule to cover every basic slice");
  if (t.is_rational()) {
    d.ensure_infinite_block();
    RationalNonAttainedInvariant r;
    const auto& blocks = d.blocks();
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) r.finite_f.push_back(positives_in(blocks[i], signs));
    std::size_t from = blocks.back().start;
    auto normal = InfiniteBlock::from_counts(signs.count_from(Sign::plus, from), signs.count_from(Sign::minus, from));
    if (!normal) throw Error(ErrorCode::illegal_tail, "tail rule leaves the infinite block with finitely many slices");
    r.infinite_block = *normal;
    return r;
  }
  return irrational_invariant(d, signs, o);
}

const char* equivalence_name(Equivalence e) {
  switch (e) {
    case Equivalence::distinct: return "false";
    case Equivalence::equivalent: return "true";
    case Equivalence::undecided: return "unknown";
  }
  return "unknown";
}

namespace {

Equivalence compare_irrational(const IrrationalInvariant& a, const IrrationalInvariant& b, BlockDecomposition& d,
                               const InvariantOptions& o) {
  using K = EventualRule::Kind;
  auto length = length_provider(d);
  const auto& ea = a.eventual;
  const auto& eb = b.eventual;
  bool exact = ea.kind != K::none && eb.kind != K::none;
  std::size_t window = std::min(a.f.size(), b.f.size());
  if (exact) {
    std::size_t from = std::max(ea.from, eb.from);
    if ((ea.kind == K::maximal && eb.kind == K::minimal) || (ea.kind == K::minimal && eb.kind == K::maximal)) {
      // Every block has a slice, so maximal and minimal differ from `from` on.
      return Equivalence::distinct;
    }
    if (ea.kind == K::periodic && eb.kind == K::periodic) {
      window = from + std::lcm(ea.length, eb.length);
    } else if (ea.kind == K::periodic || eb.kind == K::periodic) {
      std::size_t period = ea.kind == K::periodic ? ea.length : eb.length;
      auto bp = find_block_period(d, o.period_search);
      if (!bp) {
        exact = false;
        window = from + period;
      } else {
        from = std::max(from, bp->from);
        window = from + std::lcm(period, bp->length);
      }
    } else {
      window = std::max(window, from);
    }
  }
  for (std::size_t i = 0; i < window; ++i) {
    auto x = a.value_at(i, length);
    auto y = b.value_at(i, length);
    if (!x || !y) return Equivalence::undecided;
    if (*x != *y) return Equivalence::distinct;
  }
  return exact ? Equivalence::equivalent : Equivalence::undecided;
}

}  // namespace

Equivalence equivalent(const EndInvariant& a, const EndInvariant& b, const InvariantOptions& o) {
  if (!(a.context == b.context))
    throw Error(ErrorCode::incomparable_targets, "invariants classify ends with different boundary data or targets");
  if (a.kind.index() != b.kind.index()) return Equivalence::distinct;
  if (std::holds_alternative<InfiniteDivision>(a.kind)) return Equivalence::undecided;
  if (auto* x = std::get_if<NonMinimallyTwisting>(&a.kind)) {
    const auto& y = std::get<NonMinimallyTwisting>(b.kind);
    if (x->rotativity != y.rotativity || x->sign != y.sign) return Equivalence::distinct;
    if (!x->residual || !y.residual)
      return (!x->residual && !y.residual) ? Equivalence::equivalent : Equivalence::distinct;
    return equivalent(*x->residual, *y.residual, o);
  }
  const auto& x = std::get<MinimallyTwisting>(a.kind).invariant;
  const auto& y = std::get<MinimallyTwisting>(b.kind).invariant;
  if (x.index() != y.index()) return Equivalence::distinct;
  if (auto* ix = std::get_if<IrrationalInvariant>(&x)) {
    BlockDecomposition d(farey_sequence(Slope(-1), a.context.target, 2));
    return compare_irrational(*ix, std::get<IrrationalInvariant>(y), d, o);
  }
  return x == y ? Equivalence::equivalent : Equivalence::distinct;
}

bool admissible(const MinimalInvariant& invariant, BlockDecomposition& d) {
  const SlopeTarget& t = d.target();
  if (auto* irr = std::get_if<IrrationalInvariant>(&invariant)) {
    if (!t.is_irrational()) return false;
    const auto& e = irr->eventual;
    if (e.kind == EventualRule::Kind::periodic && (e.length == 0 || irr->f.size() < e.from + e.length)) return false;
    if ((e.kind == EventualRule::Kind::maximal || e.kind == EventualRule::Kind::minimal) && irr->f.size() < e.from)
      return false;
    d.ensure_complete_blocks(irr->f.size());
    for (std::size_t i = 0; i < irr->f.size(); ++i)
      if (irr->f[i] > d.blocks()[i].length() - 1) return false;
    return true;
  }
  if (auto* rat = std::get_if<RationalNonAttainedInvariant>(&invariant)) {
    if (!t.is_rational() || t.is_attained()) return false;
    d.ensure_infinite_block();
    if (rat->finite_f.size() + 1 != d.blocks().size()) return false;
    for (std::size_t i = 0; i < rat->finite_f.size(); ++i)
      if (rat->finite_f[i] > d.blocks()[i].length() - 1) return false;
    return true;
  }
  const auto& att = std::get<AttainedInvariant>(invariant);
  if (!t.is_attained() || att.d < 1) return false;
  d.ensure_complete_blocks(std::numeric_limits<std::size_t>::max());
  if (att.f.size() != d.blocks().size()) return false;
  for (std::size_t i = 0; i < att.f.size(); ++i)
    if (att.f[i] > d.blocks()[i].length() - 1) return false;
  return true;
}

bool admissible(const RawRationalFunction& f, BlockDecomposition& d) {
  const SlopeTarget& t = d.target();
  if (!t.is_rational() || t.is_attained()) return false;
  d.ensure_infinite_block();
  const auto& blocks = d.blocks();
  if (f.size() != blocks.size()) return false;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const auto& [plus, minus] = f[i];
    if (plus.is_infinite() || minus.is_infinite()) return false;
    if (*plus.value + *minus.value != blocks[i].length() - 1) return false;
  }
  return f.back().first.is_infinite() || f.back().second.is_infinite();
}

BigInt count_invariants(const std::vector<std::size_t>& lengths) {
  if (lengths.empty()) throw Error(ErrorCode::invalid_argument, "count_invariants needs at least one block");
  BigInt n = 1;
  for (std::size_t len : lengths) {
    if (len < 1) throw Error(ErrorCode::invalid_argument, "block lengths are at least 1");
    n *= static_cast<unsigned long long>(len);
  }
  return n;
}

BigInt count_invariants(BlockDecomposition& d, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "count_invariants needs k >= 1");
  d.ensure_complete_blocks(k);
  if (d.blocks().size() < k || !d.blocks()[k - 1].complete)
    throw Error(ErrorCode::infinite_block, "fewer than " + std::to_string(k) + " finite blocks");
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < k; ++i) lengths.push_back(d.blocks()[i].length());
  return count_invariants(lengths);
}

EulerClass euler_class(BlockDecomposition& d, const SignData& signs, std::size_t horizon) {
  std::size_t slices;
  if (d.path().infinite()) {
    d.extend_path_to(horizon + 1);
    slices = horizon;
  } else {
    d.ensure_complete_blocks(std::numeric_limits<std::size_t>::max());
    slices = d.path().edge_count();
    if (!signs.has_tail() && signs.prefix().size() != slices)
      throw Error(ErrorCode::coverage_mismatch, "sign prefix does not match the path's " + std::to_string(slices) +
                                                    " basic slices");
  }
  const auto& v = d.path().vertices();
  EulerClass e{0, 0};
  if (slices == 0) return e;
  // Lifts (q, p) with q0 * p1 - p0 * q1 = -1 on every slice, the value on
  // the clockwise edge (-1, -2). Inside a block the steps are then equal.
  BigInt x0 = v[0].den(), y0 = v[0].num();
  for (std::size_t i = 0; i < slices; ++i) {
    BigInt x1 = v[i + 1].den(), y1 = v[i + 1].num();
    if (x0 * y1 - y0 * x1 != -1) {
      x1 = -x1;
      y1 = -y1;
    }
    int s = signs.at(i) == Sign::plus ? 1 : -1;
    e.x += s * (x1 - x0);
    e.y += s * (y1 - y0);
    x0 = x1;
    y0 = y1;
  }
  return e;
}

}  // namespace toric
