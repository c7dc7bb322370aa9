// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// nonzero when any criterion fails.
//
// usage: acceptance <cli-binary> <job-corpus.json>

#include "helpers.hpp"

#include "toricends/error.hpp"
#include "toricends/jobs.hpp"
#include "toricends/reduce.hpp"
#include "toricends/schema.hpp"
#include "toricends/toricends.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

using namespace toric;
using namespace testing_support;
using schema::json;
using oracle::Frac;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimit1 = 60, kLimit2 = 10, kLimit3 = 300, kLimit4 = 10, kLimit5 = 120, kLimit6 = 10, kLimit7 = 30,
                 kLimit8 = 10, kLimit9 = 30, kLimit10 = 10;

constexpr long long kMaxDen = 1000;   // criterion 1 search bound
constexpr long long kMatrixBound = 50;  // criterion 3 witness search
constexpr long long kUnitBound = 1000000;  // criterion 9 1/n enumeration

struct Report {
  std::vector<std::string> failures;
  void check(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

std::mt19937_64 rng(20261014);

long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

Frac random_frac(long long max_num, long long max_den) {
  for (;;) {
    long long q = uniform(1, max_den), p = uniform(-max_num, max_num);
    Frac f = oracle::frac(p, q);
    if (f.q == q) return f;
  }
}

const std::vector<SlopeTarget>& surds() {
  // -sqrt2, -sqrt3, (1+sqrt5)/2, -(1+sqrt5)/2, sqrt7-3, (-3+sqrt13)/2,
  // sqrt2/2, -sqrt6, (5-sqrt11)/3, sqrt3+1
  static const std::vector<SlopeTarget> s = {surd(0, -1, 1, 2),  surd(0, -1, 1, 3), surd(1, 1, 2, 5),  surd(-1, -1, 2, 5),
                                             surd(-3, 1, 1, 7),  surd(-3, 1, 2, 13), surd(0, 1, 2, 2),  surd(0, -1, 1, 6),
                                             surd(5, -1, 3, 11), surd(1, 1, 1, 3)};
  return s;
}

SlopeTarget random_rational_target(bool attained) {
  if (uniform(0, 9) == 0) return SlopeTarget::rational(Slope::infinity(), attained);
  return SlopeTarget::rational(to_slope(random_frac(40, 25)), attained);
}

std::string str(const Frac& f) { return to_slope(f).str(); }

std::vector<Frac> fracs(const FareyPath& p) {
  std::vector<Frac> out;
  for (const Slope& s : p.vertices()) out.push_back(to_frac(s));
  return out;
}

EndDescription end(const Slope& boundary, SlopeTarget t, SignData s) {
  EndDescription e;
  e.boundary = {boundary, 1};
  e.target = std::move(t);
  e.signs = std::move(s);
  return e;
}

std::string dump(const EndInvariant& inv) { return schema::write_invariant(inv).dump(); }

const MinimalInvariant& minimal_of(const EndInvariant& inv) { return std::get<MinimallyTwisting>(inv.kind).invariant; }

// ---------------------------------------------------------------------------

void criterion1(Report& r) {
  int pairs = 0;
  for (int i = 0; i < 200; ++i) {
    SlopeTarget t = i < 100 ? surds()[static_cast<std::size_t>(i % 10)] : random_rational_target(i % 2 == 0);
    Frac cur = uniform(0, 14) == 0 ? oracle::infinity() : random_frac(60, 30);
    if (t.is_rational() && to_frac(t.slope()) == cur) {
      --i;
      continue;
    }
    Slope got = next_toward(to_slope(cur), t);
    auto want = oracle::brute_next(cur, to_oracle(t), kMaxDen);
    ++pairs;
    r.check(want.has_value() && to_frac(got) == *want,
            "next_toward(" + str(cur) + ", " + t.describe() + ") = " + got.str() + ", search gives " +
                (want ? str(*want) : std::string("none")));
  }
  r.check(pairs == 200, "pair count");
}

std::vector<std::pair<FareyPath, SlopeTarget>> criterion2_paths() {
  std::mt19937_64 local(77);
  std::swap(rng, local);
  std::vector<std::pair<FareyPath, SlopeTarget>> out;
  while (out.size() < 50) {
    std::size_t i = out.size();
    SlopeTarget t = i % 3 == 0 ? surds()[i / 3 % 10] : random_rational_target(i % 3 == 1);
    Frac start = uniform(0, 9) == 0 ? oracle::infinity() : random_frac(20, 12);
    if (t.is_rational() && to_frac(t.slope()) == start) continue;
    out.emplace_back(farey_sequence(to_slope(start), t, 32), t);
  }
  std::swap(rng, local);
  return out;
}

void criterion2(Report& r) {
  for (const auto& [path, t] : criterion2_paths()) {
    auto v = fracs(path);
    auto ot = to_oracle(t);
    const Frac& from = v.front();
    std::string name = str(from) + " -> " + t.describe();
    r.check(v.size() == 32 || (t.is_attained() && to_frac(t.slope()) == v.back()), name + ": short path");
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      r.check(oracle::is_edge(v[i], v[i + 1]), name + ": not an edge at " + std::to_string(i));
      r.check(oracle::cmp_key(oracle::key_of(from, v[i]), oracle::key_of(from, v[i + 1])) < 0,
              name + ": not clockwise at " + std::to_string(i));
    }
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 2; j < v.size(); ++j)
        r.check(!oracle::is_edge(v[i], v[j]), name + ": chord " + std::to_string(i) + "-" + std::to_string(j));
    for (std::size_t i = 1; i < v.size(); ++i) {
      r.check(oracle::on_arc(from, v[i], ot), name + ": vertex off the arc");
      if (t.is_rational() && !t.is_attained())
        r.check(!(v[i] == to_frac(t.slope())), name + ": reached a non-attained target");
    }
  }
}

bool witness_maps(const GL2ZMatrix& w, const std::vector<Frac>& run) {
  for (std::size_t i = 0; i < run.size(); ++i) {
    oracle::Int p = w.a() * run[i].p + w.b() * run[i].q;
    oracle::Int q = w.c() * run[i].p + w.d() * run[i].q;
    if (q == 0 || p != -oracle::Int(i + 1) * q) return false;
  }
  return true;
}

void criterion3(Report& r) {
  const auto all = oracle::sl2_matrices(kMatrixBound);
  std::size_t blocks = 0;
  for (const auto& [path, t] : criterion2_paths()) {
    BlockDecomposition d(path);
    auto v = fracs(d.path());
    for (const Block& b : d.blocks()) {
      std::size_t last = std::min(b.end, v.size() - 1);
      std::vector<Frac> run(v.begin() + static_cast<std::ptrdiff_t>(b.start), v.begin() + static_cast<std::ptrdiff_t>(last) + 1);
      std::string name = str(v.front()) + " -> " + t.describe() + " block at " + std::to_string(b.start);
      r.check(witness_maps(b.witness, run), name + ": witness does not map the block onto -1..-m");
      if (b.complete && !b.infinite && b.end + 1 < v.size()) {
        run.push_back(v[b.end + 1]);
        r.check(oracle::witnesses(all, run).empty(), name + ": the block extends by one vertex");
        ++blocks;
      }
    }
  }
  r.check(blocks > 100, "too few complete blocks checked: " + std::to_string(blocks));
}

void criterion4(Report& r) {
  const SlopeTarget& t = minus_sqrt2();
  auto p = farey_sequence(S("-1"), t, 4);
  std::vector<Frac> expected = {oracle::frac(-1), oracle::frac(-4, 3), oracle::frac(-7, 5), oracle::frac(-24, 17)};
  r.check(fracs(p) == expected, "library prefix");
  // Oracle 1: exhaustive neighbour search reproduces the prefix.
  std::vector<Frac> brute{oracle::frac(-1)};
  while (brute.size() < 4) {
    auto n = oracle::brute_next(brute.back(), to_oracle(t), kMaxDen);
    if (!n) break;
    brute.push_back(*n);
  }
  r.check(brute == expected, "brute-force prefix");
  // Oracle 2: bounded matrix search finds exactly +-[[1,2],[-2,-3]] for the
  // first three vertices and nothing once the fourth is added.
  auto all = oracle::sl2_matrices(kMatrixBound);
  auto w = oracle::witnesses(all, {expected[0], expected[1], expected[2]});
  bool exact = w.size() == 2;
  for (const auto& m : w) exact &= (m.a == 1 && m.b == 2 && m.c == -2 && m.d == -3) || (m.a == -1 && m.b == -2 && m.c == 2 && m.d == 3);
  r.check(exact, "matrix search witnesses");
  r.check(oracle::witnesses(all, expected).empty(), "four-vertex run has a witness");
  BlockDecomposition d(p);
  d.ensure_complete_blocks(1);
  const Block& b = d.blocks().front();
  r.check(b.start == 0 && b.end == 2 && b.length() == 3, "first block span");
  r.check(b.witness == GL2ZMatrix(1, 2, -2, -3), "first block witness " + schema::write_matrix(b.witness).dump());
}

/// Attained targets from -1, keyed by the list of block lengths.
const std::map<std::vector<std::size_t>, SlopeTarget>& small_decompositions() {
  static std::map<std::vector<std::size_t>, SlopeTarget> out;
  if (!out.empty()) return out;
  for (long long q = 1; q <= 300; ++q)
    for (long long p = -3 * q; p <= 3 * q; ++p) {
      Frac f = oracle::frac(p, q);
      if (f.q != q || (p == -1 && q == 1)) continue;
      SlopeTarget t = SlopeTarget::rational(to_slope(f), true);
      FareyPath path = farey_sequence(S("-1"), t, 20);
      if (!path.terminated()) continue;
      BlockDecomposition d(path);
      if (d.blocks().size() > 4) continue;
      std::vector<std::size_t> lengths;
      bool small = true;
      for (const Block& b : d.blocks()) {
        lengths.push_back(b.length());
        small &= b.length() <= 4;
      }
      if (small) out.emplace(lengths, t);
    }
  return out;
}

std::vector<int> block_of_slices(const std::vector<std::size_t>& lengths) {
  std::vector<int> out;
  for (std::size_t b = 0; b < lengths.size(); ++b)
    for (std::size_t k = 1; k < lengths[b]; ++k) out.push_back(static_cast<int>(b));
  return out;
}

void criterion5(Report& r) {
  auto decomps = small_decompositions();
  r.check(decomps.size() == 3 + 9 + 27 + 81, "length patterns found: " + std::to_string(decomps.size()) + " of 120");
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> l(k, 2);
    for (;;) {
      if (!decomps.count(l)) {
        std::string t;
        for (auto x : l) t += std::to_string(x);
        r.check(false, "missing " + t);
      }
      std::size_t i = 0;
      while (i < k && l[i] == 4) l[i++] = 2;
      if (i == k) break;
      ++l[i];
    }
  }
  for (const auto& [lengths, t] : decomps) {
    auto block_of = block_of_slices(lengths);
    auto orbit = oracle::shuffle_orbits(block_of);
    std::size_t n = block_of.size();
    std::map<int, std::string> by_orbit;
    std::set<std::string> distinct;
    bool constant = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::string inv = dump(classify(end(S("-1"), t, SignData::finite(signs_from_mask(mask, n)))));
      auto [it, fresh] = by_orbit.emplace(orbit[mask], inv);
      constant &= fresh || it->second == inv;
      distinct.insert(inv);
    }
    BigInt product = count_invariants(lengths);
    std::string name = t.describe();
    r.check(constant, name + ": classification differs within a shuffle orbit");
    r.check(static_cast<int>(distinct.size()) == oracle::orbit_count(orbit), name + ": orbits and invariants differ in number");
    r.check(BigInt(distinct.size()) == product, name + ": invariant count is not the product of block lengths");
  }
}

void criterion6(Report& r) {
  // -5/2: the first block (-1, -2) owns slice 0, the infinite block starts at slice 1.
  struct Case {
    SlopeTarget target;
    std::size_t offset;
  };
  for (const Case& c : {Case{rational("inf", false), 0}, Case{rational("-5/2", false), 1}}) {
    BlockDecomposition d(farey_sequence(S("-1"), c.target, 2));
    d.ensure_infinite_block();
    r.check(d.blocks().back().start == c.offset, c.target.describe() + ": infinite block start");
    auto get = [&](const SignData& s) {
      return std::get<RationalNonAttainedInvariant>(minimal_of(classify(end(S("-1"), c.target, s)))).infinite_block;
    };
    std::vector<Sign> lead = signs_from(c.offset ? "+" : "");
    // Both signs infinitely often.
    std::vector<SignData> both = {SignData(lead, TailRule::alternating())};
    for (std::size_t len = 2; len <= 4; ++len)
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << len); ++mask)
        for (std::size_t pre = 0; pre < 8; ++pre) {
          auto prefix = lead;
          for (Sign s : signs_from_mask(pre, 3)) prefix.push_back(s);
          both.emplace_back(prefix, TailRule::periodic(signs_from_mask(mask, len)));
        }
    for (const auto& s : both) r.check(get(s) == InfiniteBlock::alternating(), c.target.describe() + ": expected alternating");
    // (m, inf) and (inf, m) in several arrangements.
    for (std::uint64_t m = 0; m <= 8; ++m)
      for (std::size_t extra = 0; extra <= 3; ++extra) {
        auto prefix = lead;
        for (std::size_t k = 0; k < extra; ++k) prefix.push_back(Sign::minus);
        for (std::uint64_t k = 0; k < m; ++k) prefix.push_back(Sign::plus);
        r.check(get(SignData(prefix, TailRule::all(Sign::minus))) == InfiniteBlock::positive(m),
                c.target.describe() + ": expected pos " + std::to_string(m));
        auto neg_prefix = lead;
        for (std::uint64_t k = 0; k < m; ++k) neg_prefix.push_back(Sign::minus);
        r.check(get(SignData(neg_prefix, TailRule::eventually(Sign::plus, extra))) == InfiniteBlock::negative(m + extra),
                c.target.describe() + ": expected neg " + std::to_string(m + extra));
      }
  }
}

void criterion7(Report& r) {
  using VK = ExtensionVerdict::Kind;
  auto verdict = [](const SlopeTarget& t, const SignData& s) {
    return extension_obstruction(classify(end(S("-1"), t, s)), {32}).kind;
  };
  for (const auto& t : {rational("inf", false), rational("-5/2", false)}) {
    std::vector<Sign> lead = signs_from(t.slope() == S("inf") ? "" : "-");
    r.check(verdict(t, SignData(lead, TailRule::alternating())) == VK::no_tight_extension, t.describe() + ": alternating");
    for (std::uint64_t m = 1; m <= 8; ++m) {
      auto p = lead, n = lead;
      for (std::uint64_t k = 0; k < m; ++k) {
        p.push_back(Sign::plus);
        n.push_back(Sign::minus);
      }
      r.check(verdict(t, SignData(p, TailRule::all(Sign::minus))) == VK::no_tight_extension, t.describe() + ": pos m");
      r.check(verdict(t, SignData(n, TailRule::all(Sign::plus))) == VK::no_tight_extension, t.describe() + ": neg m");
    }
    r.check(verdict(t, SignData({}, TailRule::all(Sign::plus))) == VK::extends_by_construction, t.describe() + ": all +");
    r.check(verdict(t, SignData({}, TailRule::all(Sign::minus))) == VK::extends_by_construction, t.describe() + ": all -");
  }
  // -sqrt2: every block has two slices. A periodic pattern puts mixed signs
  // in a block infinitely often iff some aligned pair in its period differs.
  const SlopeTarget& t = minus_sqrt2();
  for (std::size_t len = 2; len <= 6; ++len)
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << len); ++mask) {
      auto pat = signs_from_mask(mask, len);
      bool mixed = false;
      for (std::size_t k = 0; k < 2 * len; k += 2) mixed |= pat[k % len] != pat[(k + 1) % len];
      if (mixed)
        r.check(verdict(t, SignData({}, TailRule::periodic(pat))) == VK::no_tight_extension, "-sqrt2 periodic mixed");
    }
  r.check(verdict(t, SignData({}, TailRule::all(Sign::plus))) == VK::extends_by_construction, "-sqrt2 all +");
  r.check(verdict(t, SignData({}, TailRule::all(Sign::minus))) == VK::extends_by_construction, "-sqrt2 all -");
  r.check(verdict(rational("-7/3", true), SignData::finite(signs_from("+-"))) == VK::extends_by_construction, "attained");

  for (const auto& target : {rational("inf", false), minus_sqrt2()}) {
    auto fam = non_extendable_family(target, 10);
    r.check(fam.size() == 10, target.describe() + ": family size");
    BlockDecomposition d(farey_sequence(S("-1"), target, 2));
    for (std::size_t i = 0; i < fam.size(); ++i) {
      r.check(extension_obstruction(fam[i]).kind == VK::no_tight_extension, target.describe() + ": uncertified member");
      r.check(admissible(minimal_of(fam[i]), d), target.describe() + ": inadmissible member");
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        r.check(equivalent(fam[i], fam[j]) == Equivalence::distinct, target.describe() + ": equivalent members");
    }
  }
}

std::vector<int> ints(const std::vector<Sign>& s) {
  std::vector<int> out;
  for (Sign x : s) out.push_back(static_cast<int>(x));
  return out;
}

void criterion8(Report& r) {
  std::vector<SlopeTarget> fixtures;
  for (int m = 2; m <= 6; ++m) fixtures.push_back(rational(std::to_string(-m).c_str(), true));  // one block, m - 1 slices
  for (const auto& [lengths, t] : small_decompositions())
    if (block_of_slices(lengths).size() <= 10) fixtures.push_back(t);
  bool sensitive = false;
  for (const auto& t : fixtures) {
    BlockDecomposition d(farey_sequence(S("-1"), t, 2));
    d.ensure_complete_blocks(100);
    auto v = fracs(d.path());
    std::vector<std::size_t> lengths;
    for (const Block& b : d.blocks()) lengths.push_back(b.length());
    auto block_of = block_of_slices(lengths);
    auto orbit = oracle::shuffle_orbits(block_of);
    std::size_t n = block_of.size();
    std::map<int, EulerClass> by_orbit;
    std::map<std::size_t, EulerClass> by_mask;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      auto signs = signs_from_mask(mask, n);
      EulerClass e = euler_class(d, SignData::finite(signs), 64);
      auto o = oracle::euler(v, ints(signs));
      r.check(e.x == o.first && e.y == o.second, t.describe() + ": Euler class differs from the direct sum");
      auto [it, fresh] = by_orbit.emplace(orbit[mask], e);
      r.check(fresh || it->second == e, t.describe() + ": Euler class changes under a shuffle");
      EulerClass neg = euler_class(d, SignData::finite(signs).negated(), 64);
      r.check(neg.x == -e.x && neg.y == -e.y, t.describe() + ": negation is not antisymmetric");
      by_mask.emplace(mask, e);
    }
    // Swap the two slices on either side of each block boundary.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (block_of[i] == block_of[i + 1]) continue;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if ((mask >> i & 1) == (mask >> (i + 1) & 1)) continue;
        std::size_t moved = mask ^ (std::size_t{1} << i) ^ (std::size_t{1} << (i + 1));
        sensitive |= !(by_mask.at(mask) == by_mask.at(moved));
      }
    }
  }
  r.check(sensitive, "no fixture distinguishes a sign moved across a block boundary");
}

RotativeLayers random_layers(Sign s) {
  switch (uniform(0, 5)) {
    case 0: return RotativeLayers::none();
    case 1: return RotativeLayers::infinitely_many(s);
    default: return RotativeLayers::finite(static_cast<std::size_t>(uniform(1, 6)), s);
  }
}

std::optional<std::uint64_t> total(const OpenToricAnnulus& a) {
  auto p = a.plus.rotative.count(), m = a.minus.rotative.count();
  if (!p || !m) return std::nullopt;
  return *p + *m;
}

void criterion9(Report& r) {
  const std::vector<Slope> middles = {S("-1"), S("0"), S("2/3"), S("-5/2"), S("inf")};
  for (int i = 0; i < 100; ++i) {
    Sign s = uniform(0, 1) ? Sign::plus : Sign::minus;
    Slope mid = middles[static_cast<std::size_t>(uniform(0, 4))];
    OpenToricAnnulus a;
    a.middle = {mid, 1};
    a.plus = end(mid, SlopeTarget::rational(mid, true), SignData::finite({}));
    a.minus = end(minus_side_reflection().apply(mid), SlopeTarget::rational(minus_side_reflection().apply(mid), true),
                  SignData::finite({}));
    a.plus.rotative = random_layers(s);
    a.minus.rotative = random_layers(s);
    OpenToricAnnulus once = normalize_rotativity(a);
    OpenToricAnnulus twice = normalize_rotativity(once);
    r.check(once == twice, "normalize_rotativity is not idempotent");
    r.check(total(a) == total(once), "total rotativity changed");
    r.check(once.minus.rotative.empty(), "minus side keeps rotative layers");
    if (!a.plus.rotative.empty() || !a.minus.rotative.empty()) r.check(once.plus.rotative.sign() == s, "sign changed");
  }

  std::vector<SlopeTarget> targets = {minus_sqrt2(), surd(0, -1, 1, 3), rational("-3/2", false), rational("-3/2", true),
                                      rational("-1000001/1000000", false), rational("-1999999/1000000", true)};
  for (int i = 0; i < 4; ++i) {
    long long q = uniform(2, 500), p = -uniform(q + 1, 2 * q - 1);
    targets.push_back(SlopeTarget::rational(Slope(BigInt(p), BigInt(q)), i % 2 == 0));
  }
  for (const auto& t : targets) {
    SignData signs;
    if (t.is_attained()) {
      FareyPath p = farey_sequence(S("-1"), t, BlockDecomposition::kDefaultMaxVertices);
      signs = SignData::finite(std::vector<Sign>(p.edge_count(), Sign::plus));
    } else {
      signs = SignData({}, TailRule::alternating());
    }
    SolidTorusEnd st = solid_torus_factor(end(S("-1"), t, signs));
    auto want = oracle::last_unit_fraction(oracle::frac(-1), to_oracle(t), kUnitBound);
    r.check(st.realized_start == S("-1"), t.describe() + ": s(r) = " + st.realized_start.str());
    r.check(want && *want == oracle::frac(-1), t.describe() + ": enumeration disagrees");
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, std::string> run_cli(const std::string& cli, const std::string& command, const std::string& input,
                                    std::optional<std::size_t> horizon) {
  auto dir = std::filesystem::temp_directory_path();
  auto in = dir / ("toricends_acc_in_" + std::to_string(::getpid()) + ".json");
  auto out = dir / ("toricends_acc_out_" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream f(in, std::ios::binary);
    f << input;
  }
  std::string cmd = "'" + cli + "' " + command + " --format structured --input '" + in.string() + "' --output '" +
                    out.string() + "'";
  if (horizon) cmd += " --horizon " + std::to_string(*horizon);
  cmd += " 2>/dev/null";
  std::filesystem::remove(out);
  int status = std::system(cmd.c_str());
  std::string text = slurp(out);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

std::pair<int, std::string> run_capi(const std::string& command, const std::string& input, std::optional<std::size_t> horizon) {
  tt_job_options o = tt_job_options_default();
  if (horizon) o.horizon = *horizon;
  char* out = nullptr;
  int code = -1;
  tt_status st = tt_run(command.c_str(), input.c_str(), &o, &out, nullptr, &code);
  std::string text = out ? out : "";
  tt_string_free(out);
  if (st != TT_OK) return {-1, ""};
  return {code, text};
}

void roundtrip(Report& r, const std::string& command, const json& in, const json& out) {
  auto same_invariant = [&](const json& j) {
    r.check(schema::write_invariant(schema::read_invariant(j)) == j, command + ": invariant does not round-trip");
  };
  auto same_description = [&](const json& j) {
    r.check(schema::write_description(schema::read_description(j)) == j, command + ": description does not round-trip");
  };
  if (command == "classify") {
    same_invariant(out);
    same_description(schema::write_description(schema::read_description(in)));
  } else if (command == "family") {
    for (const auto& inv : out["invariants"]) same_invariant(inv);
  } else if (command == "reduce-solid-torus") {
    same_description(out["end"]);
    same_invariant(out["invariant"]);
  } else if (command == "reduce-t2xr") {
    const json& a = out["annulus"];
    r.check(schema::write_annulus(schema::read_annulus(a)) == a, command + ": annulus does not round-trip");
    same_invariant(out["plus_invariant"]);
  } else if (command == "path" || command == "blocks") {
    SlopeTarget t = schema::read_target(in["target"]);
    r.check(schema::read_target(schema::write_target(t)) == t, command + ": target does not round-trip");
  }
}

std::string g_cli, g_corpus;

void criterion10(Report& r) {
  json corpus = json::parse(slurp(g_corpus));
  const auto& jobs = corpus.at("jobs");
  r.check(jobs.size() == 30, "corpus has " + std::to_string(jobs.size()) + " jobs");
  std::set<std::string> commands;
  for (const auto& job : jobs) {
    std::string command = job.at("command");
    std::string input = job.at("input").dump();
    std::optional<std::size_t> horizon;
    if (job.contains("horizon")) horizon = job["horizon"].get<std::size_t>();
    commands.insert(command);
    auto a = run_cli(g_cli, command, input, horizon);
    auto b = run_cli(g_cli, command, input, horizon);
    auto c = run_capi(command, input, horizon);
    auto d = run_capi(command, input, horizon);
    r.check(a == b, command + ": CLI runs differ");
    r.check(c == d, command + ": library runs differ");
    r.check(a == c, command + ": CLI and library differ");
    r.check(!a.second.empty(), command + ": empty output");
    if (a.first == 0 && !a.second.empty()) roundtrip(r, command, job["input"], json::parse(a.second));
  }
  for (const auto& c : job_commands()) r.check(commands.count(c) == 1, "corpus misses " + c);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <job-corpus.json>\n";
    return 2;
  }
  g_cli = argv[1];
  g_corpus = argv[2];
  struct Criterion {
    const char* name;
    double limit;
    std::function<void(Report&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"Farey oracle equivalence", kLimit1, criterion1},
      {"minimal-sequence invariants", kLimit2, criterion2},
      {"block witness soundness and maximality", kLimit3, criterion3},
      {"worked instance -sqrt2", kLimit4, criterion4},
      {"complete invariant on small decompositions", kLimit5, criterion5},
      {"infinite-block normal forms", kLimit6, criterion6},
      {"extension obstructions and families", kLimit7, criterion7},
      {"Euler class conventions", kLimit8, criterion8},
      {"reductions", kLimit9, criterion9},
      {"CLI determinism and round trips", kLimit10, criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].run(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > criteria[i].limit) {
      std::ostringstream msg;
      msg << "took " << secs << " s, limit " << criteria[i].limit << " s";
      r.failures.push_back(msg.str());
    }
    bool ok = r.failures.empty();
    failed += !ok;
    std::printf("criterion %zu: %s  %s (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].name, secs);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
