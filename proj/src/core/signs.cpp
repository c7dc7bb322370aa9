#include "toricends/signs.hpp"

#include "toricends/error.hpp"

#include <algorithm>

namespace toric {

TailRule TailRule::periodic(std::vector<Sign> pattern) {
  if (pattern.empty()) throw Error(ErrorCode::invalid_argument, "periodic tail needs a nonempty pattern");
  return {Kind::periodic, Sign::plus, 0, std::move(pattern)};
}

Sign TailRule::at(std::size_t k) const {
  switch (kind) {
    case Kind::none: throw Error(ErrorCode::coverage_mismatch, "no tail rule");
    case Kind::all_positive: return Sign::plus;
    case Kind::all_negative: return Sign::minus;
    case Kind::eventually: return k < after ? opposite(sign) : sign;
    case Kind::alternating: return k % 2 == 0 ? Sign::plus : Sign::minus;
    case Kind::periodic: return pattern[k % pattern.size()];
  }
  return Sign::plus;
}

SignData::SignData(std::vector<Sign> prefix, TailRule tail) : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.kind == TailRule::Kind::periodic && tail_.pattern.empty())
    throw Error(ErrorCode::invalid_argument, "periodic tail needs a nonempty pattern");
}

Sign SignData::at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  if (!has_tail())
    throw Error(ErrorCode::coverage_mismatch, "no sign for basic slice " + std::to_string(i) + " (prefix covers " +
                                                   std::to_string(prefix_.size()) + ")");
  return tail_.at(i - prefix_.size());
}

std::size_t SignData::periodic_from() const {
  std::size_t from = prefix_.size();
  if (tail_.kind == TailRule::Kind::eventually) from += tail_.after;
  return from;
}

std::size_t SignData::period() const {
  switch (tail_.kind) {
    case TailRule::Kind::alternating: return 2;
    case TailRule::Kind::periodic: return tail_.pattern.size();
    default: return 1;
  }
}

std::optional<Sign> SignData::eventual_constant() const {
  switch (tail_.kind) {
    case TailRule::Kind::none: return std::nullopt;
    case TailRule::Kind::all_positive: return Sign::plus;
    case TailRule::Kind::all_negative: return Sign::minus;
    case TailRule::Kind::eventually: return tail_.sign;
    case TailRule::Kind::alternating: return std::nullopt;
    case TailRule::Kind::periodic: {
      const auto& p = tail_.pattern;
      if (std::all_of(p.begin(), p.end(), [&](Sign s) { return s == p.front(); })) return p.front();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

ExtCount SignData::count_from(Sign s, std::size_t from) const {
  std::uint64_t finite = 0;
  std::size_t stop = has_tail() ? std::max(periodic_from(), from) : prefix_.size();
  for (std::size_t i = from; i < stop; ++i) finite += at(i) == s ? 1 : 0;
  if (!has_tail()) return ExtCount::finite(finite);
  // The periodic part contains s infinitely often iff one period does.
  std::size_t p = periodic_from();
  for (std::size_t i = 0; i < period(); ++i) {
    if (at(std::max(p, from) + i) == s) return ExtCount::infinite();
  }
  return ExtCount::finite(finite);
}

SignData SignData::drop(std::size_t k) const {
  if (k <= prefix_.size()) {
    return SignData(std::vector<Sign>(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), tail_);
  }
  if (!has_tail())
    throw Error(ErrorCode::coverage_mismatch, "cannot drop " + std::to_string(k) + " slices from a prefix of " +
                                                  std::to_string(prefix_.size()));
  std::size_t shift = k - prefix_.size();
  TailRule t = tail_;
  switch (t.kind) {
    case TailRule::Kind::eventually:
      t.after = shift >= t.after ? 0 : t.after - shift;
      if (t.after == 0) t = TailRule::all(t.sign);
      break;
    case TailRule::Kind::alternating:
      if (shift % 2 == 1) t = TailRule::periodic({Sign::minus, Sign::plus});
      break;
    case TailRule::Kind::periodic:
      std::rotate(t.pattern.begin(), t.pattern.begin() + static_cast<std::ptrdiff_t>(shift % t.pattern.size()),
                  t.pattern.end());
      break;
    default:
      break;
  }
  return SignData({}, t);
}

SignData SignData::negated() const {
  std::vector<Sign> p;
  p.reserve(prefix_.size());
  for (Sign s : prefix_) p.push_back(opposite(s));
  TailRule t = tail_;
  switch (t.kind) {
    case TailRule::Kind::all_positive: t = TailRule::all(Sign::minus); break;
    case TailRule::Kind::all_negative: t = TailRule::all(Sign::plus); break;
    case TailRule::Kind::eventually: t.sign = opposite(t.sign); break;
    case TailRule::Kind::alternating: t = TailRule::periodic({Sign::minus, Sign::plus}); break;
    case TailRule::Kind::periodic:
      for (Sign& s : t.pattern) s = opposite(s);
      break;
    case TailRule::Kind::none: break;
  }
  return SignData(std::move(p), std::move(t));
}

}  // namespace toric
