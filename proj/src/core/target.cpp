#include "toricends/target.hpp"

#include "toricends/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace toric {

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

// Sign of X - Y sqrt(d) for Y != 0 and d not a perfect square.
int sign_of_linear_surd(const BigInt& x, const BigInt& y, const BigInt& d) {
  if (x >= 0 && y < 0) return 1;
  if (x <= 0 && y > 0) return -1;
  BigInt lhs = x * x;
  BigInt rhs = y * y * d;
  if (x > 0) return lhs > rhs ? 1 : -1;
  return lhs > rhs ? -1 : 1;
}

void check_squarefree(const BigInt& d) {
  // Trial division settles every d below 10^12; larger radicands are only
  // screened for small square factors.
  for (BigInt k = 2; k <= 1000000 && k * k <= d; ++k) {
    if (d % (k * k) == 0)
      throw Error(ErrorCode::invalid_argument, "quadratic radicand " + d.str() + " is not squarefree");
  }
}

}  // namespace

QuadraticSurd QuadraticSurd::make(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw Error(ErrorCode::invalid_argument, "quadratic target with c = 0");
  if (b == 0) throw Error(ErrorCode::invalid_argument, "quadratic target with b = 0 is rational");
  if (d <= 1) throw Error(ErrorCode::invalid_argument, "quadratic radicand must exceed 1");
  check_squarefree(d);
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
  QuadraticSurd q;
  q.a_ = a / g;
  q.b_ = b / g;
  q.c_ = c / g;
  q.d_ = std::move(d);
  return q;
}

QuadraticSurd QuadraticSurd::transformed(const GL2ZMatrix& m) const { return transformed(m.entries()); }

QuadraticSurd QuadraticSurd::transformed(const std::array<BigInt, 4>& m) const {
  BigInt x = m[0] * a_ + m[1] * c_;
  BigInt y = m[0] * b_;
  BigInt u = m[2] * a_ + m[3] * c_;
  BigInt v = m[2] * b_;
  return make(x * u - y * v * d_, y * u - x * v, u * u - v * v * d_, d_);
}

BigInt QuadraticSurd::floor() const {
  BigInt root = isqrt(b_ * b_ * d_);
  BigInt s = b_ > 0 ? root : BigInt(-root - 1);
  return floor_div(a_ + s, c_);
}

int QuadraticSurd::compare(const Slope& x) const {
  if (x.is_infinite()) throw Error(ErrorCode::invalid_argument, "comparing a surd with infinity");
  return sign_of_linear_surd(x.num() * c_ - x.den() * a_, x.den() * b_, d_);
}

double QuadraticSurd::approx() const {
  Float v = (Float(a_) + Float(b_) * boost::multiprecision::sqrt(Float(d_))) / Float(c_);
  return static_cast<double>(v);
}

std::string QuadraticSurd::str() const {
  std::ostringstream os;
  os << "(" << a_ << " + " << b_ << "*sqrt(" << d_ << "))/" << c_;
  return os.str();
}

CfStream CfStream::periodic(std::vector<BigInt> prefix, std::vector<BigInt> period) {
  if (period.empty()) throw Error(ErrorCode::invalid_argument, "continued fraction period must be nonempty");
  for (std::size_t k = 0; k < prefix.size() + period.size(); ++k) {
    const BigInt& v = k < prefix.size() ? prefix[k] : period[k - prefix.size()];
    if (k > 0 && v < 1)
      throw Error(ErrorCode::invalid_argument, "continued fraction coefficients after the first must be >= 1");
  }
  std::ostringstream key;
  key << "cf[";
  for (std::size_t i = 0; i < prefix.size(); ++i) key << (i ? "," : "") << prefix[i];
  key << ";";
  for (std::size_t i = 0; i < period.size(); ++i) key << (i ? "," : "") << period[i];
  key << "]";
  auto pre = std::make_shared<const std::vector<BigInt>>(prefix);
  auto per = std::make_shared<const std::vector<BigInt>>(period);
  CfStream s = from_generator(key.str(), [pre, per](std::size_t k) -> BigInt {
    if (k < pre->size()) return (*pre)[k];
    return (*per)[(k - pre->size()) % per->size()];
  });
  s.periodic_ = std::make_pair(std::move(prefix), std::move(period));
  return s;
}

CfStream CfStream::from_generator(std::string key, Generator coefficients) {
  CfStream s;
  s.key_ = std::move(key);
  s.gen_ = std::make_shared<const Generator>(std::move(coefficients));
  return s;
}

BigInt CfStream::coefficient(std::size_t k) const {
  BigInt v = (*gen_)(k);
  if (k > 0 && v < 1)
    throw Error(ErrorCode::invalid_argument, "continued fraction coefficient " + std::to_string(k) + " of " + key_ + " is < 1");
  return v;
}

std::optional<QuadraticSurd> CfStream::quadratic_value() const {
  if (!periodic_) return std::nullopt;
  const auto& [prefix, period] = *periodic_;
  // y = [b1; b2, ..., bm, y] is the positive root of q y^2 + (s - p) y - r = 0
  // where [[p, r], [q, s]] is the product of the [[b, 1], [1, 0]].
  BigInt p = 1, r = 0, q = 0, s = 1;
  for (const BigInt& b : period) {
    BigInt np = p * b + r, nq = q * b + s;
    r = p;
    s = q;
    p = np;
    q = nq;
  }
  BigInt disc = (s - p) * (s - p) + 4 * r * q;
  BigInt root = 1;
  for (BigInt k = 2; k * k <= disc && k <= 1000000; ++k) {
    while (disc % (k * k) == 0) {
      disc /= k * k;
      root *= k;
    }
  }
  QuadraticSurd y = QuadraticSurd::make(p - s, root, 2 * q, disc);
  std::array<BigInt, 4> m{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  for (const BigInt& a : prefix) m = {m[0] * a + m[1], m[0], m[2] * a + m[3], m[2]};
  std::array<BigInt, 4> full{h_[0] * m[0] + h_[1] * m[2], h_[0] * m[1] + h_[1] * m[3],
                             h_[2] * m[0] + h_[3] * m[2], h_[2] * m[1] + h_[3] * m[3]};
  return y.transformed(full);
}

CfStream CfStream::transformed(const GL2ZMatrix& m) const { return transformed(m.entries()); }

CfStream CfStream::transformed(const std::array<BigInt, 4>& g) const {
  CfStream s = *this;
  s.h_ = {g[0] * h_[0] + g[1] * h_[2], g[0] * h_[1] + g[1] * h_[3],
          g[2] * h_[0] + g[3] * h_[2], g[2] * h_[1] + g[3] * h_[3]};
  if (s.h_[0] * s.h_[3] - s.h_[1] * s.h_[2] == 0)
    throw Error(ErrorCode::invalid_argument, "singular homography on a continued fraction");
  return s;
}

BigInt CfStream::floor() const {
  BigInt A = h_[0], B = h_[1], C = h_[2], D = h_[3];
  for (std::size_t k = 0; k < kMaxTerms; ++k) {
    BigInt t = coefficient(k);
    // x = t + 1/x' with x' in (1, infinity).
    BigInt nA = A * t + B, nC = C * t + D;
    B = A;
    D = C;
    A = std::move(nA);
    C = std::move(nC);
    if (C == 0 || C + D == 0 || (C > 0) != (C + D > 0)) continue;
    Slope e1(A + B, C + D), e2(A, C);
    const Slope& lo = compare_finite(e1, e2) < 0 ? e1 : e2;
    const Slope& hi = compare_finite(e1, e2) < 0 ? e2 : e1;
    BigInt f = floor_div(lo.num(), lo.den());
    if (compare_finite(hi, Slope(f + 1, BigInt(1))) <= 0) return f;
  }
  throw Error(ErrorCode::horizon_exceeded, "floor of " + key_ + " not settled after " + std::to_string(kMaxTerms) + " terms");
}

int CfStream::compare(const Slope& x) const {
  if (x.is_infinite()) throw Error(ErrorCode::invalid_argument, "comparing a continued fraction with infinity");
  // z = q y - p is irrational, so floor(z) >= 0 means y > x.
  CfStream z = transformed(std::array<BigInt, 4>{x.den(), BigInt(-x.num()), BigInt(0), BigInt(1)});
  return z.floor() >= 0 ? -1 : 1;
}

double CfStream::approx() const {
  BigInt p0 = 1, q0 = 0, p1 = coefficient(0), q1 = 1;
  for (std::size_t k = 1; k < 60; ++k) {
    BigInt t = coefficient(k);
    BigInt p2 = t * p1 + p0, q2 = t * q1 + q0;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p2);
    q1 = std::move(q2);
  }
  Float x = Float(p1) / Float(q1);
  Float y = (Float(h_[0]) * x + Float(h_[1])) / (Float(h_[2]) * x + Float(h_[3]));
  return static_cast<double>(y);
}

SlopeTarget SlopeTarget::rational(Slope s, bool attained) { return SlopeTarget(Rational{std::move(s), attained}); }
SlopeTarget SlopeTarget::quadratic(QuadraticSurd q) { return SlopeTarget(std::move(q)); }
SlopeTarget SlopeTarget::cf_stream(CfStream cf) { return SlopeTarget(std::move(cf)); }

SlopeTarget::Kind SlopeTarget::kind() const {
  switch (v_.index()) {
    case 0: return Kind::rational;
    case 1: return Kind::quadratic;
    default: return Kind::cf_stream;
  }
}

bool SlopeTarget::is_attained() const {
  auto* r = std::get_if<Rational>(&v_);
  return r != nullptr && r->attained;
}

const Slope& SlopeTarget::slope() const {
  auto* r = std::get_if<Rational>(&v_);
  if (!r) throw Error(ErrorCode::invalid_argument, "target is not rational");
  return r->slope;
}

const QuadraticSurd& SlopeTarget::surd() const {
  auto* q = std::get_if<QuadraticSurd>(&v_);
  if (!q) throw Error(ErrorCode::invalid_argument, "target is not a quadratic surd");
  return *q;
}

const CfStream& SlopeTarget::stream() const {
  auto* s = std::get_if<CfStream>(&v_);
  if (!s) throw Error(ErrorCode::invalid_argument, "target is not a continued fraction stream");
  return *s;
}

SlopeTarget SlopeTarget::transformed(const GL2ZMatrix& m) const {
  return std::visit(
      [&](const auto& v) -> SlopeTarget {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return SlopeTarget(Rational{m.apply(v.slope), v.attained});
        else
          return SlopeTarget(v.transformed(m));
      },
      v_);
}

SlopeTarget SlopeTarget::with_attained(bool attained) const { return rational(slope(), attained); }

bool SlopeTarget::equals_slope(const Slope& s) const {
  auto* r = std::get_if<Rational>(&v_);
  return r != nullptr && r->slope == s;
}

int SlopeTarget::compare(const Slope& x) const {
  return std::visit(
      [&](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return compare_finite(x, v.slope);
        else
          return v.compare(x);
      },
      v_);
}

BigInt SlopeTarget::floor() const {
  return std::visit(
      [&](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>) {
          if (v.slope.is_infinite()) throw Error(ErrorCode::invalid_argument, "floor of infinity");
          return floor_div(v.slope.num(), v.slope.den());
        } else {
          return v.floor();
        }
      },
      v_);
}

double SlopeTarget::approx() const {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return v.slope.approx();
        else
          return v.approx();
      },
      v_);
}

std::string SlopeTarget::describe() const {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rational>)
          return v.slope.str() + (v.attained ? " (attained)" : " (not attained)");
        else if constexpr (std::is_same_v<T, QuadraticSurd>)
          return v.str();
        else
          return v.key();
      },
      v_);
}

}  // namespace toric
