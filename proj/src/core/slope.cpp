#include "toricends/slope.hpp"

#include "toricends/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace toric {

Slope::Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw Error(ErrorCode::invalid_argument, "0/0 is not a slope");
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
  BigInt g = boost::multiprecision::gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_bigint(text), BigInt(1));
  BigInt p = parse_bigint(text.substr(0, slash));
  BigInt q = parse_bigint(text.substr(slash + 1));
  if (p == 0 && q == 0) throw Error(ErrorCode::parse, "0/0 is not a slope");
  return Slope(std::move(p), std::move(q));
}

std::string Slope::str() const { return p_.str() + "/" + q_.str(); }

double Slope::approx() const {
  using Float = boost::multiprecision::cpp_bin_float_double;
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(Float(p_) / Float(q_));
}

int compare_finite(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite())
    throw Error(ErrorCode::invalid_argument, "compare_finite called with infinity");
  BigInt lhs = a.num() * b.den();
  BigInt rhs = b.num() * a.den();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

GL2ZMatrix::GL2ZMatrix(BigInt a, BigInt b, BigInt c, BigInt d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  BigInt det = m_[0] * m_[3] - m_[1] * m_[2];
  if (det != 1 && det != -1)
    throw Error(ErrorCode::invalid_argument, "matrix determinant must be +1 or -1, got " + det.str());
}

int GL2ZMatrix::det() const { return (m_[0] * m_[3] - m_[1] * m_[2]) > 0 ? 1 : -1; }

Slope GL2ZMatrix::apply(const Slope& s) const {
  return Slope(m_[0] * s.num() + m_[1] * s.den(), m_[2] * s.num() + m_[3] * s.den());
}

GL2ZMatrix GL2ZMatrix::inverse() const {
  if (det() == 1) return GL2ZMatrix(m_[3], -m_[1], -m_[2], m_[0]);
  return GL2ZMatrix(-m_[3], m_[1], m_[2], -m_[0]);
}

GL2ZMatrix GL2ZMatrix::normalized() const {
  bool flip = m_[0] < 0 || (m_[0] == 0 && m_[1] < 0);
  if (!flip) return *this;
  return GL2ZMatrix(-m_[0], -m_[1], -m_[2], -m_[3]);
}

GL2ZMatrix operator*(const GL2ZMatrix& x, const GL2ZMatrix& y) {
  return GL2ZMatrix(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                    x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

bool farey_edge(const Slope& a, const Slope& b) {
  BigInt det = a.num() * b.den() - b.num() * a.den();
  return det == 1 || det == -1;
}

GL2ZMatrix to_infinity(const Slope& s) {
  // x p + y q = 1; the rows (-x, -y) and (q, -p) give determinant one and
  // send (p, q) to (-1, 0).
  ExtendedGcd e = extended_gcd(s.num(), s.den());
  return GL2ZMatrix(-e.x, -e.y, s.den(), -s.num());
}

bool clockwise_between(const Slope& a, const Slope& b, const Slope& x) {
  if (a == b) throw Error(ErrorCode::invalid_argument, "clockwise_between needs distinct endpoints");
  if (x == a) return true;
  GL2ZMatrix m = to_infinity(a);
  // Seen from infinity the clockwise arc runs down from +infinity.
  return compare_finite(m.apply(x), m.apply(b)) >= 0;
}

}  // namespace toric
