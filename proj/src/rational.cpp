#include "rim/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "rim/errors.hpp"

namespace rim {
namespace {

using i128 = __int128;

i128 gcd_wide(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw InputError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) {
    throw InputError("rational arithmetic exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so products of already-reduced values stay small.
  const i128 g1 = gcd_wide(a.num_, b.den_);
  const i128 g2 = gcd_wide(b.num_, a.den_);
  const i128 n1 = g1 ? a.num_ / g1 : a.num_;
  const i128 d2 = g1 ? b.den_ / g1 : b.den_;
  const i128 n2 = g2 ? b.num_ / g2 : b.num_;
  const i128 d1 = g2 ? a.den_ / g2 : a.den_;
  return Rational::from_wide(n1 * n2, d1 * d2);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("division by zero");
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  return lhs < rhs ? std::strong_ordering::less
                   : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational Rational::parse(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(token, token));
  const auto num = parse_int(token.substr(0, slash), token);
  const auto den_part = token.substr(slash + 1);
  if (!den_part.empty() && (den_part.front() == '-' || den_part.front() == '+')) {
    throw InputError("malformed rational '" + std::string(token) + "'");
  }
  const auto den = parse_int(den_part, token);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace rim
