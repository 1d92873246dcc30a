#include "gdet/exact_int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace gdet {

namespace {

constexpr __int128 kMax = std::numeric_limits<__int128>::max();
constexpr __int128 kMin = std::numeric_limits<__int128>::min();

BigInt big_from(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 mag = neg ? (unsigned __int128)(-(x + 1)) + 1 : (unsigned __int128)x;
  BigInt hi = static_cast<std::uint64_t>(mag >> 64);
  BigInt out = (hi << 64) | BigInt(static_cast<std::uint64_t>(mag));
  return neg ? BigInt(-out) : out;
}

}  // namespace

ExactInt::ExactInt(const BigInt& x) : v_(x) { normalize(); }

void ExactInt::normalize() {
  if (auto* b = std::get_if<BigInt>(&v_)) {
    if (*b >= big_from(kMin) && *b <= big_from(kMax)) {
      const bool neg = *b < 0;
      BigInt mag = neg ? BigInt(-*b) : *b;
      unsigned __int128 u = (unsigned __int128)static_cast<std::uint64_t>(mag >> 64) << 64 |
                            static_cast<std::uint64_t>(mag & BigInt(~std::uint64_t{0}));
      v_ = neg ? (__int128)(~u + 1) : (__int128)u;
    }
  }
}

std::optional<std::int64_t> ExactInt::to_int64() const noexcept {
  if (auto* s = std::get_if<__int128>(&v_)) {
    if (*s >= std::numeric_limits<std::int64_t>::min() &&
        *s <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(*s);
    }
  }
  return std::nullopt;
}

std::optional<__int128> ExactInt::to_int128() const noexcept {
  if (auto* s = std::get_if<__int128>(&v_)) return *s;
  return std::nullopt;
}

BigInt ExactInt::to_big() const {
  if (auto* s = std::get_if<__int128>(&v_)) return big_from(*s);
  return std::get<BigInt>(v_);
}

int ExactInt::sign() const noexcept {
  if (auto* s = std::get_if<__int128>(&v_)) return (*s > 0) - (*s < 0);
  return std::get<BigInt>(v_).sign();
}

bool ExactInt::is_even() const {
  if (auto* s = std::get_if<__int128>(&v_)) return (*s & 1) == 0;
  return !bit_test(std::get<BigInt>(v_), 0);
}

ExactInt ExactInt::abs() const { return sign() < 0 ? -*this : *this; }

ExactInt ExactInt::operator-() const {
  if (auto* s = std::get_if<__int128>(&v_); s && *s != kMin) return ExactInt(-*s);
  return ExactInt(BigInt(-to_big()));
}

ExactInt& ExactInt::operator+=(const ExactInt& o) {
  auto* a = std::get_if<__int128>(&v_);
  auto* b = std::get_if<__int128>(&o.v_);
  __int128 r;
  if (a && b && !__builtin_add_overflow(*a, *b, &r)) {
    v_ = r;
  } else {
    v_ = BigInt(to_big() + o.to_big());
    normalize();
  }
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& o) {
  auto* a = std::get_if<__int128>(&v_);
  auto* b = std::get_if<__int128>(&o.v_);
  __int128 r;
  if (a && b && !__builtin_sub_overflow(*a, *b, &r)) {
    v_ = r;
  } else {
    v_ = BigInt(to_big() - o.to_big());
    normalize();
  }
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& o) {
  auto* a = std::get_if<__int128>(&v_);
  auto* b = std::get_if<__int128>(&o.v_);
  __int128 r;
  if (a && b && !__builtin_mul_overflow(*a, *b, &r)) {
    v_ = r;
  } else {
    v_ = BigInt(to_big() * o.to_big());
    normalize();
  }
  return *this;
}

ExactInt operator/(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("ExactInt division by zero");
  auto* x = std::get_if<__int128>(&a.v_);
  auto* y = std::get_if<__int128>(&b.v_);
  if (x && y && !(*x == kMin && *y == -1)) return ExactInt(*x / *y);
  return ExactInt(BigInt(a.to_big() / b.to_big()));
}

ExactInt operator%(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("ExactInt division by zero");
  auto* x = std::get_if<__int128>(&a.v_);
  auto* y = std::get_if<__int128>(&b.v_);
  if (x && y) return *y == -1 ? ExactInt(0) : ExactInt(*x % *y);
  return ExactInt(BigInt(a.to_big() % b.to_big()));
}

bool operator==(const ExactInt& a, const ExactInt& b) {
  auto* x = std::get_if<__int128>(&a.v_);
  auto* y = std::get_if<__int128>(&b.v_);
  if (x && y) return *x == *y;
  if (!x && !y) return std::get<BigInt>(a.v_) == std::get<BigInt>(b.v_);
  return false;  // normalised: a small and a big value never coincide
}

std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
  auto* x = std::get_if<__int128>(&a.v_);
  auto* y = std::get_if<__int128>(&b.v_);
  if (x && y) return *x <=> *y;
  const int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string ExactInt::to_string() const {
  if (auto* s = std::get_if<__int128>(&v_)) {
    if (*s == 0) return "0";
    unsigned __int128 mag = *s < 0 ? (unsigned __int128)(-(*s + 1)) + 1 : (unsigned __int128)*s;
    std::string out;
    while (mag) {
      out.insert(out.begin(), char('0' + int(mag % 10)));
      mag /= 10;
    }
    if (*s < 0) out.insert(out.begin(), '-');
    return out;
  }
  return std::get<BigInt>(v_).str();
}

ExactInt ExactInt::parse(const std::string& text) {
  try {
    return ExactInt(BigInt(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: " + text);
  }
}

std::size_t ExactInt::hash() const {
  if (auto* s = std::get_if<__int128>(&v_)) {
    auto lo = static_cast<std::uint64_t>(*s);
    auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(*s) >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const ExactInt& x) { return os << x.to_string(); }

ExactInt pow(const ExactInt& base, unsigned exponent) {
  ExactInt result(1), b = base;
  while (exponent) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace gdet
