#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact signed integer. Values that fit in a signed 128-bit word are held
// inline and combined with overflow-checked builtins; anything larger lives
// in a BigInt. The representation is normalised after every operation, so
// equal values always share the same alternative.
class ExactInt {
 public:
  ExactInt() noexcept : v_(__int128{0}) {}
  ExactInt(int x) noexcept : v_(__int128{x}) {}
  ExactInt(long x) noexcept : v_(__int128{x}) {}
  ExactInt(long long x) noexcept : v_(__int128{x}) {}
  explicit ExactInt(__int128 x) noexcept : v_(x) {}
  explicit ExactInt(const BigInt& x);

  bool is_small() const noexcept { return std::holds_alternative<__int128>(v_); }
  std::optional<std::int64_t> to_int64() const noexcept;
  std::optional<__int128> to_int128() const noexcept;
  BigInt to_big() const;
  Rational to_rational() const { return Rational(to_big()); }

  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_even() const;
  ExactInt abs() const;

  ExactInt operator-() const;
  ExactInt& operator+=(const ExactInt& o);
  ExactInt& operator-=(const ExactInt& o);
  ExactInt& operator*=(const ExactInt& o);

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }

  // Truncating quotient and remainder (C++ semantics). Divisor must be nonzero.
  friend ExactInt operator/(const ExactInt& a, const ExactInt& b);
  friend ExactInt operator%(const ExactInt& a, const ExactInt& b);

  friend bool operator==(const ExactInt& a, const ExactInt& b);
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b);

  std::string to_string() const;
  static ExactInt parse(const std::string& text);

  std::size_t hash() const;

 private:
  void normalize();

  std::variant<__int128, BigInt> v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& x);

ExactInt pow(const ExactInt& base, unsigned exponent);

std::string to_string(const Rational& q);

}  // namespace gdet

template <>
struct std::hash<gdet::ExactInt> {
  std::size_t operator()(const gdet::ExactInt& x) const { return x.hash(); }
};
