#pragma once

// Exact dyadic rationals m / 2^e backed by arbitrary-precision integers.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;

// Value m / 2^e, kept canonical: e == 0 or m odd. Zero is (0, 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t v) : m_(v) {}  // NOLINT: implicit from integers is intended
  Dyadic(BigInt m, std::uint32_t e);

  const BigInt& numerator() const noexcept { return m_; }
  std::uint32_t exponent() const noexcept { return e_; }

  bool is_zero() const noexcept { return m_.is_zero(); }
  int sign() const noexcept { return m_.sign(); }
  bool is_integer() const noexcept { return e_ == 0; }

  // Multiply by 2^k (k may be negative). Exact.
  Dyadic ldexp(int k) const;

  // Smallest integer >= value / largest integer <= value.
  BigInt ceil() const;
  BigInt floor() const;

  // 2-adic valuation: value = odd * 2^v. Undefined for zero.
  std::int64_t valuation() const;

  // Numerator as int64 if it fits.
  std::optional<std::int64_t> small_numerator() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.e_ == b.e_ && a.m_ == b.m_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  // "m" for integers, otherwise "m/2^e" written with the denominator expanded,
  // e.g. "3/4".
  std::string to_string() const;

 private:
  void canonicalize();

  BigInt m_ = 0;
  std::uint32_t e_ = 0;
};

// If num / den is an integral power of two, its base-2 logarithm.
// Both arguments must be nonzero.
std::optional<int> log2_ratio(const Dyadic& num, const Dyadic& den);

// 2^k as a dyadic.
Dyadic pow2(int k);

}  // namespace thompson
