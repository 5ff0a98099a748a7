#include "thompson/dyadic.hpp"

#include <limits>
#include <stdexcept>

namespace thompson {

namespace {

// Exact shifts on the magnitude; cpp_int right-shift of negatives is not
// guaranteed to truncate.
BigInt shr(const BigInt& v, unsigned k) {
  if (v.sign() < 0) return -(BigInt(-v) >> k);
  return v >> k;
}

BigInt scaled(const BigInt& m, std::uint32_t from, std::uint32_t to) {
  return to == from ? m : BigInt(m << (to - from));
}

}  // namespace

Dyadic::Dyadic(BigInt m, std::uint32_t e) : m_(std::move(m)), e_(e) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (m_.is_zero()) {
    e_ = 0;
    return;
  }
  if (e_ == 0) return;
  unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(m_));
  unsigned k = std::min<unsigned>(tz, e_);
  if (k > 0) {
    m_ = shr(m_, k);
    e_ -= k;
  }
}

Dyadic Dyadic::ldexp(int k) const {
  Dyadic r = *this;
  if (r.m_.is_zero() || k == 0) return r;
  if (k > 0) {
    auto uk = static_cast<std::uint32_t>(k);
    if (r.e_ >= uk) {
      r.e_ -= uk;
    } else {
      r.m_ <<= (uk - r.e_);
      r.e_ = 0;
    }
  } else {
    r.e_ += static_cast<std::uint32_t>(-k);
    r.canonicalize();
  }
  return r;
}

BigInt Dyadic::floor() const {
  if (e_ == 0) return m_;
  if (m_.sign() >= 0) return m_ >> e_;
  // -floor(-x) = ceil; for negatives floor = -ceil(|x|)
  BigInt mag = -m_;
  return -((mag >> e_) + 1);  // m odd, so never exact
}

BigInt Dyadic::ceil() const {
  if (e_ == 0) return m_;
  return floor() + 1;
}

std::int64_t Dyadic::valuation() const {
  if (m_.is_zero()) throw std::domain_error("valuation of zero");
  if (e_ > 0) return -static_cast<std::int64_t>(e_);
  return static_cast<std::int64_t>(
      boost::multiprecision::lsb(boost::multiprecision::abs(m_)));
}

std::optional<std::int64_t> Dyadic::small_numerator() const {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (m_ < lo || m_ > hi) return std::nullopt;
  return m_.convert_to<std::int64_t>();
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.m_ = -r.m_;
  return r;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.m_.is_zero()) return *this;
  std::uint32_t e = std::max(e_, rhs.e_);
  m_ = scaled(m_, e_, e) + scaled(rhs.m_, rhs.e_, e);
  e_ = e;
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  m_ *= rhs.m_;
  e_ += rhs.e_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.e_ == b.e_) return a.m_.compare(b.m_) <=> 0;
  std::uint32_t e = std::max(a.e_, b.e_);
  return scaled(a.m_, a.e_, e).compare(scaled(b.m_, b.e_, e)) <=> 0;
}

std::string Dyadic::to_string() const {
  if (e_ == 0) return m_.str();
  BigInt den = BigInt(1) << e_;
  return m_.str() + "/" + den.str();
}

std::optional<int> log2_ratio(const Dyadic& num, const Dyadic& den) {
  if (num.is_zero() || den.is_zero()) {
    throw std::domain_error("log2_ratio of zero");
  }
  if (num.sign() != den.sign()) return std::nullopt;
  std::int64_t vn = num.valuation();
  std::int64_t vd = den.valuation();
  // Odd parts must agree.
  if (num.ldexp(static_cast<int>(-vn)) != den.ldexp(static_cast<int>(-vd))) {
    return std::nullopt;
  }
  return static_cast<int>(vn - vd);
}

Dyadic pow2(int k) { return Dyadic(1).ldexp(k); }

}  // namespace thompson
