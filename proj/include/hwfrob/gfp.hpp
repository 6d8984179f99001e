#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "hwfrob/error.hpp"

namespace hwfrob {

/// Trial division; inputs are small.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Prime field context F_p. A value type: copy it freely, compare by modulus.
/// Residues are plain uint32 values in [0, p); p < 2^31 so products fit in
/// 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t p) {
    if (p > kMaxModulus) {
      throw InputError("p = " + std::to_string(p) + " exceeds the supported modulus bound 2^31-1");
    }
    if (!is_prime(p)) throw InputError("p must be prime (got " + std::to_string(p) + ")");
    p_ = static_cast<std::uint32_t>(p);
  }

  std::uint32_t modulus() const noexcept { return p_; }
  bool valid() const noexcept { return p_ != 0; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // < 2^32
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a + b*c
  std::uint32_t fma(std::uint32_t a, std::uint32_t b, std::uint32_t c) const noexcept {
    return static_cast<std::uint32_t>((a + static_cast<std::uint64_t>(b) * c) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint64_t base = a % p_;
    std::uint64_t acc = 1 % p_;
    while (e != 0) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return reduce(t);
  }

  /// Symmetric representative in (-p/2, p/2], for printing.
  std::int64_t centered(std::uint32_t a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_ = 0;
};

/// A residue tagged with its modulus; binary operations check the tags.
struct FieldElem {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
  return os << a.value << " (mod " << a.modulus << ")";
}

inline FieldElem make_elem(const PrimeField& field, std::int64_t value) {
  return FieldElem{field.reduce(value), field.modulus()};
}

enum class ArithOp { add, sub, mul };

namespace detail {
inline PrimeField field_of(const FieldElem& a) {
  if (a.modulus == 0) throw UsageError("field element without modulus");
  return PrimeField(a.modulus);
}
inline void check_same_modulus(const FieldElem& a, const FieldElem& b) {
  if (a.modulus != b.modulus) {
    throw UsageError("modulus mismatch: " + std::to_string(a.modulus) + " vs " +
                     std::to_string(b.modulus));
  }
}
}  // namespace detail

inline FieldElem ff_add_mul(const FieldElem& a, const FieldElem& b, ArithOp op) {
  detail::check_same_modulus(a, b);
  const PrimeField f = detail::field_of(a);
  switch (op) {
    case ArithOp::add:
      return {f.add(a.value, b.value), a.modulus};
    case ArithOp::sub:
      return {f.sub(a.value, b.value), a.modulus};
    case ArithOp::mul:
      return {f.mul(a.value, b.value), a.modulus};
  }
  throw UsageError("unknown arithmetic operation");
}

inline FieldElem ff_inv(const FieldElem& a) {
  const PrimeField f = detail::field_of(a);
  return {f.inv(a.value), a.modulus};
}

/// 0^0 = 1.
inline FieldElem ff_pow(const FieldElem& a, std::uint64_t e) {
  const PrimeField f = detail::field_of(a);
  return {f.pow(a.value, e), a.modulus};
}

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return ff_add_mul(a, b, ArithOp::add); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return ff_add_mul(a, b, ArithOp::sub); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return ff_add_mul(a, b, ArithOp::mul); }

}  // namespace hwfrob
