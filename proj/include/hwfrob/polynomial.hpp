#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hwfrob/gfp.hpp"
#include "hwfrob/monomial.hpp"

namespace hwfrob {

/// The ambient ring F_p[x_0, ..., x_{n-1}].
struct PolyRing {
  PrimeField field;
  int nvars = 0;

  PolyRing() = default;
  PolyRing(PrimeField f, int n) : field(f), nvars(n) {
    if (n < 1 || n > kMaxVars) throw UsageError("unsupported variable count " + std::to_string(n));
  }

  std::uint32_t p() const noexcept { return field.modulus(); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms sorted by descending natural
/// grevlex, no zero coefficients. Equality is term-list equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const PolyRing& ring) : ring_(ring) {}

  static Polynomial constant(const PolyRing& ring, std::int64_t c) {
    Polynomial f(ring);
    const std::uint32_t v = ring.field.reduce(c);
    if (v != 0) f.terms_.push_back({Monomial{}, v});
    return f;
  }

  static Polynomial monomial(const PolyRing& ring, const Monomial& m, std::uint32_t c = 1) {
    Polynomial f(ring);
    c %= ring.p();
    if (c != 0) f.terms_.push_back({m, c});
    return f;
  }

  static Polynomial variable(const PolyRing& ring, int i) {
    if (i < 0 || i >= ring.nvars) throw UsageError("variable index out of range");
    return monomial(ring, Monomial::variable(i));
  }

  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms) {
    Polynomial f(ring);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return grevlex_natural(a.mono, b.mono) == std::strong_ordering::greater;
    });
    for (auto& t : terms) {
      t.coeff %= ring.p();
      if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
        f.terms_.back().coeff = ring.field.add(f.terms_.back().coeff, t.coeff);
        if (f.terms_.back().coeff == 0) f.terms_.pop_back();
      } else if (t.coeff != 0) {
        f.terms_.push_back(t);
      }
    }
    return f;
  }

  /// Trusts that `terms` is already canonical.
  static Polynomial from_sorted_terms(const PolyRing& ring, std::vector<Term> terms) {
    Polynomial f(ring);
    f.terms_ = std::move(terms);
    return f;
  }

  const PolyRing& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  /// Total degree of the leading storage term (the degree for homogeneous f).
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  bool is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const int d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
  }

  /// Leading term under an arbitrary order. Precondition: nonzero.
  const Term& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
    if (ord.is_natural_grevlex()) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
      if (ord.compare(t.mono, best->mono) == std::strong_ordering::greater) best = &t;
    }
    return *best;
  }

  std::uint32_t coeff(const Monomial& m) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_natural(t.mono, key) == std::strong_ordering::greater;
    });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);

 private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

namespace detail {

inline void check_ring(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw UsageError("polynomial ring mismatch");
}

inline bool term_greater(const Monomial& a, const Monomial& b) {
  return grevlex_natural(a, b) == std::strong_ordering::greater;
}

/// f + c*g merged in storage order.
inline Polynomial axpy(const Polynomial& f, std::uint32_t c, const Polynomial& g) {
  check_ring(f, g);
  const auto& F = f.ring().field;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms(), b = g.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_greater(b[j].mono, a[i].mono)) {
      const std::uint32_t v = F.mul(c, b[j].coeff);
      if (v != 0) out.push_back({b[j].mono, v});
      ++j;
    } else {
      const std::uint32_t v = F.fma(a[i].coeff, c, b[j].coeff);
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

}  // namespace detail

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return detail::axpy(f, 1, g); }

inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  return detail::axpy(f, f.ring().field.neg(1), g);
}

inline Polynomial& Polynomial::operator+=(const Polynomial& g) { return *this = poly_add(*this, g); }
inline Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this = poly_sub(*this, g); }

inline Polynomial poly_scale(const Polynomial& f, std::uint32_t c) {
  c %= f.ring().p();
  if (c == 0) return Polynomial(f.ring());
  std::vector<Term> out(f.terms().begin(), f.terms().end());
  for (auto& t : out) t.coeff = f.ring().field.mul(t.coeff, c);
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

inline Polynomial poly_neg(const Polynomial& f) { return poly_scale(f, f.ring().field.neg(1)); }

/// c * m * f. Multiplying by a monomial preserves the grevlex order.
inline Polynomial poly_mul_term(const Polynomial& f, const Monomial& m, std::uint32_t c) {
  c %= f.ring().p();
  if (c == 0) return Polynomial(f.ring());
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono * m, f.ring().field.mul(t.coeff, c)});
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

namespace detail {

inline void check_exponent_room(const Polynomial& f, int extra_degree) {
  if (f.is_zero()) return;
  int max_deg = 0;
  for (const auto& t : f.terms()) max_deg = std::max(max_deg, t.mono.degree());
  if (static_cast<long>(max_deg) + extra_degree > std::numeric_limits<std::uint16_t>::max()) {
    throw UsageError("exponent overflow");
  }
}

/// Accumulates products of homogeneous polynomials into a dense array.
inline Polynomial dense_product(const Polynomial& f, const Polynomial& g) {
  const PolyRing& R = f.ring();
  const MonomialOrder ord = MonomialOrder::grevlex(R.nvars);
  const int d = f.degree() + g.degree();
  DegreeIndexer idx(ord, d);
  std::vector<std::uint64_t> acc(idx.size(), 0);
  const std::uint64_t p = R.p();
  const std::uint64_t bound = std::numeric_limits<std::uint64_t>::max() - p * p;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      auto& slot = acc[idx.rank(a.mono * b.mono)];
      slot += static_cast<std::uint64_t>(a.coeff) * b.coeff;
      if (slot >= bound) slot %= p;
    }
  }
  std::vector<Term> out;
  Monomial m = idx.first();
  for (std::uint64_t r = 0; r < idx.size(); ++r) {
    const auto v = static_cast<std::uint32_t>(acc[r] % p);
    if (v != 0) out.push_back({m, v});
    idx.next(m);
  }
  return Polynomial::from_sorted_terms(R, std::move(out));
}

}  // namespace detail

/// Exact product. Homogeneous operands go through a dense accumulator,
/// everything else through hash aggregation.
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  detail::check_ring(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (f.size() == 1) return poly_mul_term(g, f.terms()[0].mono, f.terms()[0].coeff);
  if (g.size() == 1) return poly_mul_term(f, g.terms()[0].mono, g.terms()[0].coeff);
  detail::check_exponent_room(f, g.degree() + 1);
  if (f.is_homogeneous() && g.is_homogeneous()) {
    const std::uint64_t space = monomial_count(f.ring().nvars, f.degree() + g.degree());
    const std::uint64_t work = static_cast<std::uint64_t>(f.size()) * g.size();
    if (space <= (std::uint64_t{1} << 26) && space <= 16 * work + 4096) return detail::dense_product(f, g);
  }
  const auto& F = f.ring().field;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(f.size() * g.size(), std::size_t{1} << 22));
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      auto& slot = acc[a.mono * b.mono];
      slot = F.fma(slot, a.coeff, b.coeff);
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return poly_neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

/// c*x^e -> c^p * x^{p e}. Equals f^p in characteristic p.
inline Polynomial poly_frob_twist(const Polynomial& f) {
  const std::uint32_t p = f.ring().p();
  detail::check_exponent_room(f, f.degree() * static_cast<int>(p - 1));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(t.mono.exp[i] * p);
    out.push_back({m, f.ring().field.pow(t.coeff, p)});
  }
  // Scaling every exponent by p preserves the grevlex order.
  return Polynomial::from_sorted_terms(f.ring(), std::move(out));
}

/// f^e. Uses f^e = frob_twist(f^{e div p}) * f^{e mod p} once e >= p, binary
/// exponentiation below p.
inline Polynomial poly_pow(const Polynomial& f, std::uint64_t e) {
  const PolyRing& R = f.ring();
  if (e == 0) return Polynomial::constant(R, 1);
  if (f.is_zero()) return f;
  const std::uint32_t p = R.p();
  if (e >= p) return poly_mul(poly_frob_twist(poly_pow(f, e / p)), poly_pow(f, e % p));
  Polynomial acc = Polynomial::constant(R, 1);
  Polynomial base = f;
  while (e != 0) {
    if (e & 1) acc = poly_mul(acc, base);
    e >>= 1;
    if (e != 0) base = poly_mul(base, base);
  }
  return acc;
}

/// Plain square-and-multiply without the Frobenius shortcut; test oracle.
inline Polynomial poly_pow_binary(const Polynomial& f, std::uint64_t e) {
  Polynomial acc = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e != 0) {
    if (e & 1) acc = poly_mul(acc, base);
    e >>= 1;
    if (e != 0) base = poly_mul(base, base);
  }
  return acc;
}

inline FieldElem poly_coeff(const Polynomial& f, std::span<const int> exponents) {
  if (exponents.size() != static_cast<std::size_t>(f.ring().nvars)) {
    throw UsageError("exponent vector length " + std::to_string(exponents.size()) + " does not match " +
                     std::to_string(f.ring().nvars) + " variables");
  }
  for (int e : exponents) {
    if (e < 0) throw UsageError("negative exponent in coefficient query");
    if (e > std::numeric_limits<std::uint16_t>::max()) return FieldElem{0, f.ring().p()};
  }
  return FieldElem{f.coeff(Monomial::from_exponents(exponents)), f.ring().p()};
}

struct DegreeClass {
  enum class Kind { homogeneous, inhomogeneous, zero };
  Kind kind;
  int degree = -1;  // meaningful for homogeneous only
};

inline DegreeClass poly_degree_check(const Polynomial& f) {
  if (f.is_zero()) return {DegreeClass::Kind::zero, -1};
  if (f.is_homogeneous()) return {DegreeClass::Kind::homogeneous, f.degree()};
  return {DegreeClass::Kind::inhomogeneous, -1};
}

/// Default printing with variables x0, x1, ...; the parser owns named output.
inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coeff != 1 || t.mono.is_one()) {
      os << t.coeff;
      wrote = true;
    }
    for (int i = 0; i < f.ring().nvars; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << i;
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
      wrote = true;
    }
  }
  return os;
}

}  // namespace hwfrob
