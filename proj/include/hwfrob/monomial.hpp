#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hwfrob/error.hpp"

namespace hwfrob {

/// Ambient variable capacity. Covers P^r for r <= 7.
inline constexpr int kMaxVars = 8;

/// Exponent vector x_0^{e_0} ... x_{n-1}^{e_{n-1}}; unused slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  static Monomial from_exponents(std::span<const int> e) {
    if (e.size() > static_cast<std::size_t>(kMaxVars)) {
      throw UsageError("too many variables: " + std::to_string(e.size()));
    }
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > std::numeric_limits<std::uint16_t>::max()) {
        throw UsageError("exponent out of range: " + std::to_string(e[i]));
      }
      m.exp[i] = static_cast<std::uint16_t>(e[i]);
    }
    return m;
  }

  static Monomial variable(int i) {
    Monomial m;
    m.exp[static_cast<std::size_t>(i)] = 1;
    return m;
  }

  int degree() const noexcept {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  bool is_one() const noexcept { return degree() == 0; }

  /// Highest variable index with a nonzero exponent plus one.
  int support_width() const noexcept {
    for (int i = kMaxVars; i > 0; --i) {
      if (exp[static_cast<std::size_t>(i - 1)] != 0) return i;
    }
    return 0;
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exp[i] > other.exp[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] + b.exp[i]);
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(a.exp[i] - b.exp[i]);
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Natural graded reverse lexicographic comparison with x_0 > x_1 > ...;
/// this is the canonical storage order of polynomials.
inline std::strong_ordering grevlex_natural(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a.exp[i] != b.exp[i]) return b.exp[i] <=> a.exp[i];
  }
  return std::strong_ordering::equal;
}

enum class OrderKind { grevlex, lex };

/// A monomial order on n variables: grevlex or lex after reordering the
/// variables by `precedence` (precedence[0] is the most significant one).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<int> precedence) : kind_(kind), prec_(std::move(precedence)) {
    std::vector<int> sorted = prec_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) throw UsageError("variable precedence is not a permutation");
    }
    if (prec_.empty() || prec_.size() > static_cast<std::size_t>(kMaxVars)) {
      throw UsageError("unsupported variable count " + std::to_string(prec_.size()));
    }
  }

  static MonomialOrder grevlex(int nvars) { return {OrderKind::grevlex, identity(nvars)}; }
  static MonomialOrder lex(int nvars) { return {OrderKind::lex, identity(nvars)}; }

  OrderKind kind() const noexcept { return kind_; }
  int nvars() const noexcept { return static_cast<int>(prec_.size()); }
  const std::vector<int>& precedence() const noexcept { return prec_; }

  /// True for grevlex with the identity precedence (the storage order).
  bool is_natural_grevlex() const noexcept {
    if (kind_ != OrderKind::grevlex) return false;
    for (std::size_t i = 0; i < prec_.size(); ++i) {
      if (prec_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    const int n = nvars();
    if (kind_ == OrderKind::lex) {
      for (int i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(prec_[static_cast<std::size_t>(i)]);
        if (a.exp[v] != b.exp[v]) return a.exp[v] <=> b.exp[v];
      }
      return std::strong_ordering::equal;
    }
    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (int i = n - 1; i >= 0; --i) {
      const auto v = static_cast<std::size_t>(prec_[static_cast<std::size_t>(i)]);
      if (a.exp[v] != b.exp[v]) return b.exp[v] <=> a.exp[v];
    }
    return std::strong_ordering::equal;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  static std::vector<int> identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<int> prec_;
};

/// Compares two monomials of the order's ambient length.
inline std::strong_ordering monomial_cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.support_width() > ord.nvars() || b.support_width() > ord.nvars()) {
    throw UsageError("monomial length exceeds the order's variable count");
  }
  return ord.compare(a, b);
}

/// Binomial coefficient C(n, k) for 0 <= k; zero when n < k or n < 0.
/// Saturates at UINT64_MAX.
inline std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Number of monomials of degree d in n variables.
inline std::uint64_t monomial_count(int nvars, int degree) {
  if (degree < 0) return 0;
  return binom(degree + nvars - 1, nvars - 1);
}

/// Dense indexing of the monomials of one fixed degree: rank 0 is the
/// largest monomial under the order, rank size()-1 the smallest. Lets
/// homogeneous polynomials live in flat arrays.
class DegreeIndexer {
 public:
  DegreeIndexer(const MonomialOrder& ord, int degree)
      : kind_(ord.kind()), n_(ord.nvars()), degree_(degree), prec_(ord.precedence()) {
    size_ = monomial_count(n_, degree_);
    const int rows = degree_ + n_ + 1;
    table_.assign(static_cast<std::size_t>(std::max(rows, 1) * (n_ + 1)), 0);
    for (int a = 0; a < rows; ++a) {
      for (int b = 0; b <= n_; ++b) table_[static_cast<std::size_t>(a * (n_ + 1) + b)] = binom(a, b);
    }
  }

  int degree() const noexcept { return degree_; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t rank(const Monomial& m) const noexcept {
    std::array<int, kMaxVars> key{};
    for (int i = 0; i < n_; ++i) key[i] = m.exp[static_cast<std::size_t>(prec_[static_cast<std::size_t>(i)])];
    std::uint64_t r = 0;
    if (kind_ == OrderKind::grevlex) {
      // Descending grevlex = ascending lex on (k_{n-1}, ..., k_1).
      int rem = degree_;
      for (int v = n_ - 1; v >= 1; --v) {
        const int e = key[v];
        r += C(rem + v, v) - C(rem - e + v, v);
        rem -= e;
      }
    } else {
      int rem = degree_;
      for (int v = 0; v < n_ - 1; ++v) {
        const int e = key[v];
        const int m = n_ - v - 1;
        if (rem - e >= 1) r += C(rem - e - 1 + m, m);
        rem -= e;
      }
    }
    return r;
  }

  Monomial first() const noexcept {
    std::array<int, kMaxVars> key{};
    key[0] = degree_;
    return from_key(key);
  }

  /// Advances to the next smaller monomial; false at the end.
  bool next(Monomial& m) const noexcept {
    std::array<int, kMaxVars> key{};
    for (int i = 0; i < n_; ++i) key[i] = m.exp[static_cast<std::size_t>(prec_[static_cast<std::size_t>(i)])];
    if (kind_ == OrderKind::grevlex) {
      for (int v = 1; v < n_; ++v) {
        if (key[0] >= 1) {
          ++key[v];
          --key[0];
          m = from_key(key);
          return true;
        }
        key[0] = key[v];
        key[v] = 0;
      }
      return false;
    }
    for (int v = n_ - 2; v >= 0; --v) {
      if (key[v] > 0) {
        int tail = 0;
        for (int w = v + 1; w < n_; ++w) {
          tail += key[w];
          key[w] = 0;
        }
        --key[v];
        key[v + 1] = tail + 1;
        m = from_key(key);
        return true;
      }
    }
    return false;
  }

 private:
  std::uint64_t C(int a, int b) const noexcept {
    if (a < 0 || b < 0 || a < b) return 0;
    return table_[static_cast<std::size_t>(a * (n_ + 1) + b)];
  }

  Monomial from_key(const std::array<int, kMaxVars>& key) const noexcept {
    Monomial m;
    for (int i = 0; i < n_; ++i) {
      m.exp[static_cast<std::size_t>(prec_[static_cast<std::size_t>(i)])] = static_cast<std::uint16_t>(key[i]);
    }
    return m;
  }

  OrderKind kind_;
  int n_;
  int degree_;
  std::vector<int> prec_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> table_;
};

}  // namespace hwfrob
