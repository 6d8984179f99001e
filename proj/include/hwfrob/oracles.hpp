#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hwfrob/fpmatrix.hpp"
#include "hwfrob/freemod.hpp"

namespace hwfrob {

/// Dense univariate polynomials over F_p, ascending coefficients, no
/// trailing zeros (the zero polynomial is empty).
namespace upoly {

using Poly = std::vector<std::uint32_t>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly from_ints(const PrimeField& F, std::span<const std::int64_t> c) {
  Poly a;
  for (auto v : c) a.push_back(F.reduce(v));
  return trim(std::move(a));
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
  return trim(std::move(c));
}

inline Poly scale(const PrimeField& F, const Poly& a, std::uint32_t s) {
  Poly c = a;
  for (auto& v : c) v = F.mul(v, s);
  return trim(std::move(c));
}

inline Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.fma(c[i + j], a[i], b[j]);
  }
  return trim(std::move(c));
}

inline Poly pow(const PrimeField& F, Poly a, std::uint64_t e) {
  Poly acc{1};
  while (e != 0) {
    if (e & 1) acc = mul(F, acc, a);
    e >>= 1;
    if (e != 0) a = mul(F, a, a);
  }
  return acc;
}

inline Poly derivative(const PrimeField& F, const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(F.mul(F.reduce(static_cast<std::int64_t>(i)), a[i]));
  return trim(std::move(d));
}

inline Poly mod(const PrimeField& F, Poly a, const Poly& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  const std::uint32_t inv = F.inv(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    const std::uint32_t c = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    a = trim(std::move(a));
  }
  return a;
}

inline Poly gcd(const PrimeField& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(F, a, F.inv(a.back()));
  return a;
}

}  // namespace upoly

/// y^2 + h(x) y = k(x) over F_p, coefficients ascending.
struct AffineHyperellipticModel {
  PrimeField field;
  std::vector<std::int64_t> h;
  std::vector<std::int64_t> k;
};

/// k + h^2/4; p odd.
inline upoly::Poly completed_square(const AffineHyperellipticModel& m) {
  const PrimeField& F = m.field;
  if (F.modulus() == 2) throw UsageError("hyperelliptic oracle: characteristic 2 is unsupported");
  const auto h = upoly::from_ints(F, m.h);
  const auto k = upoly::from_ints(F, m.k);
  return upoly::add(F, k, upoly::scale(F, upoly::mul(F, h, h), F.inv(4)));
}

/// g with deg f = 2g+1 or 2g+2 after completing the square.
inline int hyperelliptic_genus(const AffineHyperellipticModel& m) {
  const int d = upoly::degree(completed_square(m));
  if (d < 3) throw InputError("hyperelliptic oracle: degree of f must be at least 3");
  return (d - 1) / 2;
}

/// Cartier-Manin matrix: with y^2 = f(x) and f^{(p-1)/2} = Σ c_k x^k,
/// entry (i, j) = c_{ip - j} for 1 <= i, j <= g.
inline FpMatrix hyperelliptic_hw(const AffineHyperellipticModel& m) {
  const PrimeField& F = m.field;
  const auto f = completed_square(m);
  const int d = upoly::degree(f);
  if (d < 3) throw InputError("hyperelliptic oracle: degree of f must be at least 3");
  if (upoly::degree(upoly::gcd(F, f, upoly::derivative(F, f))) > 0) {
    throw InputError("hyperelliptic oracle: f is not squarefree");
  }
  const int g = (d - 1) / 2;
  const std::uint32_t p = F.modulus();
  const auto c = upoly::pow(F, f, (p - 1) / 2);
  FpMatrix M(F, g, g);
  for (int i = 1; i <= g; ++i) {
    for (int j = 1; j <= g; ++j) {
      const long idx = static_cast<long>(i) * p - j;
      if (idx >= 0 && idx < static_cast<long>(c.size())) M.set(i - 1, j - 1, c[static_cast<std::size_t>(idx)]);
    }
  }
  return M;
}

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p.
struct WeierstrassCurve {
  PrimeField field;
  std::int64_t a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

  std::uint32_t discriminant() const {
    const PrimeField& F = field;
    const auto A1 = F.reduce(a1), A2 = F.reduce(a2), A3 = F.reduce(a3), A4 = F.reduce(a4), A6 = F.reduce(a6);
    const auto b2 = F.add(F.mul(A1, A1), F.mul(4, A2));
    const auto b4 = F.add(F.mul(2, A4), F.mul(A1, A3));
    const auto b6 = F.add(F.mul(A3, A3), F.mul(4, A6));
    const auto b8 = F.sub(F.add(F.add(F.mul(F.mul(A1, A1), A6), F.mul(F.mul(4, A2), A6)), F.mul(F.mul(A2, A3), A3)),
                          F.add(F.mul(F.mul(A1, A3), A4), F.mul(A4, A4)));
    // Δ = -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
    std::uint32_t D = F.neg(F.mul(F.mul(b2, b2), b8));
    D = F.sub(D, F.mul(8, F.pow(b4, 3)));
    D = F.sub(D, F.mul(27, F.mul(b6, b6)));
    D = F.add(D, F.mul(9, F.mul(F.mul(b2, b4), b6)));
    return D;
  }

  /// y^2 z + a1 xyz + a3 y z^2 - x^3 - a2 x^2 z - a4 x z^2 - a6 z^3 in F_p[x, y, z].
  Polynomial homogenized() const {
    const PolyRing R(field, 3);
    auto mono = [](int a, int b, int c) { return Monomial::from_exponents(std::vector<int>{a, b, c}); };
    std::vector<Term> t{{mono(0, 2, 1), 1},
                        {mono(1, 1, 1), field.reduce(a1)},
                        {mono(0, 1, 2), field.reduce(a3)},
                        {mono(3, 0, 0), field.neg(1)},
                        {mono(2, 0, 1), field.neg(field.reduce(a2))},
                        {mono(1, 0, 2), field.neg(field.reduce(a4))},
                        {mono(0, 0, 3), field.neg(field.reduce(a6))}};
    return Polynomial::from_terms(R, std::move(t));
  }
};

/// #E(F_p) including the point at infinity, by enumerating x and counting
/// roots of the quadratic in y.
inline std::uint64_t elliptic_point_count(const WeierstrassCurve& E) {
  const PrimeField& F = E.field;
  const std::uint32_t p = F.modulus();
  if (p > 10000) throw UsageError("elliptic oracle: p too large for naive counting");
  if (E.discriminant() == 0) throw InputError("elliptic oracle: singular curve");
  const auto a1 = F.reduce(E.a1), a2 = F.reduce(E.a2), a3 = F.reduce(E.a3), a4 = F.reduce(E.a4), a6 = F.reduce(E.a6);
  std::uint64_t count = 1;
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t rhs = F.add(F.add(F.add(F.pow(x, 3), F.mul(a2, F.mul(x, x))), F.mul(a4, x)), a6);
    const std::uint32_t b = F.add(F.mul(a1, x), a3);
    if (p == 2) {
      for (std::uint32_t y = 0; y < 2; ++y) count += F.add(F.mul(y, y), F.mul(b, y)) == rhs ? 1 : 0;
      continue;
    }
    const std::uint32_t disc = F.add(F.mul(b, b), F.mul(4, rhs));
    if (disc == 0) count += 1;
    else count += F.pow(disc, (p - 1) / 2) == 1 ? 2 : 0;
  }
  return count;
}

/// a_p = p + 1 - #E(F_p).
inline std::int64_t elliptic_ap(const WeierstrassCurve& E) {
  const auto n = static_cast<std::int64_t>(elliptic_point_count(E));
  const std::int64_t ap = static_cast<std::int64_t>(E.field.modulus()) + 1 - n;
  if (static_cast<double>(ap) * static_cast<double>(ap) > 4.0 * E.field.modulus()) {
    throw InternalError("elliptic oracle: Hasse bound violated");
  }
  return ap;
}

/// dim_K (S/I)_d as the number of degree-d monomials outside the leading
/// ideal of a Gröbner basis. Refuses degrees above `bound`.
inline std::uint64_t brute_graded_dim(std::span<const Polynomial> gens, int d, int bound = 12) {
  if (d > bound) throw UsageError("brute_graded_dim: degree " + std::to_string(d) + " exceeds the bound " + std::to_string(bound));
  if (gens.empty()) throw UsageError("brute_graded_dim: no ring given");
  const int n = gens.front().ring().nvars;
  if (d < 0) return 0;
  const MonomialOrder ord = MonomialOrder::grevlex(n);
  std::vector<ModuleElement> in;
  for (const auto& g : gens) {
    if (!g.is_zero()) in.push_back(ModuleElement{{g}});
  }
  std::vector<Monomial> lms;
  for (const auto& g : mod_buchberger(in, ModuleOrder::position_over_term(ord))) {
    lms.push_back(g.components[0].leading_term(ord).mono);
  }
  std::uint64_t count = 0;
  DegreeIndexer ix(ord, d);
  Monomial m = ix.first();
  for (std::uint64_t i = 0; i < ix.size(); ++i, ix.next(m)) {
    bool standard = true;
    for (const auto& l : lms) {
      if (l.divides(m)) {
        standard = false;
        break;
      }
    }
    count += standard ? 1 : 0;
  }
  return count;
}

}  // namespace hwfrob
