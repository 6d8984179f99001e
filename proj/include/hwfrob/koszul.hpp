#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hwfrob/lifting.hpp"

namespace hwfrob {

/// Strictly increasing 0-based indices j_1 < ... < j_i into the generators.
struct KoszulIndex {
  std::vector<int> indices;

  friend bool operator==(const KoszulIndex&, const KoszulIndex&) = default;
  friend auto operator<=>(const KoszulIndex&, const KoszulIndex&) = default;
};

/// All i-subsets of {0, ..., t-1} in lexicographic order.
inline std::vector<KoszulIndex> koszul_indices(int t, int i) {
  std::vector<KoszulIndex> out;
  if (i < 0 || i > t) return out;
  std::vector<int> cur(static_cast<std::size_t>(i));
  for (int k = 0; k < i; ++k) cur[static_cast<std::size_t>(k)] = k;
  while (true) {
    out.push_back({cur});
    int k = i - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == t - i + k) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < i; ++m) cur[static_cast<std::size_t>(m)] = cur[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

/// K_i = ⊕_{|J| = i} S(-d_J) with φ_i(e_J) = Σ_k (-1)^{k-1} f_{j_k} e_{J \ j_k}.
struct KoszulComplex {
  std::vector<Polynomial> generators;
  std::vector<std::vector<KoszulIndex>> bases;  // bases[i] for i = 0..t
  std::vector<GradedHomomorphism> maps;         // maps[i-1] = φ_i

  int length() const noexcept { return static_cast<int>(maps.size()); }

  GradedFreeModule module(int i) const {
    if (i == 0) return GradedFreeModule{{0}};
    return maps.at(static_cast<std::size_t>(i - 1)).source();
  }

  /// The same complex viewed as a resolution (exact when f is regular).
  FreeResolution as_resolution() const {
    FreeResolution R;
    R.ring = generators.front().ring();
    R.generators = generators;
    R.maps = maps;
    return R;
  }
};

inline KoszulComplex koszul_complex(std::span<const Polynomial> f) {
  if (f.empty()) throw InputError("koszul_complex: no generators");
  const PolyRing R = f.front().ring();
  std::vector<int> deg;
  for (const auto& g : f) {
    if (!(g.ring() == R)) throw UsageError("koszul_complex: generators from different rings");
    if (g.is_zero()) throw InputError("koszul_complex: zero generator");
    if (!g.is_homogeneous()) throw InputError("koszul_complex: generator is not homogeneous");
    deg.push_back(g.degree());
  }
  const int t = static_cast<int>(f.size());
  KoszulComplex K;
  K.generators.assign(f.begin(), f.end());
  for (int i = 0; i <= t; ++i) K.bases.push_back(koszul_indices(t, i));
  auto twist = [&](const KoszulIndex& J) {
    int d = 0;
    for (int j : J.indices) d += deg[static_cast<std::size_t>(j)];
    return d;
  };
  const std::uint32_t minus_one = R.field.neg(1);
  for (int i = 1; i <= t; ++i) {
    const auto& src = K.bases[static_cast<std::size_t>(i)];
    const auto& tgt = K.bases[static_cast<std::size_t>(i - 1)];
    GradedFreeModule S, T;
    for (const auto& J : src) S.twists.push_back(twist(J));
    for (const auto& J : tgt) T.twists.push_back(twist(J));
    std::vector<Polynomial> entries(src.size() * tgt.size(), Polynomial(R));
    for (std::size_t a = 0; a < src.size(); ++a) {
      const auto& J = src[a].indices;
      for (std::size_t k = 0; k < J.size(); ++k) {
        KoszulIndex hat{J};
        hat.indices.erase(hat.indices.begin() + static_cast<std::ptrdiff_t>(k));
        const auto pos = static_cast<std::size_t>(std::lower_bound(tgt.begin(), tgt.end(), hat) - tgt.begin());
        const Polynomial& g = f[static_cast<std::size_t>(J[k])];
        entries[a * tgt.size() + pos] = (k % 2 == 0) ? g : poly_scale(g, minus_one);
      }
    }
    K.maps.emplace_back(R, std::move(S), std::move(T), std::move(entries));
  }
  return K;
}

/// ψ_i(e_J) = (f_{j_1} ... f_{j_i})^{n-1} e_J, a chain map from the Koszul
/// complex of (f_j^n) to that of (f_j). maps[0] is ψ_0 = [1].
inline ChainLift koszul_lift(std::span<const Polynomial> f, int n) {
  if (n <= 0) throw InputError("koszul_lift: exponent must be positive");
  const KoszulComplex K = koszul_complex(f);
  const PolyRing R = f.front().ring();
  ChainLift out;
  out.maps.push_back(GradedHomomorphism::identity(R, K.module(0)));
  for (int i = 1; i <= K.length(); ++i) {
    const auto& basis = K.bases[static_cast<std::size_t>(i)];
    const GradedFreeModule tgt = K.module(i);
    GradedFreeModule src = tgt;
    for (auto& d : src.twists) d *= n;
    std::vector<Polynomial> entries(basis.size() * basis.size(), Polynomial(R));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      Polynomial prod = Polynomial::constant(R, 1);
      for (int j : basis[a].indices) prod = poly_mul(prod, f[static_cast<std::size_t>(j)]);
      entries[a * basis.size() + a] = poly_pow(prod, static_cast<std::uint64_t>(n - 1));
    }
    out.maps.emplace_back(R, std::move(src), tgt, std::move(entries));
  }
  return out;
}

/// Koszul complex of (f_j^n); for n = p this is the Frobenius twist.
inline KoszulComplex koszul_power_complex(std::span<const Polynomial> f, int n) {
  std::vector<Polynomial> fn;
  for (const auto& g : f) fn.push_back(poly_pow(g, static_cast<std::uint64_t>(n)));
  return koszul_complex(fn);
}

/// Leading monomials of a reduced Gröbner basis of the ideal.
inline std::vector<Monomial> leading_monomials(std::span<const Polynomial> f, const MonomialOrder& ord) {
  std::vector<ModuleElement> gens;
  for (const auto& g : f) {
    if (!g.is_zero()) gens.push_back(ModuleElement{{g}});
  }
  const auto mord = ModuleOrder::position_over_term(ord);
  std::vector<Monomial> out;
  for (const auto& g : mod_buchberger(gens, mord)) out.push_back(g.components[0].leading_term(ord).mono);
  return out;
}

/// Krull dimension of S/(f): the largest set of variables containing the
/// support of no leading monomial. -1 for the unit ideal.
inline int krull_dimension(std::span<const Polynomial> f) {
  if (f.empty()) throw UsageError("krull_dimension: no generators");
  const int n = f.front().ring().nvars;
  const auto lms = leading_monomials(f, MonomialOrder::grevlex(n));
  for (const auto& m : lms) {
    if (m.is_one()) return -1;
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (int v = 0; v < n && inside; ++v) {
        if (m.exp[static_cast<std::size_t>(v)] != 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

/// Homogeneous f_1, ..., f_t in S = K[x_0..x_r] form a regular sequence
/// iff dim S/(f) = r + 1 - t.
inline bool is_regular_sequence(std::span<const Polynomial> f, int r) {
  if (f.empty()) throw InputError("is_regular_sequence: no generators");
  if (static_cast<int>(f.size()) > r + 1) throw InputError("is_regular_sequence: more generators than variables");
  if (f.front().ring().nvars != r + 1) throw UsageError("is_regular_sequence: ring does not have r+1 variables");
  for (const auto& g : f) {
    if (g.is_zero()) throw InputError("is_regular_sequence: zero generator");
    if (!g.is_homogeneous()) throw InputError("is_regular_sequence: generator is not homogeneous");
  }
  return krull_dimension(f) == r + 1 - static_cast<int>(f.size());
}

}  // namespace hwfrob
