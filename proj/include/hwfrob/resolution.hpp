#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hwfrob/freemod.hpp"

namespace hwfrob {

/// 0 <- S <- F_1 <- ... <- F_L <- 0 with maps[i-1] = φ_i : F_i -> F_{i-1}.
struct FreeResolution {
  PolyRing ring;
  std::vector<Polynomial> generators;
  std::vector<GradedHomomorphism> maps;

  int length() const noexcept { return static_cast<int>(maps.size()); }

  /// F_i; F_0 = S and F_i = 0 beyond the length.
  GradedFreeModule module(int i) const {
    if (i < 0) throw UsageError("negative resolution index");
    if (i == 0) return GradedFreeModule{{0}};
    if (i > length()) return GradedFreeModule{};
    return maps[static_cast<std::size_t>(i - 1)].source();
  }

  /// φ_i; the zero map outside 1..L.
  GradedHomomorphism map(int i) const {
    if (i >= 1 && i <= length()) return maps[static_cast<std::size_t>(i - 1)];
    if (i < 1) throw UsageError("resolution maps start at index 1");
    return GradedHomomorphism::zero(ring, module(i), module(i - 1));
  }
};

namespace detail {

/// Row-major working matrix used while pruning.
struct WorkMatrix {
  std::vector<int> source, target;
  std::vector<std::vector<Polynomial>> rows;

  const Polynomial& at(int k, int l) const { return rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; }
};

/// Removes unit entries: for a unit A_i[k][l] = c, clear column l by row
/// operations with row k, then split off the trivial summand e_k -> e_l.
/// Row k and column l of A_i, row l of A_{i-1} and column k of A_{i+1}
/// disappear.
inline void minimalize(const PolyRing& R, std::vector<WorkMatrix>& A) {
  const PrimeField& F = R.field;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < A.size() && !changed; ++i) {
      auto& M = A[i];
      for (int k = 0; k < static_cast<int>(M.rows.size()) && !changed; ++k) {
        for (int l = 0; l < static_cast<int>(M.target.size()) && !changed; ++l) {
          const Polynomial& e = M.at(k, l);
          if (!e.is_unit()) continue;
          const std::uint32_t cinv = F.inv(e.terms()[0].coeff);
          const auto pivot = M.rows[static_cast<std::size_t>(k)];
          for (int m = 0; m < static_cast<int>(M.rows.size()); ++m) {
            if (m == k) continue;
            const Polynomial& a = M.at(m, l);
            if (a.is_zero()) continue;
            const Polynomial factor = poly_scale(a, cinv);
            auto& row = M.rows[static_cast<std::size_t>(m)];
            for (std::size_t c = 0; c < row.size(); ++c) {
              if (pivot[c].is_zero()) continue;
              row[c] = poly_sub(row[c], poly_mul(factor, pivot[c]));
            }
          }
          // In the basis where e_l is replaced by the image of e_k, row l of
          // A_{i-1} is zero; the other rows are unchanged.
          if (i > 0) {
            auto& P = A[i - 1];
            P.rows.erase(P.rows.begin() + l);
            P.source.erase(P.source.begin() + l);
          }
          M.rows.erase(M.rows.begin() + k);
          M.source.erase(M.source.begin() + k);
          for (auto& row : M.rows) row.erase(row.begin() + l);
          M.target.erase(M.target.begin() + l);
          if (i + 1 < A.size()) {
            auto& N = A[i + 1];
            for (auto& row : N.rows) row.erase(row.begin() + k);
            N.target.erase(N.target.begin() + k);
          }
          changed = true;
        }
      }
    }
  }
}

inline bool lex_greater_natural(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.exp[static_cast<std::size_t>(i)] != b.exp[static_cast<std::size_t>(i)]) {
      return a.exp[static_cast<std::size_t>(i)] > b.exp[static_cast<std::size_t>(i)];
    }
  }
  return false;
}

}  // namespace detail

/// minimal prunes the Schreyer syzygies and removes unit entries, giving
/// the unique minimal resolution. schreyer_frame keeps every Schreyer
/// syzygy except those with a repeated leading term and skips pruning of
/// unit entries.
enum class ResolutionShape { minimal, schreyer_frame };

/// Graded free resolution of S/I, I = (gens) homogeneous, by Schreyer's
/// construction. The Gröbner basis of each level is sorted by position and
/// then lex-descending leading monomial, which makes the iteration stop
/// after at most n steps.
inline FreeResolution free_resolution(std::span<const Polynomial> gens, const MonomialOrder& ord,
                                      ResolutionShape shape = ResolutionShape::minimal) {
  if (gens.empty()) throw InputError("free_resolution: no generators");
  const PolyRing R = gens.front().ring();
  if (ord.nvars() != R.nvars) throw UsageError("monomial order and ring disagree on the variable count");
  std::vector<ModuleElement> input;
  for (const auto& f : gens) {
    if (!(f.ring() == R)) throw UsageError("generators from different rings");
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw InputError("free_resolution: generator is not homogeneous");
    input.push_back(ModuleElement{{f}});
  }
  if (input.empty()) throw InputError("free_resolution: the ideal is zero");

  auto ord0 = std::make_shared<const ModuleOrder>(ModuleOrder::position_over_term(ord));
  std::vector<int> tw0{0};
  auto G = mod_buchberger(input, *ord0, tw0);
  for (const auto& g : G) {
    if (g.components[0].is_unit()) throw InputError("free_resolution: the ideal is the unit ideal");
  }
  std::vector<ModTerm> lead_terms;
  for (const auto& g : G) lead_terms.push_back(*leading_term(g, *ord0));
  {
    std::vector<std::size_t> perm(G.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return detail::lex_greater_natural(lead_terms[a].mm.mono, lead_terms[b].mm.mono);
    });
    std::vector<ModuleElement> G2;
    std::vector<ModTerm> L2;
    for (auto i : perm) {
      G2.push_back(G[i]);
      L2.push_back(lead_terms[i]);
    }
    G = std::move(G2);
    lead_terms = std::move(L2);
  }

  std::vector<detail::WorkMatrix> work;
  std::vector<int> prev_twists{0};
  std::vector<int> twists;
  for (const auto& g : G) twists.push_back(g.components[0].degree());
  std::vector<ModMono> frame;
  for (const auto& lt : lead_terms) frame.push_back(lt.mm);
  std::shared_ptr<const ModuleOrder> ord_prev = ord0;

  const int max_levels = R.nvars + 1;
  while (!G.empty()) {
    if (static_cast<int>(work.size()) >= max_levels) throw InternalError("resolution did not terminate");
    detail::WorkMatrix M;
    M.source = twists;
    M.target = prev_twists;
    for (const auto& g : G) M.rows.push_back(g.components);
    work.push_back(std::move(M));

    auto syz = schreyer_syzygies(
        G, *ord_prev, shape == ResolutionShape::minimal ? SyzygyPruning::divisible : SyzygyPruning::duplicates);
    auto ord_here = std::make_shared<const ModuleOrder>(ModuleOrder::schreyer(ord_prev, frame));
    std::stable_sort(syz.begin(), syz.end(), [](const LeadedSyzygy& a, const LeadedSyzygy& b) {
      if (a.lead.pos != b.lead.pos) return a.lead.pos < b.lead.pos;
      return detail::lex_greater_natural(a.lead.mono, b.lead.mono);
    });
    std::vector<int> next_twists;
    std::vector<ModMono> next_frame;
    std::vector<ModuleElement> next_G;
    for (auto& s : syz) {
      next_twists.push_back(s.lead.mono.degree() + twists[static_cast<std::size_t>(s.lead.pos)]);
      next_frame.push_back(s.lead);
      next_G.push_back(std::move(s.syzygy));
    }
    prev_twists = std::move(twists);
    twists = std::move(next_twists);
    frame = std::move(next_frame);
    G = std::move(next_G);
    ord_prev = std::move(ord_here);
  }

  if (shape == ResolutionShape::minimal) detail::minimalize(R, work);
  while (!work.empty() && work.back().rows.empty()) work.pop_back();
  if (static_cast<int>(work.size()) > R.nvars) throw InternalError("resolution longer than the variable count");

  FreeResolution res;
  res.ring = R;
  res.generators.assign(gens.begin(), gens.end());
  for (auto& M : work) {
    std::vector<Polynomial> entries;
    for (auto& row : M.rows) {
      for (auto& e : row) entries.push_back(std::move(e));
    }
    res.maps.emplace_back(R, GradedFreeModule{M.source}, GradedFreeModule{M.target}, std::move(entries));
  }
  return res;
}

/// Entrywise p-th power of every map, twists multiplied by p; again a
/// resolution, of the ideal generated by the p-th powers.
inline FreeResolution frobenius_resolution(const FreeResolution& R) {
  FreeResolution out;
  out.ring = R.ring;
  for (const auto& f : R.generators) out.generators.push_back(poly_frob_twist(f));
  for (const auto& A : R.maps) out.maps.push_back(hom_frob_twist(A));
  return out;
}

/// A_{i+1}·A_i = 0 for every consecutive pair, including φ_1 against S.
inline bool is_complex(const FreeResolution& R) {
  for (int i = 1; i < R.length(); ++i) {
    if (!hom_compose(R.map(i), R.map(i + 1)).is_zero()) return false;
  }
  return true;
}

/// Σ_i (-1)^i Σ_j dim S(-d_ij)_d; equals dim (S/I)_d when the complex is exact.
inline std::int64_t resolution_hilbert_sum(const FreeResolution& R, int d) {
  std::int64_t total = 0;
  for (int i = 0; i <= R.length(); ++i) {
    std::int64_t level = 0;
    for (int t : R.module(i).twists) level += static_cast<std::int64_t>(monomial_count(R.ring.nvars, d - t));
    total += (i % 2 == 0) ? level : -level;
  }
  return total;
}

/// Betti table as (level, twist) -> count pairs, level 0 = S.
inline std::vector<std::vector<int>> resolution_twists(const FreeResolution& R) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i <= R.length(); ++i) {
    auto t = R.module(i).twists;
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hwfrob
