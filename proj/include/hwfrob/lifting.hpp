#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hwfrob/resolution.hpp"

namespace hwfrob {

enum class LiftMethod {
  dense,   // per-degree flat arrays; the default
  sparse,  // generic module division; slower, used as a cross-check
};

/// The chain map C_i : F_i^{(p)} -> F_i over ψ_0 = identity of S, with
/// A_i^{(p)}·C_{i-1} = C_i·A_i for every i. maps[0] is C_0 = [1].
struct ChainLift {
  std::vector<GradedHomomorphism> maps;

  /// Largest number of terms in one entry of C_i.
  std::size_t max_terms(int i) const {
    if (i < 0 || i >= static_cast<int>(maps.size())) return 0;
    return maps[static_cast<std::size_t>(i)].max_terms();
  }
};

namespace detail {

/// Dense homogeneous slices of a module element in one fixed module degree.
class DenseElement {
 public:
  DenseElement(const MonomialOrder& ord, const std::vector<int>& twists, int module_degree,
               std::map<int, DegreeIndexer>& cache)
      : twists_(twists) {
    for (int t : twists_) {
      const int d = module_degree - t;
      if (d < 0) {
        idx_.push_back(nullptr);
        data_.emplace_back();
        continue;
      }
      auto it = cache.find(d);
      if (it == cache.end()) it = cache.emplace(d, DegreeIndexer(ord, d)).first;
      idx_.push_back(&it->second);
      data_.emplace_back(it->second.size(), 0u);
    }
  }

  int rank() const noexcept { return static_cast<int>(data_.size()); }
  const DegreeIndexer* indexer(int l) const { return idx_[static_cast<std::size_t>(l)]; }
  std::vector<std::uint32_t>& slot(int l) { return data_[static_cast<std::size_t>(l)]; }

  /// slot l += c * m * f with f homogeneous of the matching degree.
  void add_scaled(int l, const Polynomial& f, const Monomial& m, std::uint32_t c, const PrimeField& F) {
    if (f.is_zero() || c == 0) return;
    const auto* ix = idx_[static_cast<std::size_t>(l)];
    if (ix == nullptr) throw InternalError("lift: degree mismatch in dense slot");
    auto& v = data_[static_cast<std::size_t>(l)];
    for (const auto& t : f.terms()) {
      auto& s = v[ix->rank(t.mono * m)];
      s = F.fma(s, c, t.coeff);
    }
  }

  /// slot l += f * g for homogeneous f, g whose degrees add up to the slot's.
  void add_product(int l, const Polynomial& f, const Polynomial& g, const PrimeField& F) {
    if (f.is_zero() || g.is_zero()) return;
    const auto* ix = idx_[static_cast<std::size_t>(l)];
    if (ix == nullptr) throw InternalError("lift: degree mismatch in dense slot");
    auto& v = data_[static_cast<std::size_t>(l)];
    const auto& small = f.size() <= g.size() ? f : g;
    const auto& large = f.size() <= g.size() ? g : f;
    for (const auto& a : small.terms()) {
      for (const auto& b : large.terms()) {
        auto& s = v[ix->rank(a.mono * b.mono)];
        s = F.fma(s, a.coeff, b.coeff);
      }
    }
  }

  Polynomial to_polynomial(int l, const PolyRing& R) const {
    const auto* ix = idx_[static_cast<std::size_t>(l)];
    if (ix == nullptr) return Polynomial(R);
    const auto& v = data_[static_cast<std::size_t>(l)];
    std::vector<Term> terms;
    Monomial m = ix->first();
    for (std::uint64_t r = 0; r < ix->size(); ++r) {
      if (v[r] != 0) terms.push_back({m, v[r]});
      ix->next(m);
    }
    return Polynomial::from_terms(R, std::move(terms));
  }

 private:
  std::vector<int> twists_;
  std::vector<const DegreeIndexer*> idx_;
  std::vector<std::vector<std::uint32_t>> data_;
};

struct ImageBasis {
  std::vector<ModuleElement> basis;
  std::vector<std::vector<Polynomial>> transform;
  std::vector<ModTerm> leads;
  std::vector<int> degrees;  // module degree of each basis element
};

inline ImageBasis image_basis(const GradedHomomorphism& A, const ModuleOrder& ord) {
  std::vector<ModuleElement> rows;
  for (int k = 0; k < A.rows(); ++k) rows.push_back(A.row(k));
  auto gb = groebner_basis(rows, ord, true, A.target().twists);
  ImageBasis out;
  out.basis = std::move(gb.basis);
  out.transform = std::move(gb.transform);
  for (const auto& h : out.basis) {
    out.leads.push_back(*leading_term(h, ord));
    out.degrees.push_back(*h.module_degree(A.target().twists));
  }
  return out;
}

/// Writes w (an element of the image of A in one module degree) as a
/// combination of the rows of A by a dense sweep in position-over-term
/// order. Destroys w.
inline std::vector<Polynomial> lift_rows_dense(const GradedHomomorphism& A, const ImageBasis& H, int module_degree,
                                               DenseElement& w, const MonomialOrder& mono,
                                               std::map<int, DegreeIndexer>& cache) {
  const PolyRing& R = A.ring();
  const PrimeField& F = R.field;
  const auto& tgt = A.target().twists;
  const int ntarget = static_cast<int>(tgt.size());

  std::vector<std::vector<std::size_t>> by_pos(static_cast<std::size_t>(ntarget));
  for (std::size_t h = 0; h < H.basis.size(); ++h) by_pos[static_cast<std::size_t>(H.leads[h].mm.pos)].push_back(h);

  // Quotients q_h, dense in degree module_degree - deg(h).
  std::vector<std::vector<std::uint32_t>> quot(H.basis.size());
  std::vector<const DegreeIndexer*> qidx(H.basis.size(), nullptr);
  for (std::size_t h = 0; h < H.basis.size(); ++h) {
    const int d = module_degree - H.degrees[h];
    if (d < 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, DegreeIndexer(mono, d)).first;
    qidx[h] = &it->second;
    quot[h].assign(it->second.size(), 0u);
  }

  for (int l = 0; l < ntarget; ++l) {
    const auto* ix = w.indexer(l);
    if (ix == nullptr) continue;
    auto& v = w.slot(l);
    Monomial m = ix->first();
    for (std::uint64_t r = 0; r < ix->size(); ++r, ix->next(m)) {
      const std::uint32_t c = v[r];
      if (c == 0) continue;
      std::size_t hit = H.basis.size();
      for (auto h : by_pos[static_cast<std::size_t>(l)]) {
        if (H.leads[h].mm.mono.divides(m)) {
          hit = h;
          break;
        }
      }
      if (hit == H.basis.size()) throw InternalError("lift: element is not in the image");
      const Monomial q = m / H.leads[hit].mm.mono;
      const std::uint32_t coef = F.mul(c, F.inv(H.leads[hit].coeff));
      quot[hit][qidx[hit]->rank(q)] = F.add(quot[hit][qidx[hit]->rank(q)], coef);
      const auto& g = H.basis[hit];
      const std::uint32_t neg = F.neg(coef);
      for (int j = l; j < ntarget; ++j) w.add_scaled(j, g.components[static_cast<std::size_t>(j)], q, neg, F);
      if (v[r] != 0) throw InternalError("lift: leading coefficient did not cancel");
    }
  }

  // C row = Σ_h q_h T_h, dense per column.
  const auto& src = A.source().twists;
  DenseElement out(mono, src, module_degree, cache);
  for (std::size_t h = 0; h < H.basis.size(); ++h) {
    if (qidx[h] == nullptr) continue;
    const auto* ix = qidx[h];
    Monomial m = ix->first();
    for (std::uint64_t r = 0; r < ix->size(); ++r, ix->next(m)) {
      const std::uint32_t c = quot[h][r];
      if (c == 0) continue;
      for (int col = 0; col < static_cast<int>(src.size()); ++col) {
        out.add_scaled(col, H.transform[h][static_cast<std::size_t>(col)], m, c, F);
      }
    }
  }
  std::vector<Polynomial> row;
  for (int col = 0; col < static_cast<int>(src.size()); ++col) row.push_back(out.to_polynomial(col, R));
  return row;
}

}  // namespace detail

/// Lifts ψ_0 = id_S to a chain map from the Frobenius resolution Rp to R.
/// Each row A_i^{(p)}[k]·C_{i-1} lies in the image of A_i by exactness; it
/// is divided by a Gröbner basis of that image (position-over-term with
/// the given monomial order) and the quotients are pulled back to the rows
/// of A_i through the basis transform.
inline ChainLift lift_chain_map(const FreeResolution& Rp, const FreeResolution& R, const MonomialOrder& ord,
                                LiftMethod method = LiftMethod::dense) {
  if (!(Rp.ring == R.ring)) throw UsageError("lift: resolutions over different rings");
  if (Rp.length() != R.length()) throw UsageError("lift: resolutions of different length");
  const PolyRing& S = R.ring;
  const PrimeField& F = S.field;
  ChainLift out;
  out.maps.push_back(GradedHomomorphism::identity(S, R.module(0)));
  const ModuleOrder mord = ModuleOrder::position_over_term(ord);
  std::map<int, DegreeIndexer> cache;

  for (int i = 1; i <= R.length(); ++i) {
    const GradedHomomorphism A = R.map(i);
    const GradedHomomorphism Ap = Rp.map(i);
    const GradedHomomorphism& Cprev = out.maps.back();
    const auto H = detail::image_basis(A, mord);
    const auto& tgt = A.target().twists;
    std::vector<Polynomial> entries;
    for (int k = 0; k < Ap.rows(); ++k) {
      const int m = Ap.source().twists[static_cast<std::size_t>(k)];
      if (method == LiftMethod::dense) {
        detail::DenseElement w(ord, tgt, m, cache);
        for (int j = 0; j < Ap.cols(); ++j) {
          const auto& a = Ap.at(k, j);
          if (a.is_zero()) continue;
          for (int l = 0; l < Cprev.cols(); ++l) w.add_product(l, a, Cprev.at(j, l), F);
        }
        auto row = detail::lift_rows_dense(A, H, m, w, ord, cache);
        for (auto& e : row) entries.push_back(std::move(e));
        continue;
      }
      ModuleElement w = ModuleElement::zero(S, A.cols());
      for (int j = 0; j < Ap.cols(); ++j) {
        const auto& a = Ap.at(k, j);
        if (a.is_zero()) continue;
        for (int l = 0; l < Cprev.cols(); ++l) {
          if (Cprev.at(j, l).is_zero()) continue;
          w.components[static_cast<std::size_t>(l)] += poly_mul(a, Cprev.at(j, l));
        }
      }
      std::vector<Polynomial> row(static_cast<std::size_t>(A.rows()), Polynomial(S));
      if (!w.is_zero()) {
        if (H.basis.empty()) throw InternalError("lift: element is not in the image");
        auto dr = mod_divide(w, H.basis, mord);
        if (!dr.remainder.is_zero()) throw InternalError("lift: element is not in the image");
        for (std::size_t h = 0; h < H.basis.size(); ++h) {
          if (dr.quotients[h].is_zero()) continue;
          for (int col = 0; col < A.rows(); ++col) {
            const auto& t = H.transform[h][static_cast<std::size_t>(col)];
            if (t.is_zero()) continue;
            row[static_cast<std::size_t>(col)] += poly_mul(dr.quotients[h], t);
          }
        }
      }
      for (auto& e : row) entries.push_back(std::move(e));
    }
    out.maps.emplace_back(S, Ap.source(), A.source(), std::move(entries));
  }
  return out;
}

/// A_i^{(p)}·C_{i-1} == C_i·A_i for every level.
inline bool lift_commutes(const ChainLift& C, const FreeResolution& Rp, const FreeResolution& R) {
  for (int i = 1; i <= R.length(); ++i) {
    const auto lhs = hom_compose(C.maps[static_cast<std::size_t>(i - 1)], Rp.map(i));
    const auto rhs = hom_compose(R.map(i), C.maps[static_cast<std::size_t>(i)]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace hwfrob
