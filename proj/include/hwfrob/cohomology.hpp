#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "hwfrob/fpmatrix.hpp"
#include "hwfrob/freemod.hpp"

namespace hwfrob {

/// x_0^{l_0} ... x_r^{l_r} e_slot with every l_i <= -1.
struct LaurentBasisElement {
  int slot = 0;
  std::vector<int> exponents;

  int degree() const noexcept {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }

  friend bool operator==(const LaurentBasisElement&, const LaurentBasisElement&) = default;
};

/// Basis of H^r(P^r, ⊕_j O(-d_j)): slot-major, then ascending lex on the
/// exponent tuples. Slot j contributes C(d_j - 1, r) elements.
class CohomologySpace {
 public:
  CohomologySpace(GradedFreeModule module, int r) : module_(std::move(module)), r_(r) {
    if (r < 1 || r + 1 > kMaxVars) throw UsageError("unsupported projective dimension " + std::to_string(r));
    offsets_.push_back(0);
    for (int d : module_.twists) {
      offsets_.push_back(offsets_.back() + static_cast<int>(slot_size(d)));
      if (offsets_.back() > (1 << 24)) throw UsageError("cohomology space too large");
    }
  }

  const GradedFreeModule& module() const noexcept { return module_; }
  int r() const noexcept { return r_; }
  int dim() const noexcept { return offsets_.back(); }
  int slot_offset(int j) const { return offsets_.at(static_cast<std::size_t>(j)); }

  std::uint64_t slot_size(int d) const { return d - r_ - 1 < 0 ? 0 : monomial_count(r_ + 1, d - r_ - 1); }

  /// Index of x^l e_slot given u = -l - 1 (see shifted).
  int index_of(int slot, const Monomial& shifted) const {
    const int d = module_.twists[static_cast<std::size_t>(slot)];
    return slot_offset(slot) + static_cast<int>(indexer(d - r_ - 1).rank(shifted));
  }

  std::vector<LaurentBasisElement> basis() const {
    std::vector<LaurentBasisElement> out;
    for (int j = 0; j < module_.rank(); ++j) {
      const int d = module_.twists[static_cast<std::size_t>(j)];
      if (d - r_ - 1 < 0) continue;
      const DegreeIndexer& ix = indexer(d - r_ - 1);
      Monomial u = ix.first();
      for (std::uint64_t k = 0; k < ix.size(); ++k, ix.next(u)) {
        LaurentBasisElement b{j, {}};
        for (int i = 0; i <= r_; ++i) b.exponents.push_back(-static_cast<int>(u.exp[static_cast<std::size_t>(i)]) - 1);
        out.push_back(std::move(b));
      }
    }
    return out;
  }

  /// u = -l - 1 as a monomial; lex-descending order on u is ascending lex on l.
  static Monomial shifted(const std::vector<int>& exponents) {
    Monomial u;
    for (std::size_t i = 0; i < exponents.size(); ++i) u.exp[i] = static_cast<std::uint16_t>(-exponents[i] - 1);
    return u;
  }

 private:
  const DegreeIndexer& indexer(int d) const {
    for (const auto& ix : cache_) {
      if (ix.degree() == d) return ix;
    }
    cache_.emplace_back(MonomialOrder::lex(r_ + 1), d);
    return cache_.back();
  }

  GradedFreeModule module_;
  int r_;
  std::vector<int> offsets_;
  mutable std::deque<DegreeIndexer> cache_;
};

inline CohomologySpace twisted_basis(const GradedFreeModule& M, int r) { return CohomologySpace(M, r); }

/// Σ_j C(d_j - 1, r), the dimension of H^r(P^r, ⊕_j O(-d_j)).
inline std::uint64_t top_cohomology_dim(const GradedFreeModule& M, int r) {
  std::uint64_t n = 0;
  for (int d : M.twists) n += binom(d - 1, r);
  return n;
}

/// Matrix of H^r(A): rows indexed by the source basis, columns by the
/// target basis. Products with a nonnegative exponent are dropped.
inline FpMatrix induced_map(const GradedHomomorphism& A, int r) {
  if (A.ring().nvars != r + 1) throw UsageError("induced_map: ring does not have r+1 variables");
  const CohomologySpace src(A.source(), r);
  const CohomologySpace tgt(A.target(), r);
  const PrimeField& F = A.ring().field;
  FpMatrix M(F, src.dim(), tgt.dim());
  const auto basis = src.basis();
  for (int row = 0; row < static_cast<int>(basis.size()); ++row) {
    const auto& b = basis[static_cast<std::size_t>(row)];
    for (int l = 0; l < A.cols(); ++l) {
      const Polynomial& g = A.at(b.slot, l);
      if (g.is_zero() || tgt.slot_size(A.target().twists[static_cast<std::size_t>(l)]) == 0) continue;
      for (const auto& t : g.terms()) {
        Monomial u;
        bool keep = true;
        for (int i = 0; i <= r && keep; ++i) {
          const int e = b.exponents[static_cast<std::size_t>(i)] + t.mono.exp[static_cast<std::size_t>(i)];
          if (e >= 0) keep = false;
          else u.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(-e - 1);
        }
        if (keep) M.add_to(row, tgt.index_of(l, u), t.coeff);
      }
    }
  }
  return M;
}

/// Coset representatives of Ker(ker_of) / Im(im_of) as reduced echelon
/// rows: the left kernel of ker_of is reduced modulo the row space of
/// im_of and echelonized. Also returns the echelon of the image, which is
/// needed to reduce later vectors into the same coordinates.
struct QuotientBasis {
  FpMatrix basis;
  Echelon image;
};

inline QuotientBasis quotient_basis_with_image(const FpMatrix& ker_of, const FpMatrix& im_of) {
  if (im_of.cols() != ker_of.rows()) throw UsageError("quotient_basis: ambient dimensions differ");
  const PrimeField& F = ker_of.field();
  if (!fp_multiply(im_of, ker_of).is_zero()) throw InternalError("quotient_basis: image is not inside the kernel");
  const FpMatrix K = fp_left_kernel(ker_of);
  Echelon E = fp_rref(im_of);
  FpMatrix R(F, K.rows(), K.cols());
  for (int i = 0; i < K.rows(); ++i) {
    const auto v = fp_reduce(K.row(i), E);
    for (int j = 0; j < K.cols(); ++j) R.set(i, j, v[static_cast<std::size_t>(j)]);
  }
  return {fp_rref(R).rows, std::move(E)};
}

inline FpMatrix quotient_basis(const FpMatrix& ker_of, const FpMatrix& im_of) {
  return quotient_basis_with_image(ker_of, im_of).basis;
}

/// "1/(x0^2*x1*...)" style rendering of one basis element.
inline std::string format_laurent(const LaurentBasisElement& b, const std::vector<std::string>& names) {
  std::string den;
  for (std::size_t i = 0; i < b.exponents.size(); ++i) {
    const int e = -b.exponents[i];
    if (!den.empty()) den += "*";
    den += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (e > 1) den += "^" + std::to_string(e);
  }
  return "1/(" + den + ")";
}

}  // namespace hwfrob
