#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hwfrob/gfp.hpp"

namespace hwfrob {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(const PrimeField& F, int rows, int cols)
      : field_(F), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0u) {
    if (rows < 0 || cols < 0) throw UsageError("negative matrix dimension");
  }

  static FpMatrix identity(const PrimeField& F, int n) {
    FpMatrix I(F, n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, 1);
    return I;
  }

  /// Entries are reduced mod p; rows must have equal length.
  static FpMatrix from_rows(const PrimeField& F, const std::vector<std::vector<std::int64_t>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    FpMatrix M(F, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw UsageError("ragged matrix rows");
      for (int j = 0; j < c; ++j) M.set(i, j, F.reduce(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    }
    return M;
  }

  const PrimeField& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::uint32_t at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, std::uint32_t v) { data_[index(i, j)] = v % field_.modulus(); }
  void add_to(int i, int j, std::uint32_t v) { data_[index(i, j)] = field_.add(data_[index(i, j)], v % field_.modulus()); }
  FieldElem element(int i, int j) const { return FieldElem{at(i, j), field_.modulus()}; }

  std::vector<std::uint32_t> row(int i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
            data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)) + cols_};
  }

  bool is_zero() const noexcept {
    for (auto v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
    }
    return out;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw UsageError("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  PrimeField field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> data_;
};

inline std::ostream& operator<<(std::ostream& os, const FpMatrix& M) {
  for (int i = 0; i < M.rows(); ++i) {
    os << "[";
    for (int j = 0; j < M.cols(); ++j) os << (j ? " " : "") << M.at(i, j);
    os << "]\n";
  }
  return os;
}

inline FpMatrix fp_multiply(const FpMatrix& A, const FpMatrix& B) {
  if (A.cols() != B.rows()) {
    throw UsageError("matrix product shape mismatch: " + std::to_string(A.cols()) + " vs " + std::to_string(B.rows()));
  }
  if (!(A.field() == B.field())) throw UsageError("matrix product over different fields");
  const PrimeField& F = A.field();
  FpMatrix C(F, A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int k = 0; k < A.cols(); ++k) {
      const std::uint32_t a = A.at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < B.cols(); ++j) C.set(i, j, F.fma(C.at(i, j), a, B.at(k, j)));
    }
  }
  return C;
}

inline FpMatrix fp_transpose(const FpMatrix& A) {
  FpMatrix T(A.field(), A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) T.set(j, i, A.at(i, j));
  }
  return T;
}

/// Reduced row echelon form with its pivot columns; zero rows dropped.
struct Echelon {
  FpMatrix rows;
  std::vector<int> pivots;
};

inline Echelon fp_rref(const FpMatrix& A) {
  const PrimeField& F = A.field();
  FpMatrix M = A;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < M.rows(); ++i) {
      if (M.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < M.cols(); ++j) {
        const auto t = M.at(r, j);
        M.set(r, j, M.at(piv, j));
        M.set(piv, j, t);
      }
    }
    const std::uint32_t inv = F.inv(M.at(r, c));
    for (int j = 0; j < M.cols(); ++j) M.set(r, j, F.mul(M.at(r, j), inv));
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      const std::uint32_t f = F.neg(M.at(i, c));
      for (int j = 0; j < M.cols(); ++j) M.set(i, j, F.fma(M.at(i, j), f, M.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  FpMatrix out(F, r, M.cols());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < M.cols(); ++j) out.set(i, j, M.at(i, j));
  }
  return {std::move(out), std::move(pivots)};
}

inline int fp_rank(const FpMatrix& M) { return static_cast<int>(fp_rref(M).pivots.size()); }

/// Subtracts multiples of the echelon rows to clear their pivot columns.
inline std::vector<std::uint32_t> fp_reduce(std::vector<std::uint32_t> v, const Echelon& E) {
  const PrimeField& F = E.rows.field();
  for (int i = 0; i < E.rows.rows(); ++i) {
    const int c = E.pivots[static_cast<std::size_t>(i)];
    const std::uint32_t a = v[static_cast<std::size_t>(c)];
    if (a == 0) continue;
    const std::uint32_t f = F.neg(a);
    for (int j = 0; j < E.rows.cols(); ++j) {
      v[static_cast<std::size_t>(j)] = F.fma(v[static_cast<std::size_t>(j)], f, E.rows.at(i, j));
    }
  }
  return v;
}

/// Rows spanning { v : v·A = 0 }, in reduced echelon form.
inline FpMatrix fp_left_kernel(const FpMatrix& A) {
  const PrimeField& F = A.field();
  // Right kernel of the transpose from its reduced form.
  const FpMatrix T = fp_transpose(A);
  const Echelon E = fp_rref(T);
  std::vector<bool> is_pivot(static_cast<std::size_t>(T.cols()), false);
  for (int c : E.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int free = 0; free < T.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<std::uint32_t> v(static_cast<std::size_t>(T.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (int i = 0; i < E.rows.rows(); ++i) {
      v[static_cast<std::size_t>(E.pivots[static_cast<std::size_t>(i)])] = F.neg(E.rows.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  FpMatrix K(F, static_cast<int>(basis.size()), A.rows());
  for (int i = 0; i < K.rows(); ++i) {
    for (int j = 0; j < K.cols(); ++j) K.set(i, j, basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return fp_rref(K).rows;
}

/// X with X·B = Bp, B of full row rank. Throws InternalError when a row
/// of Bp is outside the row space of B.
inline FpMatrix fp_solve_left(const FpMatrix& B, const FpMatrix& Bp) {
  if (B.cols() != Bp.cols()) throw UsageError("solve: column counts differ");
  const PrimeField& F = B.field();
  const int g = B.rows();
  // Row-reduce [B | I] to track the combination producing each echelon row.
  FpMatrix aug(F, g, B.cols() + g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < B.cols(); ++j) aug.set(i, j, B.at(i, j));
    aug.set(i, B.cols() + i, 1);
  }
  const Echelon E = fp_rref(aug);
  int rank = 0;
  for (int c : E.pivots) rank += c < B.cols() ? 1 : 0;
  if (rank != g) throw UsageError("solve: B does not have full row rank");
  FpMatrix X(F, Bp.rows(), g);
  for (int k = 0; k < Bp.rows(); ++k) {
    std::vector<std::uint32_t> v = Bp.row(k);
    std::vector<std::uint32_t> coeff(static_cast<std::size_t>(g), 0);
    for (int i = 0; i < g; ++i) {
      const std::uint32_t a = v[static_cast<std::size_t>(E.pivots[static_cast<std::size_t>(i)])];
      if (a == 0) continue;
      for (int j = 0; j < B.cols(); ++j) {
        v[static_cast<std::size_t>(j)] = F.sub(v[static_cast<std::size_t>(j)], F.mul(a, E.rows.at(i, j)));
      }
      for (int j = 0; j < g; ++j) {
        coeff[static_cast<std::size_t>(j)] = F.fma(coeff[static_cast<std::size_t>(j)], a, E.rows.at(i, B.cols() + j));
      }
    }
    for (auto x : v) {
      if (x != 0) throw InternalError("solve: right-hand side is outside the row space");
    }
    for (int j = 0; j < g; ++j) X.set(k, j, coeff[static_cast<std::size_t>(j)]);
  }
  return X;
}

/// det(aI - M), monic, coefficients from a^n down to a^0. Reduces M to
/// upper Hessenberg form by similarity and runs the standard recurrence.
inline std::vector<std::uint32_t> fp_charpoly(const FpMatrix& M) {
  if (M.rows() != M.cols()) throw UsageError("characteristic polynomial of a non-square matrix");
  const PrimeField& F = M.field();
  const int n = M.rows();
  FpMatrix H = M;
  for (int c = 0; c + 2 <= n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i) {
      if (H.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) {
        const auto t = H.at(piv, j);
        H.set(piv, j, H.at(c + 1, j));
        H.set(c + 1, j, t);
      }
      for (int i = 0; i < n; ++i) {
        const auto t = H.at(i, piv);
        H.set(i, piv, H.at(i, c + 1));
        H.set(i, c + 1, t);
      }
    }
    const std::uint32_t inv = F.inv(H.at(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      const std::uint32_t f = F.mul(H.at(i, c), inv);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) H.set(i, j, F.sub(H.at(i, j), F.mul(f, H.at(c + 1, j))));
      for (int j = 0; j < n; ++j) H.set(j, c + 1, F.add(H.at(j, c + 1), F.mul(f, H.at(j, i))));
    }
  }
  // p_k(a) in ascending coefficients.
  std::vector<std::vector<std::uint32_t>> P(static_cast<std::size_t>(n + 1));
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    auto& pk = P[static_cast<std::size_t>(k)];
    const auto& prev = P[static_cast<std::size_t>(k - 1)];
    pk.assign(static_cast<std::size_t>(k + 1), 0);
    for (int d = 0; d < k; ++d) {
      pk[static_cast<std::size_t>(d + 1)] = F.add(pk[static_cast<std::size_t>(d + 1)], prev[static_cast<std::size_t>(d)]);
      pk[static_cast<std::size_t>(d)] = F.sub(pk[static_cast<std::size_t>(d)], F.mul(H.at(k - 1, k - 1), prev[static_cast<std::size_t>(d)]));
    }
    std::uint32_t sub = 1;
    for (int i = k - 1; i >= 1; --i) {
      sub = F.mul(sub, H.at(i, i - 1));
      if (sub == 0) break;
      const std::uint32_t f = F.mul(sub, H.at(i - 1, k - 1));
      const auto& pi = P[static_cast<std::size_t>(i - 1)];
      for (std::size_t d = 0; d < pi.size(); ++d) pk[d] = F.sub(pk[d], F.mul(f, pi[d]));
    }
  }
  std::vector<std::uint32_t> out(P[static_cast<std::size_t>(n)].rbegin(), P[static_cast<std::size_t>(n)].rend());
  return out;
}

/// Renders a descending coefficient list in the indeterminate `var`.
inline std::string format_charpoly(const std::vector<std::uint32_t>& c, const std::string& var = "a") {
  std::string s;
  const int n = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= n; ++i) {
    const auto v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    const int e = n - i;
    if (!s.empty()) s += " + ";
    if (v != 1 || e == 0) s += std::to_string(v);
    if (e > 0) {
      if (v != 1) s += "*";
      s += var;
      if (e > 1) s += "^" + std::to_string(e);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace hwfrob
