#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hwfrob/cohomology.hpp"
#include "hwfrob/koszul.hpp"

namespace hwfrob {

enum class AlgorithmChoice { automatic, general, complete_intersection };

inline std::string to_string(AlgorithmChoice a) {
  switch (a) {
    case AlgorithmChoice::automatic: return "auto";
    case AlgorithmChoice::general: return "general";
    case AlgorithmChoice::complete_intersection: return "ci";
  }
  return "auto";
}

/// A projective scheme X = V(f) in P^r over F_p and the degree q of
/// H^q(X, O_X) to study.
struct ProblemSpec {
  PolyRing ring;
  std::vector<std::string> var_names;
  std::vector<Polynomial> generators;
  int q = 1;
  AlgorithmChoice algorithm = AlgorithmChoice::automatic;
  MonomialOrder order;
  ResolutionShape shape = ResolutionShape::schreyer_frame;

  int r() const noexcept { return ring.nvars - 1; }
  std::uint32_t p() const noexcept { return ring.p(); }
};

inline void validate_spec(const ProblemSpec& spec) {
  if (spec.generators.empty()) throw InputError("no generators");
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    const auto& f = spec.generators[i];
    if (!(f.ring() == spec.ring)) throw UsageError("generator from a different ring");
    if (f.is_zero()) throw InputError("generator " + std::to_string(i + 1) + " is zero");
    if (!f.is_homogeneous()) throw InputError("generator " + std::to_string(i + 1) + " is not homogeneous");
  }
  const int r = spec.r();
  if (spec.q < 1 || spec.q > r - 1) {
    throw InputError("q must satisfy 1 <= q <= r-1 (got q=" + std::to_string(spec.q) + ", r=" + std::to_string(r) + ")");
  }
  if (spec.order.nvars() != spec.ring.nvars) throw UsageError("monomial order does not match the ring");
}

/// One quotient basis vector: coefficient and Laurent monomial pairs.
using CohomologyVector = std::vector<std::pair<std::uint32_t, LaurentBasisElement>>;

struct StepTimings {
  double step_a_ms = 0;
  double step_b_ms = 0;
};

/// matrix satisfies image(b_i) = Σ_j matrix(j, i) b_j.
struct FrobeniusReport {
  std::uint32_t p = 0;
  int r = 0;
  int q = 0;
  std::string algorithm_used;
  int h_dim = 0;
  FpMatrix matrix;
  int rank = 0;
  std::vector<std::uint32_t> char_poly;
  std::vector<CohomologyVector> basis;
  int D = 0;
  std::optional<std::size_t> alpha;
  StepTimings timings;
  std::vector<std::string> assumptions;
};

struct FrobeniusMatrix {
  FpMatrix matrix;
  int rank = 0;
  std::vector<std::uint32_t> char_poly;
};

/// Entries of B raised to the p-th power; basis exponents scaled by p.
inline std::pair<FpMatrix, std::vector<LaurentBasisElement>> frobenius_on_basis(
    const FpMatrix& B, const std::vector<LaurentBasisElement>& basis, std::uint32_t p) {
  const PrimeField& F = B.field();
  FpMatrix Bp(F, B.rows(), B.cols());
  for (int i = 0; i < B.rows(); ++i) {
    for (int j = 0; j < B.cols(); ++j) Bp.set(i, j, F.pow(B.at(i, j), p));
  }
  std::vector<LaurentBasisElement> bp = basis;
  for (auto& b : bp) {
    for (auto& e : b.exponents) e *= static_cast<int>(p);
  }
  return {std::move(Bp), std::move(bp)};
}

/// Pushes the Frobenius images of the rows of B through the lift C
/// (F_{r-q}^{(p)} -> F_{r-q}) with local-cohomology truncation, reduces
/// them modulo the image echelon, solves X·B = B' and reports ᵗX.
inline FrobeniusMatrix rank_of_frobenius(std::uint32_t p, const FpMatrix& B, const CohomologySpace& space,
                                         const GradedHomomorphism& C, const Echelon& image) {
  const PrimeField& F = B.field();
  const int r = space.r();
  const auto basis = space.basis();
  if (B.cols() != space.dim()) throw UsageError("rank_of_frobenius: basis dimension mismatch");
  if (C.cols() != space.module().rank()) throw UsageError("rank_of_frobenius: lift target mismatch");
  auto [Bp, basis_p] = frobenius_on_basis(B, basis, p);
  FpMatrix Bprime(F, B.rows(), B.cols());
  for (int i = 0; i < Bp.rows(); ++i) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(B.cols()), 0);
    for (int j = 0; j < Bp.cols(); ++j) {
      const std::uint32_t c = Bp.at(i, j);
      if (c == 0) continue;
      const auto& b = basis_p[static_cast<std::size_t>(j)];
      for (int l = 0; l < C.cols(); ++l) {
        for (const auto& t : C.at(b.slot, l).terms()) {
          Monomial u;
          bool keep = true;
          for (int k = 0; k <= r && keep; ++k) {
            const int e = b.exponents[static_cast<std::size_t>(k)] + t.mono.exp[static_cast<std::size_t>(k)];
            if (e >= 0) keep = false;
            else u.exp[static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(-e - 1);
          }
          if (!keep) continue;
          auto& slot = v[static_cast<std::size_t>(space.index_of(l, u))];
          slot = F.fma(slot, c, t.coeff);
        }
      }
    }
    if (image.rows.cols() == B.cols()) v = fp_reduce(std::move(v), image);
    for (int j = 0; j < B.cols(); ++j) Bprime.set(i, j, v[static_cast<std::size_t>(j)]);
  }
  const FpMatrix X = fp_solve_left(B, Bprime);
  FrobeniusMatrix out;
  out.matrix = fp_transpose(X);
  out.rank = fp_rank(out.matrix);
  out.char_poly = fp_charpoly(out.matrix);
  return out;
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

inline std::vector<CohomologyVector> describe_basis(const FpMatrix& B, const std::vector<LaurentBasisElement>& basis) {
  std::vector<CohomologyVector> out;
  for (int i = 0; i < B.rows(); ++i) {
    CohomologyVector v;
    for (int j = 0; j < B.cols(); ++j) {
      if (B.at(i, j) != 0) v.emplace_back(B.at(i, j), basis[static_cast<std::size_t>(j)]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline int d_statistic(const FreeResolution& R, int i0, int r) {
  std::uint64_t D = 0;
  for (int i = std::max(0, i0 - 1); i <= i0 + 1; ++i) D = std::max(D, top_cohomology_dim(R.module(i), r));
  return static_cast<int>(D);
}

}  // namespace detail

/// Step A output: a resolution of S/I and a lift of the identity from the
/// Frobenius-twisted resolution to it.
struct StepA {
  FreeResolution resolution;
  ChainLift lift;
};

/// Step B of the general algorithm on a given Step A.
inline FrobeniusReport algorithm_I_step_b(const ProblemSpec& spec, const StepA& a, double step_a_ms) {
  const auto t0 = std::chrono::steady_clock::now();
  const int r = spec.r();
  const int i0 = r - spec.q;
  const FreeResolution& R = a.resolution;
  const PrimeField& F = spec.ring.field;
  FrobeniusReport rep;
  rep.p = spec.p();
  rep.r = r;
  rep.q = spec.q;
  rep.algorithm_used = "general";
  rep.D = detail::d_statistic(R, i0, r);
  std::size_t alpha = std::max(R.map(i0).max_terms(), R.map(i0 + 1).max_terms());
  alpha = std::max(alpha, a.lift.max_terms(i0));
  rep.alpha = alpha;

  const CohomologySpace space(R.module(i0), r);
  const FpMatrix K = induced_map(R.map(i0), r);
  const FpMatrix Im = induced_map(R.map(i0 + 1), r);
  const QuotientBasis Q = quotient_basis_with_image(K, Im);
  rep.h_dim = Q.basis.rows();
  rep.basis = detail::describe_basis(Q.basis, space.basis());
  if (rep.h_dim == 0) {
    rep.matrix = FpMatrix(F, 0, 0);
    rep.char_poly = {1};
  } else {
    if (i0 >= static_cast<int>(a.lift.maps.size())) throw InternalError("lift does not reach level r-q");
    auto fm = rank_of_frobenius(spec.p(), Q.basis, space, a.lift.maps[static_cast<std::size_t>(i0)], Q.image);
    rep.matrix = std::move(fm.matrix);
    rep.rank = fm.rank;
    rep.char_poly = std::move(fm.char_poly);
  }
  rep.timings = {step_a_ms, detail::elapsed_ms(t0)};
  return rep;
}

inline StepA compute_step_a(const ProblemSpec& spec, LiftMethod method = LiftMethod::dense) {
  StepA a;
  a.resolution = free_resolution(spec.generators, spec.order, spec.shape);
  const FreeResolution Rp = frobenius_resolution(a.resolution);
  a.lift = lift_chain_map(Rp, a.resolution, spec.order, method);
  return a;
}

/// Koszul complex of the generators with the closed-form lift.
inline StepA koszul_step_a(const ProblemSpec& spec) {
  StepA a;
  a.resolution = koszul_complex(spec.generators).as_resolution();
  a.lift = koszul_lift(spec.generators, static_cast<int>(spec.p()));
  return a;
}

/// The general algorithm: resolution, Frobenius twist, lift (Step A), then
/// cohomology bases and the linear solve (Step B).
inline FrobeniusReport algorithm_I(const ProblemSpec& spec) {
  validate_spec(spec);
  const auto t0 = std::chrono::steady_clock::now();
  const StepA a = compute_step_a(spec);
  return algorithm_I_step_b(spec, a, detail::elapsed_ms(t0));
}

/// Algorithm I with an injected Step A (e.g. the Koszul complex and its lift).
inline FrobeniusReport algorithm_I_with(const ProblemSpec& spec, const StepA& a) {
  validate_spec(spec);
  return algorithm_I_step_b(spec, a, 0.0);
}

/// Checks the hypotheses of the complete-intersection formula; returns the
/// first violated one, or nullopt.
inline std::optional<std::string> complete_intersection_violation(const ProblemSpec& spec) {
  const int r = spec.r();
  const int t = static_cast<int>(spec.generators.size());
  if (t > r + 1) return "more generators than variables";
  if (spec.q != r - t) return "q must equal r - t (q=" + std::to_string(spec.q) + ", r-t=" + std::to_string(r - t) + ")";
  if (!is_regular_sequence(spec.generators, r)) return "generators are not a regular sequence";
  for (const auto& J : koszul_indices(t, t - 1)) {
    int d = 0;
    for (int j : J.indices) d += spec.generators[static_cast<std::size_t>(j)].degree();
    if (d > r) return "partial degree sum " + std::to_string(d) + " exceeds r=" + std::to_string(r);
  }
  return std::nullopt;
}

/// The complete-intersection formula: with P = (f_1...f_t)^{p-1} and the
/// negative tuples k^(1..g) summing to -Σdeg f_j, entry (a, b) is the
/// coefficient of x^{k^(a) - p k^(b)} in P.
inline FrobeniusReport algorithm_II(const ProblemSpec& spec) {
  validate_spec(spec);
  if (auto why = complete_intersection_violation(spec)) throw DispatchError("complete-intersection path: " + *why);
  const auto t0 = std::chrono::steady_clock::now();
  const int r = spec.r();
  const std::uint32_t p = spec.p();
  const PrimeField& F = spec.ring.field;
  int total = 0;
  for (const auto& f : spec.generators) total += f.degree();
  FrobeniusReport rep;
  rep.p = p;
  rep.r = r;
  rep.q = spec.q;
  rep.algorithm_used = "ci";
  rep.assumptions.push_back("generators pairwise coprime (asserted, not checked)");
  const KoszulComplex K = koszul_complex(spec.generators);
  rep.D = detail::d_statistic(K.as_resolution(), r - spec.q, r);

  const CohomologySpace space(GradedFreeModule{{total}}, r);
  const auto tuples = space.basis();
  const int g = static_cast<int>(tuples.size());
  rep.h_dim = g;
  rep.basis = detail::describe_basis(FpMatrix::identity(F, g), tuples);
  Polynomial prod = Polynomial::constant(spec.ring, 1);
  for (const auto& f : spec.generators) prod = poly_mul(prod, f);
  const double step_a = detail::elapsed_ms(t0);
  const auto t1 = std::chrono::steady_clock::now();
  const Polynomial P = poly_pow(prod, p - 1);
  rep.matrix = FpMatrix(F, g, g);
  std::vector<int> e(static_cast<std::size_t>(r + 1));
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      bool ok = true;
      for (int i = 0; i <= r; ++i) {
        const int v = tuples[static_cast<std::size_t>(a)].exponents[static_cast<std::size_t>(i)] -
                      static_cast<int>(p) * tuples[static_cast<std::size_t>(b)].exponents[static_cast<std::size_t>(i)];
        if (v < 0) ok = false;
        e[static_cast<std::size_t>(i)] = v;
      }
      if (ok) rep.matrix.set(a, b, poly_coeff(P, e).value);
    }
  }
  rep.rank = fp_rank(rep.matrix);
  rep.char_poly = fp_charpoly(rep.matrix);
  rep.timings = {step_a, detail::elapsed_ms(t1)};
  return rep;
}

/// A report together with the Step A it was computed from (general path
/// only).
struct DispatchResult {
  FrobeniusReport report;
  std::optional<StepA> step_a;
};

/// auto picks the complete-intersection formula when all of its hypotheses
/// hold, the general algorithm otherwise.
inline DispatchResult dispatch_detailed(const ProblemSpec& spec) {
  validate_spec(spec);
  bool general = spec.algorithm == AlgorithmChoice::general;
  if (spec.algorithm == AlgorithmChoice::automatic) general = complete_intersection_violation(spec).has_value();
  if (!general) return {algorithm_II(spec), std::nullopt};
  const auto t0 = std::chrono::steady_clock::now();
  StepA a = compute_step_a(spec);
  FrobeniusReport rep = algorithm_I_step_b(spec, a, detail::elapsed_ms(t0));
  return {std::move(rep), std::move(a)};
}

inline FrobeniusReport dispatch(const ProblemSpec& spec) { return dispatch_detailed(spec).report; }

}  // namespace hwfrob
