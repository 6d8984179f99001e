#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hwfrob/polynomial.hpp"

namespace hwfrob {

/// ⊕_j S(-d_j), recorded by its twists. Rank 0 is the zero module.
struct GradedFreeModule {
  std::vector<int> twists;

  int rank() const noexcept { return static_cast<int>(twists.size()); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// A module monomial x^a e_pos.
struct ModMono {
  Monomial mono;
  int pos = 0;

  friend bool operator==(const ModMono&, const ModMono&) = default;
};

struct ModTerm {
  ModMono mm;
  std::uint32_t coeff = 0;
};

/// An element of a free module of the given rank, one polynomial per slot.
struct ModuleElement {
  std::vector<Polynomial> components;

  static ModuleElement zero(const PolyRing& ring, int rank) {
    return ModuleElement{std::vector<Polynomial>(static_cast<std::size_t>(rank), Polynomial(ring))};
  }

  int rank() const noexcept { return static_cast<int>(components.size()); }

  bool is_zero() const noexcept {
    return std::all_of(components.begin(), components.end(), [](const Polynomial& f) { return f.is_zero(); });
  }

  std::size_t term_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : components) n += c.size();
    return n;
  }

  /// Homogeneous of module degree m w.r.t. twists: slot j is zero or
  /// homogeneous of degree m - d_j. Zero elements report nullopt.
  std::optional<int> module_degree(std::span<const int> twists) const {
    std::optional<int> deg;
    for (std::size_t j = 0; j < components.size(); ++j) {
      const auto& f = components[j];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous()) throw UsageError("inhomogeneous module component");
      const int m = f.degree() + (j < twists.size() ? twists[j] : 0);
      if (deg && *deg != m) throw UsageError("module element is not homogeneous");
      deg = m;
    }
    return deg;
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

namespace detail {

inline void check_rank(const ModuleElement& a, const ModuleElement& b) {
  if (a.rank() != b.rank()) {
    throw UsageError("module rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

inline ModuleElement elem_axpy(const ModuleElement& a, std::uint32_t c, const ModuleElement& b) {
  check_rank(a, b);
  ModuleElement out;
  out.components.reserve(a.components.size());
  for (std::size_t j = 0; j < a.components.size(); ++j) {
    out.components.push_back(axpy(a.components[j], c, b.components[j]));
  }
  return out;
}

inline ModuleElement elem_mul_term(const ModuleElement& a, const Monomial& m, std::uint32_t c) {
  ModuleElement out;
  out.components.reserve(a.components.size());
  for (const auto& f : a.components) out.components.push_back(poly_mul_term(f, m, c));
  return out;
}

inline ModuleElement elem_mul_poly(const ModuleElement& a, const Polynomial& f) {
  ModuleElement out;
  out.components.reserve(a.components.size());
  for (const auto& g : a.components) out.components.push_back(poly_mul(g, f));
  return out;
}

}  // namespace detail

inline ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) { return detail::elem_axpy(a, 1, b); }

inline ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  if (a.components.empty()) return a;
  return detail::elem_axpy(a, a.components.front().ring().field.neg(1), b);
}

/// Monomial order on a free module. Either position-over-term (lower slot
/// index is larger, then the monomial order) or a Schreyer order induced by
/// the leading module monomials of the previous level's basis images:
/// x^a e_i > x^b e_j iff x^a*lead_i > x^b*lead_j, ties broken by i < j.
class ModuleOrder {
 public:
  static ModuleOrder position_over_term(const MonomialOrder& ord) {
    ModuleOrder o;
    o.mono_ = ord;
    return o;
  }

  static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> previous, std::vector<ModMono> frame) {
    ModuleOrder o;
    o.mono_ = previous->mono_;
    o.prev_ = std::move(previous);
    o.frame_ = std::move(frame);
    return o;
  }

  const MonomialOrder& monomial_order() const noexcept { return mono_; }
  bool is_schreyer() const noexcept { return prev_ != nullptr; }
  const std::vector<ModMono>& frame() const noexcept { return frame_; }

  std::strong_ordering compare(const ModMono& a, const ModMono& b) const {
    if (!prev_) {
      if (a.pos != b.pos) return b.pos <=> a.pos;
      return mono_.compare(a.mono, b.mono);
    }
    const auto& fa = frame_.at(static_cast<std::size_t>(a.pos));
    const auto& fb = frame_.at(static_cast<std::size_t>(b.pos));
    const auto c = prev_->compare({a.mono * fa.mono, fa.pos}, {b.mono * fb.mono, fb.pos});
    if (c != std::strong_ordering::equal) return c;
    return b.pos <=> a.pos;
  }

 private:
  MonomialOrder mono_;
  std::shared_ptr<const ModuleOrder> prev_;
  std::vector<ModMono> frame_;
};

/// Leading term of a nonzero element; nullopt for zero.
inline std::optional<ModTerm> leading_term(const ModuleElement& v, const ModuleOrder& ord) {
  std::optional<ModTerm> best;
  for (std::size_t j = 0; j < v.components.size(); ++j) {
    const auto& f = v.components[j];
    if (f.is_zero()) continue;
    ModTerm cand;
    if (!ord.is_schreyer()) {
      const Term& t = f.leading_term(ord.monomial_order());
      cand = {{t.mono, static_cast<int>(j)}, t.coeff};
      if (!best || ord.compare(cand.mm, best->mm) == std::strong_ordering::greater) best = cand;
      continue;
    }
    for (const auto& t : f.terms()) {
      cand = {{t.mono, static_cast<int>(j)}, t.coeff};
      if (!best || ord.compare(cand.mm, best->mm) == std::strong_ordering::greater) best = cand;
    }
  }
  return best;
}

struct DivisionResult {
  std::vector<Polynomial> quotients;
  ModuleElement remainder;
};

namespace detail {

struct ModMonoGreater {
  const ModuleOrder* ord;
  bool operator()(const ModMono& a, const ModMono& b) const {
    return ord->compare(a, b) == std::strong_ordering::greater;
  }
};

/// Sparse workspace ordered from the largest module monomial down.
class Workspace {
 public:
  Workspace(const PolyRing& ring, const ModuleOrder& ord) : ring_(ring), terms_(ModMonoGreater{&ord}) {}

  void add_element(const ModuleElement& v, const Monomial& shift, std::uint32_t c) {
    for (std::size_t j = 0; j < v.components.size(); ++j) {
      for (const auto& t : v.components[j].terms()) {
        add({t.mono * shift, static_cast<int>(j)}, ring_.field.mul(c, t.coeff));
      }
    }
  }

  void add(const ModMono& m, std::uint32_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = ring_.field.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool empty() const noexcept { return terms_.empty(); }

  ModTerm pop_top() {
    auto it = terms_.begin();
    ModTerm t{it->first, it->second};
    terms_.erase(it);
    return t;
  }

 private:
  PolyRing ring_;
  std::map<ModMono, std::uint32_t, ModMonoGreater> terms_;
};

inline ModuleElement element_from_terms(const PolyRing& ring, int rank, std::vector<std::vector<Term>> slots) {
  ModuleElement out;
  out.components.reserve(static_cast<std::size_t>(rank));
  for (auto& s : slots) out.components.push_back(Polynomial::from_terms(ring, std::move(s)));
  return out;
}

/// Divides v by divisors whose leading terms are precomputed.
inline DivisionResult divide_with_leads(const ModuleElement& v, std::span<const ModuleElement> divisors,
                                        std::span<const ModTerm> leads, const ModuleOrder& ord) {
  if (v.components.empty()) throw UsageError("division of a rank-0 element");
  const PolyRing ring = v.components.front().ring();
  const int rank = v.rank();
  for (const auto& g : divisors) check_rank(v, g);
  Workspace ws(ring, ord);
  ws.add_element(v, Monomial{}, 1);
  std::vector<std::vector<Term>> quot(divisors.size());
  std::vector<std::vector<Term>> rem(static_cast<std::size_t>(rank));
  while (!ws.empty()) {
    const ModTerm top = ws.pop_top();
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (leads[i].mm.pos == top.mm.pos && leads[i].mm.mono.divides(top.mm.mono)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      rem[static_cast<std::size_t>(top.mm.pos)].push_back({top.mm.mono, top.coeff});
      continue;
    }
    const Monomial q = top.mm.mono / leads[hit].mm.mono;
    const std::uint32_t c = ring.field.mul(top.coeff, ring.field.inv(leads[hit].coeff));
    quot[hit].push_back({q, c});
    // Subtract c*q*g; its leading term cancels `top`, which is already popped.
    const auto& g = divisors[hit];
    const std::uint32_t neg_c = ring.field.neg(c);
    for (std::size_t j = 0; j < g.components.size(); ++j) {
      for (const auto& t : g.components[j].terms()) {
        const ModMono mm{t.mono * q, static_cast<int>(j)};
        if (mm == top.mm) continue;
        ws.add(mm, ring.field.mul(neg_c, t.coeff));
      }
    }
  }
  DivisionResult out;
  out.quotients.reserve(divisors.size());
  for (auto& q : quot) out.quotients.push_back(Polynomial::from_terms(ring, std::move(q)));
  out.remainder = element_from_terms(ring, rank, std::move(rem));
  return out;
}

}  // namespace detail

/// Division with remainder in a free module: v = Σ q_i G_i + remainder with
/// no remainder term divisible by a leading term of G.
inline DivisionResult mod_divide(const ModuleElement& v, std::span<const ModuleElement> G, const ModuleOrder& ord) {
  if (G.empty()) throw UsageError("division by an empty list");
  std::vector<ModTerm> leads;
  leads.reserve(G.size());
  for (const auto& g : G) {
    auto lt = leading_term(g, ord);
    if (!lt) throw UsageError("division by a zero element");
    leads.push_back(*lt);
  }
  return detail::divide_with_leads(v, G, leads, ord);
}

/// A Gröbner basis with, optionally, each element expressed in the input
/// generators: basis[i] = Σ_k transform[i][k] * gens[k].
struct GroebnerResult {
  std::vector<ModuleElement> basis;
  std::vector<std::vector<Polynomial>> transform;
};

namespace detail {

struct GbEntry {
  ModuleElement elem;
  std::vector<Polynomial> rep;
  ModTerm lead;
};

inline std::vector<Polynomial> rep_combine(const std::vector<Polynomial>& base, std::span<const Polynomial> quotients,
                                           const std::vector<GbEntry>& entries, std::uint32_t sign) {
  std::vector<Polynomial> out = base;
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    if (quotients[i].is_zero()) continue;
    const auto& rep = entries[i].rep;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (rep[k].is_zero()) continue;
      out[k] = axpy(out[k], sign, poly_mul(quotients[i], rep[k]));
    }
  }
  return out;
}

inline void make_monic(GbEntry& e, const PrimeField& F) {
  const std::uint32_t inv = F.inv(e.lead.coeff);
  if (inv == 1) return;
  e.elem = elem_mul_term(e.elem, Monomial{}, inv);
  for (auto& r : e.rep) r = poly_scale(r, inv);
  e.lead.coeff = 1;
}

}  // namespace detail

/// Buchberger's algorithm over a free module with the normal selection
/// strategy (lowest module degree first, ties by smaller lcm, then by pair
/// indices). Output is reduced, monic and sorted by descending leading
/// term. `twists` feed the module degree; missing twists count as zero.
inline GroebnerResult groebner_basis(std::span<const ModuleElement> gens, const ModuleOrder& ord, bool track,
                                     std::span<const int> twists = {}) {
  GroebnerResult result;
  if (gens.empty()) return result;
  const int rank = gens.front().rank();
  PolyRing ring;
  for (const auto& g : gens) {
    detail::check_rank(gens.front(), g);
    for (const auto& c : g.components) ring = c.ring();
  }
  const PrimeField& F = ring.field;
  const std::size_t ngens = gens.size();
  auto twist = [&](int pos) { return pos < static_cast<int>(twists.size()) ? twists[static_cast<std::size_t>(pos)] : 0; };

  std::vector<detail::GbEntry> entries;
  auto leads_of = [&]() {
    std::vector<ModTerm> leads;
    leads.reserve(entries.size());
    for (const auto& e : entries) leads.push_back(e.lead);
    return leads;
  };
  auto elems_of = [&]() {
    std::vector<ModuleElement> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.elem);
    return v;
  };

  // Pair queue keyed by (module degree of lcm, lcm under the order, i, j).
  struct Pair {
    int degree;
    ModMono lcm;
    std::size_t i, j;
  };
  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto c = ord.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);

  auto add_entry = [&](detail::GbEntry e) {
    detail::make_monic(e, F);
    const std::size_t j = entries.size();
    for (std::size_t i = 0; i < j; ++i) {
      const auto& li = entries[i].lead.mm;
      if (li.pos != e.lead.mm.pos) continue;
      const Monomial l = lcm(li.mono, e.lead.mm.mono);
      // Coprime leading monomials reduce to zero in the rank-1 case.
      if (rank == 1 && l == li.mono * e.lead.mm.mono) continue;
      queue.insert(Pair{l.degree() + twist(li.pos), {l, li.pos}, i, j});
    }
    entries.push_back(std::move(e));
  };

  for (std::size_t k = 0; k < ngens; ++k) {
    detail::GbEntry e;
    e.elem = gens[k];
    if (track) {
      e.rep.assign(ngens, Polynomial(ring));
      e.rep[k] = Polynomial::constant(ring, 1);
    }
    // Reduce against what is already there so duplicates drop out early.
    if (!entries.empty()) {
      auto elems = elems_of();
      auto leads = leads_of();
      auto dr = detail::divide_with_leads(e.elem, elems, leads, ord);
      if (track) e.rep = detail::rep_combine(e.rep, dr.quotients, entries, F.neg(1));
      e.elem = std::move(dr.remainder);
    }
    auto lt = leading_term(e.elem, ord);
    if (!lt) continue;
    e.lead = *lt;
    add_entry(std::move(e));
  }

  while (!queue.empty()) {
    const Pair pr = *queue.begin();
    queue.erase(queue.begin());
    const auto& a = entries[pr.i];
    const auto& b = entries[pr.j];
    const Monomial ma = pr.lcm.mono / a.lead.mm.mono;
    const Monomial mb = pr.lcm.mono / b.lead.mm.mono;
    detail::GbEntry s;
    s.elem = detail::elem_axpy(detail::elem_mul_term(a.elem, ma, 1), F.neg(1), detail::elem_mul_term(b.elem, mb, 1));
    if (track) {
      s.rep.resize(ngens);
      for (std::size_t k = 0; k < ngens; ++k) {
        s.rep[k] = detail::axpy(poly_mul_term(a.rep[k], ma, 1), F.neg(1), poly_mul_term(b.rep[k], mb, 1));
      }
    }
    auto elems = elems_of();
    auto leads = leads_of();
    auto dr = detail::divide_with_leads(s.elem, elems, leads, ord);
    if (dr.remainder.is_zero()) continue;
    if (track) s.rep = detail::rep_combine(s.rep, dr.quotients, entries, F.neg(1));
    s.elem = std::move(dr.remainder);
    s.lead = *leading_term(s.elem, ord);
    add_entry(std::move(s));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<detail::GbEntry> minimal;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < entries.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = entries[i].lead.mm;
      const auto& lj = entries[j].lead.mm;
      if (li.pos != lj.pos || !lj.mono.divides(li.mono)) continue;
      redundant = !(lj.mono == li.mono) || j < i;
    }
    if (!redundant) minimal.push_back(entries[i]);
  }
  // Tail-reduce each element by the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    std::vector<ModTerm> leads;
    std::vector<detail::GbEntry> other_entries;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j].elem);
      leads.push_back(minimal[j].lead);
      other_entries.push_back(minimal[j]);
    }
    if (others.empty()) break;
    auto dr = detail::divide_with_leads(minimal[i].elem, others, leads, ord);
    if (track) minimal[i].rep = detail::rep_combine(minimal[i].rep, dr.quotients, other_entries, F.neg(1));
    minimal[i].elem = std::move(dr.remainder);
  }
  std::sort(minimal.begin(), minimal.end(), [&ord](const detail::GbEntry& a, const detail::GbEntry& b) {
    return ord.compare(a.lead.mm, b.lead.mm) == std::strong_ordering::greater;
  });
  for (auto& e : minimal) {
    result.basis.push_back(std::move(e.elem));
    if (track) result.transform.push_back(std::move(e.rep));
  }
  return result;
}

inline std::vector<ModuleElement> mod_buchberger(std::span<const ModuleElement> G, const ModuleOrder& ord,
                                                 std::span<const int> twists = {}) {
  return groebner_basis(G, ord, false, twists).basis;
}

/// A syzygy together with its leading module monomial under the Schreyer
/// order induced by the Gröbner basis it relates.
struct LeadedSyzygy {
  ModuleElement syzygy;
  ModMono lead;
};

/// none keeps every s_ij; duplicates drops syzygies whose leading term
/// equals an earlier one; divisible also drops those whose leading term is
/// a proper multiple of another's. Each choice leaves a Gröbner basis.
enum class SyzygyPruning { none, duplicates, divisible };

/// Schreyer's syzygies s_ij of a Gröbner basis G: for i < j with leading
/// terms in the same slot, s_ij = m_ij/c_i e_i - m_ji/c_j e_j - Σ a_k e_k
/// where Σ a_k G_k is the standard representation of the S-vector. They form
/// a Gröbner basis of Syz(G) for the induced Schreyer order, with leading
/// term m_ij e_i.
inline std::vector<LeadedSyzygy> schreyer_syzygies(std::span<const ModuleElement> G, const ModuleOrder& ord,
                                                   SyzygyPruning prune = SyzygyPruning::divisible) {
  std::vector<LeadedSyzygy> out;
  if (G.empty()) return out;
  PolyRing ring;
  for (const auto& c : G.front().components) ring = c.ring();
  const PrimeField& F = ring.field;
  std::vector<ModTerm> leads;
  for (const auto& g : G) {
    auto lt = leading_term(g, ord);
    if (!lt) throw UsageError("syzygies of a list containing zero");
    leads.push_back(*lt);
  }
  const int n = static_cast<int>(G.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& li = leads[static_cast<std::size_t>(i)];
      const auto& lj = leads[static_cast<std::size_t>(j)];
      if (li.mm.pos != lj.mm.pos) continue;
      const Monomial l = lcm(li.mm.mono, lj.mm.mono);
      const Monomial mi = l / li.mm.mono;
      const Monomial mj = l / lj.mm.mono;
      const std::uint32_t ci = F.inv(li.coeff);
      const std::uint32_t cj = F.inv(lj.coeff);
      const ModuleElement s = detail::elem_axpy(detail::elem_mul_term(G[static_cast<std::size_t>(i)], mi, ci),
                                                F.neg(1), detail::elem_mul_term(G[static_cast<std::size_t>(j)], mj, cj));
      auto dr = detail::divide_with_leads(s, G, leads, ord);
      if (!dr.remainder.is_zero()) throw InternalError("syzygy computation: input is not a Groebner basis");
      ModuleElement syz = ModuleElement::zero(ring, n);
      for (int k = 0; k < n; ++k) syz.components[static_cast<std::size_t>(k)] = poly_neg(dr.quotients[static_cast<std::size_t>(k)]);
      auto& si = syz.components[static_cast<std::size_t>(i)];
      si = poly_add(si, Polynomial::monomial(ring, mi, ci));
      auto& sj = syz.components[static_cast<std::size_t>(j)];
      sj = poly_sub(sj, Polynomial::monomial(ring, mj, cj));
      out.push_back({std::move(syz), {mi, i}});
    }
  }
  if (prune == SyzygyPruning::none) return out;
  std::vector<LeadedSyzygy> kept;
  for (std::size_t a = 0; a < out.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < out.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = out[a].lead;
      const auto& lb = out[b].lead;
      if (la.pos != lb.pos || !lb.mono.divides(la.mono)) continue;
      if (lb.mono == la.mono) {
        redundant = b < a;
      } else {
        redundant = prune == SyzygyPruning::divisible;
      }
    }
    if (!redundant) kept.push_back(std::move(out[a]));
  }
  return kept;
}

/// Generators of the syzygy module of a Gröbner basis (Schreyer).
inline std::vector<ModuleElement> syzygy_basis(std::span<const ModuleElement> G, const ModuleOrder& ord) {
  std::vector<ModuleElement> out;
  for (auto& s : schreyer_syzygies(G, ord)) out.push_back(std::move(s.syzygy));
  return out;
}

/// Degree-zero map ⊕ S(-d_k) -> ⊕ S(-d'_l), v ↦ v·A with A[k][l] zero or
/// homogeneous of degree d_k - d'_l. Row k is the image of e_k.
class GradedHomomorphism {
 public:
  GradedHomomorphism() = default;

  GradedHomomorphism(const PolyRing& ring, GradedFreeModule source, GradedFreeModule target,
                     std::vector<Polynomial> entries)
      : ring_(ring), source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(source_.rank()) * static_cast<std::size_t>(target_.rank())) {
      throw UsageError("matrix shape does not match source/target ranks");
    }
    for (const auto& e : entries_) {
      if (!(e.ring() == ring_)) throw UsageError("matrix entry from a different ring");
    }
    check_degree_zero();
  }

  static GradedHomomorphism zero(const PolyRing& ring, GradedFreeModule source, GradedFreeModule target) {
    const auto n = static_cast<std::size_t>(source.rank()) * static_cast<std::size_t>(target.rank());
    return GradedHomomorphism(ring, std::move(source), std::move(target), std::vector<Polynomial>(n, Polynomial(ring)));
  }

  static GradedHomomorphism identity(const PolyRing& ring, const GradedFreeModule& m) {
    auto h = zero(ring, m, m);
    for (int k = 0; k < m.rank(); ++k) h.entries_[h.index(k, k)] = Polynomial::constant(ring, 1);
    return h;
  }

  const PolyRing& ring() const noexcept { return ring_; }
  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  int rows() const noexcept { return source_.rank(); }
  int cols() const noexcept { return target_.rank(); }

  const Polynomial& at(int k, int l) const { return entries_.at(index(k, l)); }

  ModuleElement row(int k) const {
    ModuleElement v;
    for (int l = 0; l < cols(); ++l) v.components.push_back(at(k, l));
    return v;
  }

  bool is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& f) { return f.is_zero(); });
  }

  /// Largest number of terms in a single entry.
  std::size_t max_terms() const noexcept {
    std::size_t m = 0;
    for (const auto& e : entries_) m = std::max(m, e.size());
    return m;
  }

  bool has_unit_entry() const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [](const Polynomial& f) { return f.is_unit(); });
  }

  friend bool operator==(const GradedHomomorphism&, const GradedHomomorphism&) = default;

 private:
  std::size_t index(int k, int l) const {
    if (k < 0 || l < 0 || k >= rows() || l >= cols()) throw UsageError("matrix index out of range");
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(cols()) + static_cast<std::size_t>(l);
  }

  void check_degree_zero() const {
    for (int k = 0; k < rows(); ++k) {
      for (int l = 0; l < cols(); ++l) {
        const auto& f = entries_[index(k, l)];
        if (f.is_zero()) continue;
        const int want = source_.twists[static_cast<std::size_t>(k)] - target_.twists[static_cast<std::size_t>(l)];
        if (!f.is_homogeneous() || f.degree() != want) {
          throw UsageError("entry (" + std::to_string(k) + "," + std::to_string(l) +
                           ") is not homogeneous of degree " + std::to_string(want));
        }
      }
    }
  }

  PolyRing ring_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Polynomial> entries_;
};

/// A ∘ B (apply B, then A). Under v ↦ v·M this is the matrix product B·A;
/// requires target(B) == source(A).
inline GradedHomomorphism hom_compose(const GradedHomomorphism& A, const GradedHomomorphism& B) {
  if (!(B.target() == A.source())) throw UsageError("hom_compose: target(B) != source(A)");
  if (!(A.ring() == B.ring())) throw UsageError("hom_compose: ring mismatch");
  std::vector<Polynomial> entries;
  entries.reserve(static_cast<std::size_t>(B.rows()) * static_cast<std::size_t>(A.cols()));
  for (int k = 0; k < B.rows(); ++k) {
    for (int l = 0; l < A.cols(); ++l) {
      Polynomial acc(A.ring());
      for (int j = 0; j < B.cols(); ++j) {
        if (B.at(k, j).is_zero() || A.at(j, l).is_zero()) continue;
        acc += poly_mul(B.at(k, j), A.at(j, l));
      }
      entries.push_back(std::move(acc));
    }
  }
  return GradedHomomorphism(A.ring(), B.source(), A.target(), std::move(entries));
}

/// Entrywise Frobenius twist, twists scaled by p.
inline GradedHomomorphism hom_frob_twist(const GradedHomomorphism& A) {
  const int p = static_cast<int>(A.ring().p());
  GradedFreeModule src = A.source(), tgt = A.target();
  for (auto& d : src.twists) d *= p;
  for (auto& d : tgt.twists) d *= p;
  std::vector<Polynomial> entries;
  for (int k = 0; k < A.rows(); ++k) {
    for (int l = 0; l < A.cols(); ++l) entries.push_back(poly_frob_twist(A.at(k, l)));
  }
  return GradedHomomorphism(A.ring(), std::move(src), std::move(tgt), std::move(entries));
}

}  // namespace hwfrob
