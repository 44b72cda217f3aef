#pragma once

// Knotoid invariants: Kauffman bracket and its writhe normalization, the
// Turaev extended bracket, affine integer labelings and the affine index
// polynomial, the universal type-1 invariant from the descending walk, the
// Vassiliev skein extension, a finite-type checker, and exponential
// coefficient tables.

#include "knotoid/chord.hpp"
#include "knotoid/closure.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/laurent.hpp"
#include "knotoid/moves.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace knotoid {

namespace detail {

inline void require_classical(const std::vector<Crossing>& crossings, const char* op) {
  for (const Crossing& c : crossings)
    if (c.kind != CrossingKind::classical)
      throw wrong_kind(std::string(op) + ": diagram has non-classical crossings");
}

/// Smoothing state machinery shared by the bracket and the extended bracket.
/// A state joins edge ends pairwise at every crossing; walking the resulting
/// 1-manifold gives the component count and the direction in which the open
/// segment traverses each edge (needed to orient shortcut intersections).
struct StateSum {
  int n = 0;
  int edge_count = 0;
  int end_count = 0;
  int head_end = 0;
  std::vector<std::array<SlotEnd, 4>> ends;
  std::vector<int> partner;        // smoothing matching over edge ends
  std::vector<signed char> seg_dir;  // +1/-1: segment runs along/against the edge
  std::vector<char> visited;
  int components = 0;

  explicit StateSum(const KnotoidDiagram& d, int max_crossings, const char* op)
      : n(static_cast<int>(d.crossings.size())),
        edge_count(d.edge_count()),
        end_count(2 * d.edge_count()),
        head_end(2 * d.edge_count() - 1) {
    require_classical(d.crossings, op);
    if (n > max_crossings)
      throw state_sum_overflow(std::string(op) + ": " + std::to_string(n) +
                               " crossings exceed the cap of " + std::to_string(max_crossings));
    ends = slot_end_table(d.crossings, d.edge_count(), false);
    partner.assign(end_count, -1);
  }

  /// Apply a smoothing state; bit ci set means B-smoothing at crossing ci.
  void smooth(std::uint32_t mask) {
    std::fill(partner.begin(), partner.end(), -1);
    for (int ci = 0; ci < n; ++ci) {
      const auto& se = ends[ci];
      int a0 = se[0].end_id(), a1 = se[1].end_id(), a2 = se[2].end_id(), a3 = se[3].end_id();
      if (mask >> ci & 1) {  // B: join the regions at slots (0,3) and (1,2)
        partner[a0] = a3; partner[a3] = a0;
        partner[a1] = a2; partner[a2] = a1;
      } else {  // A: join the regions at slots (0,1) and (2,3)
        partner[a0] = a1; partner[a1] = a0;
        partner[a2] = a3; partner[a3] = a2;
      }
    }
    seg_dir.assign(edge_count, 0);
    visited.assign(end_count, 0);
    components = 1;
    int cur = 0;  // tail of edge 0, at the leg
    for (;;) {
      visited[cur] = 1;
      int e = cur / 2;
      bool at_tail = (cur % 2 == 0);
      seg_dir[e] = at_tail ? 1 : -1;
      int other = at_tail ? cur + 1 : cur - 1;
      visited[other] = 1;
      if (other == head_end) break;
      cur = partner[other];
    }
    for (int s = 0; s < end_count; ++s) {
      if (visited[s]) continue;
      ++components;
      int c = s;
      while (!visited[c]) {
        visited[c] = 1;
        int other = (c % 2 == 0) ? c + 1 : c - 1;
        visited[other] = 1;
        c = partner[other];
      }
    }
  }

  /// Algebraic intersection number of the oriented open segment with the
  /// shortcut in the current state.
  int segment_dot(const Shortcut& sc) const {
    int k = 0;
    for (const Shortcut::Hit& h : sc.hits) k += h.sign * seg_dir[h.edge];
    return k;
  }
};

inline const Laurent1& delta_power(std::vector<Laurent1>& cache, int k) {
  if (cache.empty()) cache.push_back(Laurent1::constant(Var::A, 1));
  Laurent1 delta(Var::A);
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * delta);
  return cache[k];
}

}  // namespace detail

/// Kauffman bracket state sum over all 2^n smoothings; the loop value is
/// (-A^2 - A^-2) and the open segment counts as a component.
inline Laurent1 kauffman_bracket(const KnotoidDiagram& d, int max_crossings = 24) {
  require_valid(d);
  detail::StateSum ss(d, max_crossings, "kauffman_bracket");
  std::vector<Laurent1> delta_pows;
  Laurent1 out(Var::A);
  for (std::uint32_t mask = 0; mask < (1u << ss.n); ++mask) {
    ss.smooth(mask);
    int sigma = ss.n - 2 * std::popcount(mask);
    const Laurent1& dp = detail::delta_power(delta_pows, ss.components - 1);
    for (const auto& [e, c] : dp.terms()) out.add_term(e + sigma, c);
  }
  return out;
}

/// (-A^3)^{-w(K)} <K>: invariant under all Reidemeister moves.
inline Laurent1 normalized_bracket(const KnotoidDiagram& d, int max_crossings = 24) {
  Laurent1 b = kauffman_bracket(d, max_crossings);
  int w = writhe(d);
  Laurent1 norm = Laurent1::monomial(Var::A, -3 * w, (w % 2 == 0) ? 1 : -1);
  return norm * b;
}

/// Turaev extended bracket T_K(A, u): states are weighted by the algebraic
/// intersection number of their open segment with a shortcut. The result is
/// independent of the shortcut choice.
inline Laurent2 turaev_extended_bracket(const KnotoidDiagram& d,
                                        std::optional<Shortcut> alpha = std::nullopt,
                                        int max_crossings = 24) {
  require_valid(d);
  if (d.surface != Surface::sphere)
    throw wrong_surface("turaev_extended_bracket: defined for spherical diagrams");
  Shortcut sc = alpha ? std::move(*alpha) : minimal_shortcut(d);
  detail::StateSum ss(d, max_crossings, "turaev_extended_bracket");

  int k_total = 0;
  for (const Shortcut::Hit& h : sc.hits) k_total += h.sign;

  std::vector<Laurent1> delta_pows;
  Laurent2 sum;
  for (std::uint32_t mask = 0; mask < (1u << ss.n); ++mask) {
    ss.smooth(mask);
    int sigma = ss.n - 2 * std::popcount(mask);
    int k_seg = ss.segment_dot(sc);
    const Laurent1& dp = detail::delta_power(delta_pows, ss.components - 1);
    for (const auto& [e, c] : dp.terms()) sum.add_term(e + sigma, k_seg, c);
  }
  int w = writhe(d);
  Laurent2 norm = Laurent2::monomial(-3 * w, -k_total, (w % 2 == 0) ? 1 : -1);
  return norm * sum;
}

// ---------------------------------------------------------------------------
// Affine labels and the affine index polynomial

struct CrossingWeights {
  int w_plus = 0;
  int w_minus = 0;
};

struct AffineLabels {
  std::vector<int> edge_labels;              // label of each edge
  std::map<int, CrossingWeights> weights;    // classical and singular crossings
};

namespace detail {

template <class D>
inline AffineLabels affine_labels_impl(const D& d, bool closed) {
  require_valid(d);
  auto ps = passes_impl(d.crossings, d.edge_count(), closed);
  AffineLabels out;
  out.edge_labels.assign(d.edge_count(), 0);
  // a-labels: incoming label of the pass whose label increases; b-labels the other.
  std::vector<int> a_label(d.crossings.size()), b_label(d.crossings.size());
  for (const Pass& p : ps) {
    const Crossing& cr = d.crossings[p.crossing];
    int delta = 0;
    if (cr.kind != CrossingKind::virtual_k) {
      int ts = transversal_in_slot(cr, d.edge_count(), closed, cr.slots[0]);
      bool gains = p.in_slot == 0 ? (ts == 3) : (ts == 1);
      delta = gains ? 1 : -1;
      (gains ? a_label : b_label)[p.crossing] = out.edge_labels[p.in_edge];
    }
    if (!closed || p.out_edge != 0)
      out.edge_labels[p.out_edge] = out.edge_labels[p.in_edge] + delta;
  }
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    if (d.crossings[c].kind == CrossingKind::virtual_k) continue;
    int a = a_label[c], b = b_label[c];
    out.weights[c] = CrossingWeights{b - (a + 1), a - (b - 1)};
  }
  return out;
}

}  // namespace detail

inline AffineLabels affine_labels(const KnotoidDiagram& d) {
  return detail::affine_labels_impl(d, false);
}
inline AffineLabels affine_labels(const ClosedDiagram& d) {
  return detail::affine_labels_impl(d, true);
}

/// P_K(t) = sum over classical crossings of sgn(c) (t^{w_K(c)} - 1) with
/// w_K(c) the weight matching the crossing sign. Virtual crossings are
/// skipped; singular diagrams must go through the skein extension.
template <class D>
inline Laurent1 affine_index_polynomial(const D& d) {
  for (const Crossing& c : d.crossings)
    if (c.kind == CrossingKind::singular)
      throw wrong_kind("affine_index_polynomial: use skein_extend for singular diagrams");
  AffineLabels labels = affine_labels(d);
  Laurent1 p(Var::t);
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    if (d.crossings[c].kind != CrossingKind::classical) continue;
    int sgn = crossing_sign(d, c);
    const CrossingWeights& w = labels.weights.at(c);
    int wk = sgn > 0 ? w.w_plus : w.w_minus;
    p.add_term(wk, sgn);
    p.add_term(0, -sgn);
  }
  return p;
}

// ---------------------------------------------------------------------------
// The universal type-1 invariant

/// vbar(K) = sum over crossings switched by the descending walk of
/// sgn(c) (t^{w_c} - 1), where w_c is the winding number of the loop of c in
/// the nodified walk snapshot. Evaluates to t^w - 1 on every one-singularity
/// class of winding w under the skein extension.
inline Laurent1 vbar(const KnotoidDiagram& d) {
  require_valid(d);
  if (d.surface != Surface::sphere) throw wrong_surface("vbar: defined for spherical diagrams");
  for (const Crossing& c : d.crossings)
    if (c.kind != CrossingKind::classical)
      throw wrong_kind("vbar: diagram must be classical (use skein_extend for singular ones)");
  auto [descending, record] = make_descending(d);
  (void)descending;
  Laurent1 v(Var::t);
  for (const SwitchEntry& e : record.entries) {
    int w = winding_of_loop(e.nodified, e.crossing);
    v.add_term(w, e.sign_before);
    v.add_term(0, -e.sign_before);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Vassiliev skein extension and finite-type checking

namespace detail {

inline bool is_zero_value(const Laurent1& v) { return v.is_zero(); }
inline bool is_zero_value(const Laurent2& v) { return v.is_zero(); }
inline bool is_zero_value(const Rational& v) { return v == 0; }

}  // namespace detail

/// Alternating sum of `inv` over the 2^n complete resolutions of the singular
/// crossings, signed by the number of negative resolutions. Equals inv(d)
/// when d has no singular crossings.
template <class Inv>
auto skein_extend(Inv&& inv, const KnotoidDiagram& d) {
  require_valid(d);
  std::vector<int> singulars;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    if (d.crossings[c].kind == CrossingKind::singular) singulars.push_back(c);
  int n = static_cast<int>(singulars.size());
  if (n > 20) throw state_sum_overflow("skein_extend: too many singular crossings");

  using Value = std::decay_t<decltype(inv(d))>;
  std::optional<Value> total;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    KnotoidDiagram res = d;
    for (int i = 0; i < n; ++i) res = resolve(res, singulars[i], (mask >> i & 1) ? -1 : 1);
    Value term = inv(res);
    if (std::popcount(mask) % 2 == 1) term = -term;
    if (!total)
      total = std::move(term);
    else
      *total += term;
  }
  return *total;
}

struct FiniteTypeReport {
  int order = 0;
  int samples_checked = 0;
  std::vector<int> counterexamples;  // indices of samples with nonzero extension

  bool passed() const { return counterexamples.empty(); }
};

/// Checks that the skein extension of `inv` vanishes on every sample; each
/// sample must carry more than `order` singular crossings.
template <class Inv>
FiniteTypeReport finite_type_check(Inv&& inv, int order,
                                   const std::vector<KnotoidDiagram>& samples) {
  FiniteTypeReport rep;
  rep.order = order;
  for (int i = 0; i < static_cast<int>(samples.size()); ++i) {
    int singular = 0;
    for (const Crossing& c : samples[i].crossings)
      if (c.kind == CrossingKind::singular) ++singular;
    if (singular <= order)
      throw std::invalid_argument("finite_type_check: sample " + std::to_string(i) + " has " +
                                  std::to_string(singular) + " singular crossings, need > " +
                                  std::to_string(order));
    auto value = skein_extend(inv, samples[i]);
    ++rep.samples_checked;
    if (!detail::is_zero_value(value)) rep.counterexamples.push_back(i);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exponential coefficient tables

/// v_n = coefficient of x^n in f_K(e^x), for n = 0..n_max.
inline std::vector<Rational> vassiliev_coefficients(const KnotoidDiagram& d, int n_max,
                                                    int max_crossings = 24) {
  Laurent1 f = normalized_bracket(d, max_crossings);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(exp_coeff(f, n));
  return out;
}

/// t_{k,l} = coefficient of u^l x^k in T_K(e^x, u), for k = 0..k_max.
inline std::map<std::pair<int, int>, Rational> turaev_coefficients(const KnotoidDiagram& d,
                                                                   int k_max,
                                                                   int max_crossings = 24) {
  Laurent2 t = turaev_extended_bracket(d, std::nullopt, max_crossings);
  std::map<std::pair<int, int>, Rational> out;
  for (int k = 0; k <= k_max; ++k)
    for (const auto& [l, v] : exp_coeff2(t, k)) out.emplace(std::make_pair(k, l), v);
  return out;
}

}  // namespace knotoid
