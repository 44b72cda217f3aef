#pragma once

// Order-1 linear chord diagram calculus for spherical knotoids: winding
// numbers of crossing loops, the singular-diagram <-> chord-diagram
// correspondences, regular diagrams, the group law and singular height.
//
// Winding numbers are computed homologically: the loop of a crossing is the
// sub-walk between its two visits, and its winding around the leg is the
// signed number of intersections of the loop's edges with a dual-graph path
// from the leg face to the head face. On the sphere the difference of two
// such paths is a dual cycle, so the count is path-independent.

#include "knotoid/closure.hpp"
#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"

#include <cstdlib>
#include <vector>

namespace knotoid {

/// Spherical linear chord diagram of order one, abstracted to the winding
/// number of its single chord around the leg (counterclockwise positive).
struct ChordDiagram1 {
  int winding = 0;

  friend bool operator==(const ChordDiagram1&, const ChordDiagram1&) = default;
};

/// Group law: concatenation of chords adds winding numbers.
inline ChordDiagram1 chord_multiply(ChordDiagram1 a, ChordDiagram1 b) {
  return {a.winding + b.winding};
}

/// Singular height of the order-1 class: realized by its regular diagram.
inline int singular_height(ChordDiagram1 c) { return std::abs(c.winding); }

namespace detail {

inline void check_spherical_chord(const KnotoidDiagram& d, const char* op) {
  if (d.surface != Surface::sphere)
    throw wrong_surface(std::string(op) + ": defined for spherical diagrams");
}

}  // namespace detail

/// Winding number around the leg of the loop of crossing c (the sub-walk from
/// its first to its second visit), counted along the given dual path.
inline int winding_of_loop(const KnotoidDiagram& d, int c, const Shortcut& path) {
  require_valid(d);
  detail::check_spherical_chord(d, "winding_of_loop");
  if (c < 0 || c >= static_cast<int>(d.crossings.size()))
    throw std::invalid_argument("winding_of_loop: no such crossing");
  auto ps = passes(d);
  int first_in = -1, second_in = -1;
  for (const Pass& p : ps) {
    if (p.crossing != c) continue;
    (first_in < 0 ? first_in : second_in) = p.in_edge;
  }
  // Loop edges run from the first visit's exit to the second visit's entry.
  int lo = first_in + 1, hi = second_in;
  int w = 0;
  for (const Shortcut::Hit& h : path.hits)
    if (h.edge >= lo && h.edge <= hi) w += h.sign;
  return w;
}

inline int winding_of_loop(const KnotoidDiagram& d, int c) {
  return winding_of_loop(d, c, minimal_shortcut(d));
}

/// Chord diagram of a spherical knotoid diagram with exactly one singular
/// crossing; constant on the singular-equivalence class of the diagram.
inline ChordDiagram1 chord_of_singular(const KnotoidDiagram& d) {
  require_valid(d);
  detail::check_spherical_chord(d, "chord_of_singular");
  int singular = -1, count = 0;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    if (d.crossings[c].kind == CrossingKind::singular) {
      singular = c;
      ++count;
    }
  }
  if (count != 1)
    throw wrong_singular_count("chord_of_singular: diagram has " + std::to_string(count) +
                               " singular crossings, need exactly 1");
  return {winding_of_loop(d, singular)};
}

// ---------------------------------------------------------------------------
// Regular diagrams
//
// R_w is the descending one-singularity diagram with the singular crossing
// adjacent to the leg and the singular loop winding w times counterclockwise
// around it. The loop is a spiral: a radial climb away from the leg followed
// by |w| full turns; the climb crosses the end of every turn but the last
// (|w|-1 self-crossings, first met over), and the tail to the head crosses
// every turn from inside out, always under (|w| crossings). Negative w uses
// the reflected construction.

namespace detail {

struct SpiralIds {
  int s = 0;                 // singular crossing
  std::vector<int> t;        // t[i]: end of turn i+1 crossing the climb
  std::vector<int> u;        // u[j]: tail crossing turn (w-j) counted inside out
};

/// Common pass skeleton of R_w and the surgery diagram, |w| >= 1.
/// Passes: s, climb (T_{w-1}..T_1), per turn i<w (U_{w+1-i}, T_i), U_1, s,
/// tail (U_1..U_w).
inline void spiral_passes(int w, int first_id, std::vector<int>& out, SpiralIds& ids) {
  ids.s = first_id;
  ids.t.resize(w - 1);
  ids.u.resize(w);
  for (int i = 0; i < w - 1; ++i) ids.t[i] = first_id + 1 + i;
  for (int j = 0; j < w; ++j) ids.u[j] = first_id + w + j;

  out.push_back(ids.s);
  for (int i = w - 1; i >= 1; --i) out.push_back(ids.t[i - 1]);
  for (int i = 1; i <= w - 1; ++i) {
    out.push_back(ids.u[w - i]);  // U_{w+1-i}, 1-based
    out.push_back(ids.t[i - 1]);
  }
  out.push_back(ids.u[0]);
  out.push_back(ids.s);
  for (int j = 0; j < w; ++j) out.push_back(ids.u[j]);
}

}  // namespace detail

/// The regular diagram R_w: 2|w|-1 classical crossings for |w| >= 1, the
/// nodified kink for w = 0.
inline KnotoidDiagram regular_diagram(int w) {
  if (w == 0) {
    return build_from_passes(Surface::sphere, {0, 0},
                             {{CrossingKind::singular, true, 3}});
  }
  int aw = std::abs(w);
  std::vector<int> pass_list;
  detail::SpiralIds ids;
  detail::spiral_passes(aw, 0, pass_list, ids);

  std::vector<CrossingSpec> specs(2 * aw);
  specs[ids.s] = {CrossingKind::singular, true, 1};
  for (int t : ids.t) specs[t] = {CrossingKind::classical, false, 1};   // climb over, +1
  for (int u : ids.u) specs[u] = {CrossingKind::classical, false, 3};   // tail under, -1
  if (w < 0) {
    for (CrossingSpec& s : specs) s.rot_first = s.rot_first == 1 ? 3 : 1;
  }
  return build_from_passes(Surface::sphere, pass_list, specs);
}

/// Band surgery on an order-1 chord diagram: the chord is doubled and a
/// singular crossing plus a compensating positive classical crossing are
/// inserted between the two copies (the output is the isotopy-simplified
/// diagram of that construction). chord_of_singular inverts it.
inline KnotoidDiagram surgery(ChordDiagram1 c) {
  int w = c.winding;
  if (w == 0) {
    return build_from_passes(Surface::sphere, {0, 0},
                             {{CrossingKind::singular, true, 3}});
  }
  int aw = std::abs(w);
  // Split the spiral's base point into the singular crossing followed by the
  // compensating classical one; the returning strand meets them in reverse.
  std::vector<int> pass_list;
  detail::SpiralIds ids;
  std::vector<int> skeleton;
  detail::spiral_passes(aw, 0, skeleton, ids);
  int comp = 2 * aw;  // compensating crossing id
  for (size_t k = 0; k < skeleton.size(); ++k) {
    bool second_s = skeleton[k] == ids.s && k > 0;
    if (second_s) pass_list.push_back(comp);
    pass_list.push_back(skeleton[k]);
    if (skeleton[k] == ids.s && k == 0) pass_list.push_back(comp);
  }

  std::vector<CrossingSpec> specs(2 * aw + 1);
  specs[ids.s] = {CrossingKind::singular, true, 3};
  specs[comp] = {CrossingKind::classical, false, 1};
  for (int t : ids.t) specs[t] = {CrossingKind::classical, false, 1};
  for (int u : ids.u) specs[u] = {CrossingKind::classical, false, 3};
  if (w < 0) {
    for (CrossingSpec& s : specs) s.rot_first = s.rot_first == 1 ? 3 : 1;
    // Keep the compensating crossing positive under reflection.
    specs[comp].under_first = true;
  }
  return build_from_passes(Surface::sphere, pass_list, specs);
}

}  // namespace knotoid
