#pragma once

// Dual-graph machinery: diagram height, minimal shortcuts, and the four
// closure maps (under, over, virtual, singular).
//
// A shortcut is recorded as the ordered list of diagram edges a simple
// dual-graph path from the leg face to the head face crosses. Each hit
// carries the sign of the intersection: a diagram edge crossing the dual
// path from left to right (looking along the path) counts +1.

#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace knotoid {

struct Shortcut {
  struct Hit {
    int edge = -1;
    int sign = 0;  // +1: edge crosses the dual path left-to-right

    friend bool operator==(const Hit&, const Hit&) = default;
  };
  std::vector<Hit> hits;  // in order from the leg face to the head face

  int length() const { return static_cast<int>(hits.size()); }

  friend bool operator==(const Shortcut&, const Shortcut&) = default;
};

namespace detail {

/// Sign of a dual step through edge e leaving face `from`. The orientation is
/// calibrated so the loop of a regular diagram built with a counterclockwise
/// spiral winds positively around the leg.
inline int dual_step_sign(const FaceSet& fs, int edge, int from_face) {
  return fs.right_of(edge) == from_face ? -1 : 1;
}

inline Shortcut shortcut_from_faces(const FaceSet& fs, const std::vector<int>& face_path,
                                    const std::vector<int>& edge_path) {
  Shortcut sc;
  sc.hits.reserve(edge_path.size());
  for (size_t i = 0; i < edge_path.size(); ++i)
    sc.hits.push_back({edge_path[i], dual_step_sign(fs, edge_path[i], face_path[i])});
  return sc;
}

}  // namespace detail

/// Shortest dual path from the leg face to the head face. Deterministic:
/// breadth-first search expanding faces in id order through edges in label
/// order.
inline Shortcut minimal_shortcut(const KnotoidDiagram& d) {
  require_valid(d);
  FaceSet fs = detail::faces_impl(d.crossings, d.edge_count(), false);
  int nf = static_cast<int>(fs.faces.size());
  std::vector<int> prev_face(nf, -1), prev_edge(nf, -1);
  std::vector<bool> seen(nf, false);
  std::deque<int> queue;
  seen[fs.leg_face] = true;
  queue.push_back(fs.leg_face);
  while (!queue.empty() && !seen[fs.head_face]) {
    int f = queue.front();
    queue.pop_front();
    for (int e = 0; e < d.edge_count(); ++e) {
      int l = fs.left_of(e), r = fs.right_of(e);
      if (l == r) continue;
      int g = -1;
      if (l == f) g = r;
      else if (r == f) g = l;
      if (g < 0 || seen[g]) continue;
      seen[g] = true;
      prev_face[g] = f;
      prev_edge[g] = e;
      queue.push_back(g);
      if (g == fs.head_face) break;
    }
  }
  std::vector<int> face_path, edge_path;
  for (int f = fs.head_face; f != fs.leg_face; f = prev_face[f]) {
    edge_path.push_back(prev_edge[f]);
    face_path.push_back(prev_face[f]);
  }
  std::reverse(face_path.begin(), face_path.end());
  std::reverse(edge_path.begin(), edge_path.end());
  return detail::shortcut_from_faces(fs, face_path, edge_path);
}

/// Minimal number of shortcut intersections for this diagram.
inline int height_of_diagram(const KnotoidDiagram& d) {
  return minimal_shortcut(d).length();
}

/// All shortcuts arising from simple dual paths, in DFS order, up to
/// max_count. Exhaustive when the cap is not hit; intended for small-diagram
/// oracles and path-independence checks.
inline std::vector<Shortcut> simple_shortcuts(const KnotoidDiagram& d,
                                              std::size_t max_count = 10000) {
  require_valid(d);
  FaceSet fs = detail::faces_impl(d.crossings, d.edge_count(), false);
  std::vector<Shortcut> out;
  std::vector<bool> on_path(fs.faces.size(), false);
  std::vector<int> face_path{fs.leg_face}, edge_path;
  std::function<void(int)> dfs = [&](int f) {
    if (out.size() >= max_count) return;
    if (f == fs.head_face) {
      out.push_back(detail::shortcut_from_faces(fs, face_path, edge_path));
      return;
    }
    for (int e = 0; e < d.edge_count(); ++e) {
      int l = fs.left_of(e), r = fs.right_of(e);
      if (l == r) continue;
      int g = -1;
      if (l == f) g = r;
      else if (r == f) g = l;
      if (g < 0 || on_path[g]) continue;
      on_path[g] = true;
      face_path.push_back(g);
      edge_path.push_back(e);
      dfs(g);
      face_path.pop_back();
      edge_path.pop_back();
      on_path[g] = false;
    }
  };
  on_path[fs.leg_face] = true;
  dfs(fs.leg_face);
  return out;
}

// ---------------------------------------------------------------------------
// Closures

namespace detail {

/// Join head to leg along the reversed shortcut; each intersection becomes a
/// crossing of the given kind, with the closure strand under when
/// closure_under is set (ignored for non-classical kinds).
inline ClosedDiagram close_along(const KnotoidDiagram& d, const Shortcut& sc, CrossingKind kind,
                                 bool closure_under) {
  PassForm pf = decompose(d);
  int n = static_cast<int>(pf.specs.size());
  int L = sc.length();

  std::vector<int> host_of_edge(d.edge_count(), -1);  // edge -> new crossing id
  for (int i = 0; i < L; ++i) host_of_edge[sc.hits[i].edge] = n + i;

  std::vector<int> rebuilt;
  rebuilt.reserve(pf.pass_crossing.size() + 2 * L);
  for (int e = 0; e < d.edge_count(); ++e) {
    if (host_of_edge[e] >= 0) rebuilt.push_back(host_of_edge[e]);
    if (e < static_cast<int>(pf.pass_crossing.size())) rebuilt.push_back(pf.pass_crossing[e]);
  }
  for (int i = L - 1; i >= 0; --i) rebuilt.push_back(n + i);

  for (int i = 0; i < L; ++i) {
    // The diagram pass comes first; the rotation of the closure strand at the
    // new crossing is determined by the intersection sign.
    CrossingSpec spec;
    spec.kind = kind;
    spec.rot_first = sc.hits[i].sign > 0 ? 1 : 3;
    spec.under_first = !closure_under;
    pf.specs.push_back(spec);
  }
  pf.pass_crossing = std::move(rebuilt);
  ClosedDiagram out = build_closed_from_passes(pf.pass_crossing, pf.specs);
  ValidationReport rep = validate(out);
  if (!rep.ok()) throw std::logic_error("closure produced an invalid diagram: " + rep.summary());
  return out;
}

}  // namespace detail

/// Classical closure of type 'u': all new crossings pass under the diagram.
inline ClosedDiagram underpass_closure(const KnotoidDiagram& d) {
  require_valid(d);
  return detail::close_along(d, minimal_shortcut(d), CrossingKind::classical, true);
}

/// Classical closure of type 'o': all new crossings pass over the diagram.
inline ClosedDiagram overpass_closure(const KnotoidDiagram& d) {
  require_valid(d);
  return detail::close_along(d, minimal_shortcut(d), CrossingKind::classical, false);
}

inline ClosedDiagram virtual_closure(const KnotoidDiagram& d) {
  require_valid(d);
  return detail::close_along(d, minimal_shortcut(d), CrossingKind::virtual_k, false);
}

/// Singular closure: defined for diagrams of height one; the single new
/// crossing is nodified. Well-definedness additionally needs the knotoid to
/// be prime, which is the caller's responsibility.
inline ClosedDiagram singular_closure(const KnotoidDiagram& d) {
  require_valid(d);
  Shortcut sc = minimal_shortcut(d);
  if (sc.length() != 1)
    throw height_not_one("singular_closure: diagram height is " +
                         std::to_string(sc.length()) + ", must be 1");
  return detail::close_along(d, sc, CrossingKind::singular, false);
}

}  // namespace knotoid
