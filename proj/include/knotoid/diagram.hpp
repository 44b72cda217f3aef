#pragma once

// Combinatorial planar-map model of knotoid diagrams.
//
// A knotoid diagram with n crossings is an oriented curve from a leg
// endpoint to a head endpoint, carrying E = 2n+1 edges labeled 0..E-1 in
// traversal order.  Each crossing stores its four incident edge labels in
// counterclockwise rotational order ("slots"):
//
//   - the strand entering at slot 0 exits at slot 2, and the transversal
//     strand occupies slots 1 and 3;
//   - for classical crossings slot 0 holds the incoming under-strand edge;
//     for singular/virtual crossings it holds the incoming edge traversed
//     first from the leg;
//   - along each strand the outgoing edge label is the successor of the
//     incoming one, so a pass through a crossing consumes consecutive
//     labels of the global numbering.
//
// Closed diagrams (outputs of the closure maps) use the same crossing
// structure over a cyclic edge numbering 0..2n-1.

#include "knotoid/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotoid {

enum class CrossingKind : std::uint8_t { classical, singular, virtual_k };

enum class Surface : std::uint8_t { sphere, plane };

struct Crossing {
  CrossingKind kind = CrossingKind::classical;
  std::array<int, 4> slots{};  // edge labels, counterclockwise

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct KnotoidDiagram {
  Surface surface = Surface::sphere;
  std::vector<Crossing> crossings;
  std::optional<int> outer_face;  // required when surface == plane

  int edge_count() const { return 2 * static_cast<int>(crossings.size()) + 1; }

  friend bool operator==(const KnotoidDiagram&, const KnotoidDiagram&) = default;
};

/// Closed (knot) diagram on the sphere; edges 0..2n-1 in cyclic traversal order.
struct ClosedDiagram {
  std::vector<Crossing> crossings;

  int edge_count() const { return 2 * static_cast<int>(crossings.size()); }

  friend bool operator==(const ClosedDiagram&, const ClosedDiagram&) = default;
};

inline KnotoidDiagram trivial_diagram(Surface s = Surface::sphere) {
  KnotoidDiagram d;
  d.surface = s;
  if (s == Surface::plane) d.outer_face = 0;
  return d;
}

// ---------------------------------------------------------------------------
// Traversal view

/// One pass of the curve through a crossing.
struct Pass {
  int crossing = -1;
  int in_edge = -1;
  int out_edge = -1;
  int in_slot = -1;             // slot where the incoming edge attaches
  bool slot0_strand = false;    // true if this pass is the slot-0 strand
};

namespace detail {

inline int next_edge(int e, int edge_count, bool closed) {
  return closed ? (e + 1) % edge_count : e + 1;
}

/// Transversal incoming slot (1 or 3) of a crossing, or -1 if inconsistent.
/// `a_in` is the slot-0 strand's incoming edge, used to break the wrap-around
/// tie on very small closed diagrams.
inline int transversal_in_slot(const Crossing& c, int edge_count, bool closed, int a_in) {
  bool at1 = c.slots[3] == next_edge(c.slots[1], edge_count, closed);
  bool at3 = c.slots[1] == next_edge(c.slots[3], edge_count, closed);
  if (at1 && at3) {  // possible only on tiny closed diagrams
    if (c.slots[1] != a_in) return 1;
    return c.slots[3] != a_in ? 3 : -1;
  }
  if (at1) return 1;
  if (at3) return 3;
  return -1;
}

/// Extract the two passes of a crossing. Returns false on malformed slots.
inline bool crossing_passes(const Crossing& c, int edge_count, bool closed, Pass& a, Pass& b) {
  if (c.slots[2] != next_edge(c.slots[0], edge_count, closed)) return false;
  int ts = transversal_in_slot(c, edge_count, closed, c.slots[0]);
  if (ts < 0) return false;
  a.in_edge = c.slots[0];
  a.out_edge = c.slots[2];
  a.in_slot = 0;
  a.slot0_strand = true;
  b.in_edge = c.slots[ts];
  b.out_edge = c.slots[ts == 1 ? 3 : 1];
  b.in_slot = ts;
  b.slot0_strand = false;
  return true;
}

/// Passes in traversal order (pass k has in-edge k). Throws on malformed input;
/// use validate() for a non-throwing report.
inline std::vector<Pass> passes_impl(const std::vector<Crossing>& crossings, int edge_count,
                                     bool closed) {
  int n_pass = 2 * static_cast<int>(crossings.size());
  std::vector<Pass> out(n_pass);
  std::vector<bool> seen(n_pass, false);
  for (int ci = 0; ci < static_cast<int>(crossings.size()); ++ci) {
    Pass a, b;
    if (!crossing_passes(crossings[ci], edge_count, closed, a, b))
      throw invalid_diagram("malformed crossing slots at crossing " + std::to_string(ci));
    a.crossing = b.crossing = ci;
    for (const Pass& p : {a, b}) {
      if (p.in_edge < 0 || p.in_edge >= n_pass || seen[p.in_edge])
        throw invalid_diagram("inconsistent edge labels at crossing " + std::to_string(ci));
      seen[p.in_edge] = true;
      out[p.in_edge] = p;
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<Pass> passes(const KnotoidDiagram& d) {
  return detail::passes_impl(d.crossings, d.edge_count(), false);
}
inline std::vector<Pass> passes(const ClosedDiagram& d) {
  return detail::passes_impl(d.crossings, d.edge_count(), true);
}

// ---------------------------------------------------------------------------
// Faces

/// A directed edge side. The face traced through a dart lies to the right of
/// the dart's direction (forward = traversal orientation of the edge).
struct Dart {
  int edge = -1;
  bool forward = true;

  int id(int) const { return edge * 2 + (forward ? 0 : 1); }
  static Dart from_id(int id) { return Dart{id / 2, id % 2 == 0}; }
  Dart reversed() const { return Dart{edge, !forward}; }

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  int id = -1;
  std::vector<Dart> boundary;  // cyclic, in tracing order
};

struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> dart_face;  // dart id -> face id
  int leg_face = -1;           // face containing the leg endpoint (open diagrams)
  int head_face = -1;          // face containing the head endpoint

  int face_of(Dart d) const { return dart_face[d.edge * 2 + (d.forward ? 0 : 1)]; }
  /// Face on the right (resp. left) of the oriented edge e.
  int right_of(int e) const { return dart_face[2 * e]; }
  int left_of(int e) const { return dart_face[2 * e + 1]; }
};

namespace detail {

// Where each edge end attaches: crossing slot or endpoint.
struct Attach {
  int crossing = -1;  // -1: endpoint (leg for tail of edge 0, head for head of last edge)
  int slot = -1;
};

struct AttachTable {
  // index: edge * 2 + (0 = tail end, 1 = head end)
  std::vector<Attach> at;
};

inline AttachTable attachments(const std::vector<Crossing>& crossings, int edge_count,
                               bool closed) {
  AttachTable t;
  t.at.assign(2 * edge_count, Attach{});
  auto ps = passes_impl(crossings, edge_count, closed);
  for (const Pass& p : ps) {
    int out_slot = p.in_slot == 0 ? 2 : (p.in_slot == 1 ? 3 : 1);
    t.at[2 * p.in_edge + 1] = Attach{p.crossing, p.in_slot};
    t.at[2 * p.out_edge + 0] = Attach{p.crossing, out_slot};
  }
  return t;
}

// slot -> incident edge end, per crossing
struct SlotEnd {
  int edge = -1;
  int end = -1;  // 0 tail, 1 head

  int end_id() const { return 2 * edge + end; }
};

inline std::vector<std::array<SlotEnd, 4>> slot_end_table(const std::vector<Crossing>& crossings,
                                                          int edge_count, bool closed) {
  AttachTable at = attachments(crossings, edge_count, closed);
  std::vector<std::array<SlotEnd, 4>> slot_end(crossings.size());
  for (int e = 0; e < edge_count; ++e) {
    for (int end = 0; end < 2; ++end) {
      const Attach& a = at.at[2 * e + end];
      if (a.crossing >= 0) slot_end[a.crossing][a.slot] = SlotEnd{e, end};
    }
  }
  return slot_end;
}

inline FaceSet faces_impl(const std::vector<Crossing>& crossings, int edge_count, bool closed) {
  FaceSet fs;
  if (edge_count == 0) return fs;  // crossingless closed curve
  AttachTable at = attachments(crossings, edge_count, closed);
  std::vector<std::array<SlotEnd, 4>> slot_end = slot_end_table(crossings, edge_count, closed);

  fs.dart_face.assign(2 * edge_count, -1);
  for (int start = 0; start < 2 * edge_count; ++start) {
    if (fs.dart_face[start] >= 0) continue;
    Face f;
    f.id = static_cast<int>(fs.faces.size());
    int cur = start;
    do {
      fs.dart_face[cur] = f.id;
      Dart d = Dart::from_id(cur);
      f.boundary.push_back(d);
      // Arrival end of the dart: forward darts arrive at the head end.
      const Attach& a = at.at[2 * d.edge + (d.forward ? 1 : 0)];
      if (a.crossing < 0) {
        cur = d.reversed().id(0);  // turn back around the endpoint
      } else {
        const SlotEnd& se = slot_end[a.crossing][(a.slot + 1) % 4];
        // Depart away from the crossing: forward if the edge starts here.
        cur = Dart{se.edge, se.end == 0}.id(0);
      }
    } while (cur != start);
    fs.faces.push_back(std::move(f));
  }
  if (!closed) {
    fs.leg_face = fs.dart_face[0 * 2 + 0];               // edge 0, forward
    fs.head_face = fs.dart_face[(edge_count - 1) * 2 + 0];  // last edge, forward
  }
  return fs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.code;
      if (!v.detail.empty()) s += ": " + v.detail;
    }
    return s;
  }
};

namespace detail {

inline ValidationReport validate_impl(const std::vector<Crossing>& crossings, int edge_count,
                                      bool closed, Surface surface,
                                      std::optional<int> outer_face) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& code, const std::string& detail) {
    rep.violations.push_back({code, detail});
  };

  int n = static_cast<int>(crossings.size());

  // Range and multiplicity of edge labels across slots.
  std::vector<int> mult(edge_count, 0);
  bool range_ok = true;
  for (int ci = 0; ci < n; ++ci) {
    for (int s = 0; s < 4; ++s) {
      int e = crossings[ci].slots[s];
      if (e < 0 || e >= edge_count) {
        fail("edge range", "crossing " + std::to_string(ci) + " slot " + std::to_string(s) +
                               " holds label " + std::to_string(e));
        range_ok = false;
      } else {
        ++mult[e];
      }
    }
  }
  if (range_ok) {
    for (int e = 0; e < edge_count; ++e) {
      int expected = 2;
      if (!closed && (e == 0 || e == edge_count - 1)) expected = 1;
      if (edge_count == 1) expected = 0;  // trivial knotoid
      if (mult[e] != expected)
        fail("edge multiplicity", "edge " + std::to_string(e) + " appears " +
                                      std::to_string(mult[e]) + " times, expected " +
                                      std::to_string(expected));
    }
  }

  // Per-crossing strand structure and global traversal consistency.
  bool structure_ok = range_ok;
  if (range_ok) {
    std::vector<int> in_seen(edge_count, 0);
    for (int ci = 0; ci < n; ++ci) {
      Pass a, b;
      if (!detail::crossing_passes(crossings[ci], edge_count, closed, a, b)) {
        fail("strand structure", "crossing " + std::to_string(ci) +
                                     " does not consume consecutive edge labels");
        structure_ok = false;
        continue;
      }
      ++in_seen[a.in_edge];
      ++in_seen[b.in_edge];
    }
    if (structure_ok) {
      int last_in = closed ? edge_count : edge_count - 1;
      for (int e = 0; e < last_in; ++e) {
        if (in_seen[e] != 1) {
          fail("traversal", "edge " + std::to_string(e) + " is the incoming edge of " +
                                std::to_string(in_seen[e]) + " passes");
          structure_ok = false;
        }
      }
      if (!closed && edge_count > 1 && in_seen[edge_count - 1] != 0) {
        fail("traversal", "final edge used as an incoming edge");
        structure_ok = false;
      }
    }
  }

  // Planarity via the Euler characteristic of the face tracing.
  int face_count = -1;
  if (structure_ok) {
    FaceSet fs = detail::faces_impl(crossings, edge_count, closed);
    face_count = static_cast<int>(fs.faces.size());
    int v = closed ? n : n + 2;
    int e = edge_count;
    int f = (closed && n == 0) ? 2 : face_count;  // a crossingless circle bounds two discs
    if (v - e + f != 2)
      fail("planarity", "V - E + F = " + std::to_string(v - e + f) + ", expected 2");
  }

  if (surface == Surface::plane) {
    if (!outer_face) {
      fail("outer face", "planar diagram without a marked outer face");
    } else if (face_count >= 0 && (*outer_face < 0 || *outer_face >= face_count)) {
      fail("outer face", "face id " + std::to_string(*outer_face) + " out of range");
    }
  } else if (outer_face) {
    fail("outer face", "spherical diagram carries an outer face mark");
  }

  return rep;
}

}  // namespace detail

inline ValidationReport validate(const KnotoidDiagram& d) {
  return detail::validate_impl(d.crossings, d.edge_count(), false, d.surface, d.outer_face);
}
inline ValidationReport validate(const ClosedDiagram& d) {
  return detail::validate_impl(d.crossings, d.edge_count(), true, Surface::sphere, std::nullopt);
}

template <class D>
inline void require_valid(const D& d) {
  ValidationReport r = validate(d);
  if (!r.ok()) throw invalid_diagram(r.summary());
}

inline FaceSet faces(const KnotoidDiagram& d) {
  require_valid(d);
  return detail::faces_impl(d.crossings, d.edge_count(), false);
}
inline FaceSet faces(const ClosedDiagram& d) {
  require_valid(d);
  return detail::faces_impl(d.crossings, d.edge_count(), true);
}

// ---------------------------------------------------------------------------
// Signs, writhe, mirror

namespace detail {

template <class D>
inline int crossing_sign_impl(const D& d, int c, bool closed) {
  const Crossing& cr = d.crossings.at(c);
  if (cr.kind != CrossingKind::classical)
    throw wrong_kind("crossing_sign: crossing " + std::to_string(c) + " is not classical");
  // Over-strand incoming at slot 3 gives +1, at slot 1 gives -1.
  int ts = transversal_in_slot(cr, d.edge_count(), closed, cr.slots[0]);
  if (ts < 0) throw invalid_diagram("malformed crossing slots");
  return ts == 3 ? 1 : -1;
}

}  // namespace detail

inline int crossing_sign(const KnotoidDiagram& d, int c) {
  return detail::crossing_sign_impl(d, c, false);
}
inline int crossing_sign(const ClosedDiagram& d, int c) {
  return detail::crossing_sign_impl(d, c, true);
}

template <class D>
inline int writhe(const D& d) {
  require_valid(d);
  int w = 0;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    if (d.crossings[c].kind != CrossingKind::classical)
      throw wrong_kind("writhe: diagram has a non-classical crossing");
    w += crossing_sign(d, c);
  }
  return w;
}

namespace detail {

/// Rotate slots so the transversal's incoming edge lands in slot 0,
/// swapping the over/under roles while keeping the rotation system.
inline Crossing swap_strand_roles(const Crossing& cr, int edge_count, bool closed) {
  int ts = transversal_in_slot(cr, edge_count, closed, cr.slots[0]);
  if (ts < 0) throw invalid_diagram("malformed crossing slots");
  Crossing out = cr;
  for (int i = 0; i < 4; ++i) out.slots[i] = cr.slots[(ts + i) % 4];
  return out;
}

}  // namespace detail

/// Mirror image: over/under swapped at every classical crossing.
inline KnotoidDiagram mirror(const KnotoidDiagram& d) {
  require_valid(d);
  KnotoidDiagram m = d;
  for (auto& cr : m.crossings) {
    if (cr.kind == CrossingKind::classical)
      cr = detail::swap_strand_roles(cr, d.edge_count(), false);
  }
  return m;
}

// ---------------------------------------------------------------------------
// Builder: diagrams from a pass sequence
//
// The move engine edits diagrams through this representation: a list of
// crossing ids in traversal order (each id exactly twice) together with a
// per-crossing spec. Edge labels are implicit (pass k consumes edges k, k+1).

struct CrossingSpec {
  CrossingKind kind = CrossingKind::classical;
  bool under_first = true;  // classical: which pass is the under strand
  int rot_first = 1;        // slot (1 or 3) where the second pass's strand
                            // enters, relative to the first pass's strand
                            // occupying slot 0

  friend bool operator==(const CrossingSpec&, const CrossingSpec&) = default;
};

/// Sign of a classical crossing determined by its spec.
inline int spec_sign(const CrossingSpec& s) {
  return (s.under_first == (s.rot_first == 3)) ? 1 : -1;
}

namespace detail {

inline std::vector<Crossing> crossings_from_passes(const std::vector<int>& pass_crossing,
                                                   const std::vector<CrossingSpec>& specs,
                                                   int edge_count, bool closed) {
  int n = static_cast<int>(specs.size());
  if (static_cast<int>(pass_crossing.size()) != 2 * n)
    throw std::invalid_argument("pass list length must be twice the crossing count");
  std::vector<std::array<int, 2>> visits(n, {-1, -1});
  for (int k = 0; k < 2 * n; ++k) {
    int c = pass_crossing[k];
    if (c < 0 || c >= n) throw std::invalid_argument("pass references unknown crossing");
    if (visits[c][0] < 0)
      visits[c][0] = k;
    else if (visits[c][1] < 0)
      visits[c][1] = k;
    else
      throw std::invalid_argument("crossing visited more than twice");
  }
  std::vector<Crossing> out(n);
  for (int c = 0; c < n; ++c) {
    if (visits[c][1] < 0) throw std::invalid_argument("crossing visited fewer than twice");
    const CrossingSpec& s = specs[c];
    int p = visits[c][0], q = visits[c][1];
    bool a_first = s.kind == CrossingKind::classical ? s.under_first : true;
    int a_in = a_first ? p : q;
    int b_in = a_first ? q : p;
    int rot = a_first ? s.rot_first : (s.rot_first == 1 ? 3 : 1);
    Crossing& cr = out[c];
    cr.kind = s.kind;
    cr.slots[0] = a_in;
    cr.slots[2] = next_edge(a_in, edge_count, closed);
    cr.slots[rot] = b_in;
    cr.slots[rot == 1 ? 3 : 1] = next_edge(b_in, edge_count, closed);
  }
  return out;
}

}  // namespace detail

inline KnotoidDiagram build_from_passes(Surface surface, const std::vector<int>& pass_crossing,
                                        const std::vector<CrossingSpec>& specs,
                                        std::optional<int> outer_face = std::nullopt) {
  KnotoidDiagram d;
  d.surface = surface;
  d.outer_face = outer_face;
  int edge_count = static_cast<int>(pass_crossing.size()) + 1;
  d.crossings = detail::crossings_from_passes(pass_crossing, specs, edge_count, false);
  return d;
}

inline ClosedDiagram build_closed_from_passes(const std::vector<int>& pass_crossing,
                                              const std::vector<CrossingSpec>& specs) {
  ClosedDiagram d;
  int edge_count = static_cast<int>(pass_crossing.size());
  d.crossings = detail::crossings_from_passes(pass_crossing, specs, edge_count, true);
  return d;
}

struct PassForm {
  std::vector<int> pass_crossing;
  std::vector<CrossingSpec> specs;
};

namespace detail {

template <class D>
inline PassForm decompose_impl(const D& d, bool closed) {
  auto ps = passes_impl(d.crossings, d.edge_count(), closed);
  PassForm out;
  out.pass_crossing.resize(ps.size());
  out.specs.resize(d.crossings.size());
  std::vector<int> first_pass(d.crossings.size(), -1);
  for (int k = 0; k < static_cast<int>(ps.size()); ++k) {
    const Pass& p = ps[k];
    out.pass_crossing[k] = p.crossing;
    CrossingSpec& s = out.specs[p.crossing];
    s.kind = d.crossings[p.crossing].kind;
    if (first_pass[p.crossing] < 0) {
      first_pass[p.crossing] = k;
      s.under_first = p.slot0_strand;
      if (p.slot0_strand) {
        int ts = transversal_in_slot(d.crossings[p.crossing], d.edge_count(), closed,
                                     d.crossings[p.crossing].slots[0]);
        s.rot_first = ts;
      }
    } else if (p.slot0_strand) {
      // slot-0 strand is the second pass; express the rotation relative to
      // the first pass instead.
      int ts = transversal_in_slot(d.crossings[p.crossing], d.edge_count(), closed,
                                   d.crossings[p.crossing].slots[0]);
      s.rot_first = ts == 1 ? 3 : 1;
    }
  }
  return out;
}

}  // namespace detail

inline PassForm decompose(const KnotoidDiagram& d) { return detail::decompose_impl(d, false); }
inline PassForm decompose(const ClosedDiagram& d) { return detail::decompose_impl(d, true); }

}  // namespace knotoid
