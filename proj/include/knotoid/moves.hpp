#pragma once

// Reidemeister and rigid-vertex move engine over spherical knotoid diagrams,
// plus crossing switches, nodification/resolution, the descending walk and
// seeded random move walks.
//
// Moves are rewrites of the pass-sequence form (see diagram.hpp). Endpoints
// are 1-valent vertices of the planar map and no rewrite ever carries an
// endpoint across a strand, so the forbidden moves are unrepresentable here
// rather than checked for.
//
// Site locations are expressed as darts bound to the diagram the sites were
// enumerated on; applying a site to a diagram it no longer fits throws
// stale_move.

#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace knotoid {

enum class MoveKind : std::uint8_t {
  r1_add,
  r1_remove,
  r2_add,
  r2_remove,
  r3,
  rigid_slide,      // R3-type slide past a singular crossing
  switch_crossing,  // not an isotopy move; used by singular-equivalence walks
};

struct MoveSite {
  MoveKind kind{};
  Dart a{};             // r1_add: curl side; r1_remove: monogon dart; r2_*: first dart
  Dart b{};             // r2_*: second dart
  Dart c{};             // r3/rigid_slide: third triangle dart
  bool flag = false;    // r1_add: under-first kink; r2_add: strand of `a` passes over
  int crossing = -1;    // switch_crossing
};

namespace detail {

inline void check_spherical(const KnotoidDiagram& d, const char* op) {
  if (d.surface != Surface::sphere)
    throw wrong_surface(std::string(op) + ": move engine operates on spherical diagrams");
}

inline KnotoidDiagram rebuild(const PassForm& pf) {
  KnotoidDiagram out = build_from_passes(Surface::sphere, pf.pass_crossing, pf.specs);
  ValidationReport rep = validate(out);
  if (!rep.ok()) throw std::logic_error("move produced an invalid diagram: " + rep.summary());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Elementary crossing operations

inline KnotoidDiagram switch_crossing(const KnotoidDiagram& d, int c) {
  require_valid(d);
  if (c < 0 || c >= static_cast<int>(d.crossings.size()) ||
      d.crossings[c].kind != CrossingKind::classical)
    throw wrong_kind("switch_crossing: crossing must be classical");
  KnotoidDiagram out = d;
  out.crossings[c] = detail::swap_strand_roles(out.crossings[c], d.edge_count(), false);
  return out;
}

/// Replace a classical crossing by a singular one (forget over/under).
inline KnotoidDiagram nodify(const KnotoidDiagram& d, int c) {
  require_valid(d);
  if (c < 0 || c >= static_cast<int>(d.crossings.size()) ||
      d.crossings[c].kind != CrossingKind::classical)
    throw wrong_kind("nodify: crossing must be classical");
  PassForm pf = decompose(d);
  pf.specs[c].kind = CrossingKind::singular;
  pf.specs[c].under_first = true;
  return build_from_passes(d.surface, pf.pass_crossing, pf.specs, d.outer_face);
}

/// Resolve a singular crossing into a classical one of the given sign.
inline KnotoidDiagram resolve(const KnotoidDiagram& d, int s, int sign) {
  require_valid(d);
  if (s < 0 || s >= static_cast<int>(d.crossings.size()) ||
      d.crossings[s].kind != CrossingKind::singular)
    throw wrong_kind("resolve: crossing must be singular");
  if (sign != 1 && sign != -1) throw std::invalid_argument("resolve: sign must be +1 or -1");
  PassForm pf = decompose(d);
  CrossingSpec& spec = pf.specs[s];
  spec.kind = CrossingKind::classical;
  spec.under_first = (sign == 1) == (spec.rot_first == 3);
  return build_from_passes(d.surface, pf.pass_crossing, pf.specs, d.outer_face);
}

// ---------------------------------------------------------------------------
// Site enumeration

namespace detail {

struct TriangleInfo {
  std::array<int, 3> corners;   // crossings, in face order
  std::array<int, 3> sides;     // edge labels, side i ends at corner i
  bool ok = false;
};

/// Decode a 3-dart face into corner crossings and side edges.
inline TriangleInfo triangle_info(const std::vector<Crossing>& crossings, int edge_count,
                                  const Face& f) {
  TriangleInfo t;
  if (f.boundary.size() != 3) return t;
  AttachTable at = attachments(crossings, edge_count, false);
  for (int i = 0; i < 3; ++i) {
    const Dart& d = f.boundary[i];
    const Attach& arr = at.at[2 * d.edge + (d.forward ? 1 : 0)];
    if (arr.crossing < 0) return t;  // corner at an endpoint
    t.corners[i] = arr.crossing;
    t.sides[i] = d.edge;
  }
  if (t.corners[0] == t.corners[1] || t.corners[1] == t.corners[2] ||
      t.corners[0] == t.corners[2])
    return t;
  t.ok = true;
  return t;
}

/// A triangle side can slide iff its strand is over (or under) at both of its
/// corner crossings. Sides are edges; their passes sit at indices e-1 and e.
inline bool side_uniform(const std::vector<Pass>& ps, int edge) {
  return ps[edge - 1].slot0_strand == ps[edge].slot0_strand;
}

/// Classify a 3-dart face as an R3 or rigid-slide site.
/// Returns MoveKind::r3, rigid_slide, or switch_crossing as a "not a site" marker.
inline MoveKind triangle_site_kind(const KnotoidDiagram& d, const std::vector<Pass>& ps,
                                   const TriangleInfo& t) {
  int singular = -1, singular_count = 0;
  for (int c : t.corners) {
    CrossingKind k = d.crossings[c].kind;
    if (k == CrossingKind::virtual_k) return MoveKind::switch_crossing;
    if (k == CrossingKind::singular) {
      singular = c;
      ++singular_count;
    }
  }
  if (singular_count > 1) return MoveKind::switch_crossing;
  if (singular_count == 0) {
    for (int i = 0; i < 3; ++i)
      if (side_uniform(ps, t.sides[i])) return MoveKind::r3;
    return MoveKind::switch_crossing;  // cyclic over/under pattern
  }
  // The slider is the side opposite the singular corner: the one side whose
  // end crossings are both classical.
  for (int i = 0; i < 3; ++i) {
    int e = t.sides[i];
    if (ps[e - 1].crossing != singular && ps[e].crossing != singular)
      return side_uniform(ps, e) ? MoveKind::rigid_slide : MoveKind::switch_crossing;
  }
  return MoveKind::switch_crossing;
}

}  // namespace detail

inline std::vector<MoveSite> enumerate_move_sites(const KnotoidDiagram& d) {
  detail::check_spherical(d, "enumerate_move_sites");
  require_valid(d);
  std::vector<MoveSite> sites;
  FaceSet fs = detail::faces_impl(d.crossings, d.edge_count(), false);
  auto ps = passes(d);

  // Removals and triangle moves, face by face.
  for (const Face& f : fs.faces) {
    if (f.boundary.size() == 1) {
      const Dart& dart = f.boundary[0];
      int c = ps[dart.edge - 1].crossing;  // monogon loops never involve edge 0
      if (d.crossings[c].kind == CrossingKind::classical)
        sites.push_back({MoveKind::r1_remove, dart, {}, {}, false, -1});
    } else if (f.boundary.size() == 2) {
      const Dart &d1 = f.boundary[0], &d2 = f.boundary[1];
      int m = d1.edge, w = d2.edge;
      if (m == w || m == 0 || w == 0) continue;
      int x1 = ps[m - 1].crossing, y1 = ps[m].crossing;
      int x2 = ps[w - 1].crossing, y2 = ps[w].crossing;
      if (x1 == y1 || !((x1 == x2 && y1 == y2) || (x1 == y2 && y1 == x2))) continue;
      if (d.crossings[x1].kind != CrossingKind::classical ||
          d.crossings[y1].kind != CrossingKind::classical)
        continue;
      if (ps[m - 1].slot0_strand != ps[m].slot0_strand) continue;  // clasp, not a bigon
      sites.push_back({MoveKind::r2_remove, d1, d2, {}, false, -1});
    } else if (f.boundary.size() == 3) {
      detail::TriangleInfo t = detail::triangle_info(d.crossings, d.edge_count(), f);
      if (!t.ok) continue;
      MoveKind k = detail::triangle_site_kind(d, ps, t);
      if (k == MoveKind::r3 || k == MoveKind::rigid_slide)
        sites.push_back({k, f.boundary[0], f.boundary[1], f.boundary[2], false, -1});
    }
  }

  // R1 additions: every edge side, both kink handednesses.
  for (int e = 0; e < d.edge_count(); ++e) {
    for (bool forward : {true, false}) {
      for (bool under_first : {true, false}) {
        sites.push_back({MoveKind::r1_add, Dart{e, forward}, {}, {}, under_first, -1});
      }
    }
  }

  // R2 additions: ordered pairs of distinct darts on a common face.
  for (const Face& f : fs.faces) {
    for (size_t i = 0; i < f.boundary.size(); ++i) {
      for (size_t j = 0; j < f.boundary.size(); ++j) {
        if (i == j) continue;
        for (bool a_over : {true, false}) {
          sites.push_back({MoveKind::r2_add, f.boundary[i], f.boundary[j], {}, a_over, -1});
        }
      }
    }
  }

  // Crossing switches (singular-equivalence only, skipped by isotopy walks).
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c) {
    if (d.crossings[c].kind == CrossingKind::classical)
      sites.push_back({MoveKind::switch_crossing, {}, {}, {}, false, c});
  }

  return sites;
}

// ---------------------------------------------------------------------------
// Move application

namespace detail {

inline void check_edge(const KnotoidDiagram& d, Dart dart, const char* what) {
  if (dart.edge < 0 || dart.edge >= d.edge_count())
    throw stale_move(std::string(what) + ": dart edge out of range");
}

inline KnotoidDiagram apply_r1_add(const KnotoidDiagram& d, const MoveSite& s) {
  check_edge(d, s.a, "r1_add");
  PassForm pf = decompose(d);
  int n = static_cast<int>(pf.specs.size());
  pf.specs.push_back({CrossingKind::classical, s.flag, s.a.forward ? 1 : 3});
  pf.pass_crossing.insert(pf.pass_crossing.begin() + s.a.edge, 2, n);
  return rebuild(pf);
}

inline KnotoidDiagram apply_r1_remove(const KnotoidDiagram& d, const MoveSite& s) {
  check_edge(d, s.a, "r1_remove");
  FaceSet fs = faces_impl(d.crossings, d.edge_count(), false);
  int fid = fs.face_of(s.a);
  if (fs.faces[fid].boundary.size() != 1) throw stale_move("r1_remove: not a monogon");
  int e = s.a.edge;
  if (e < 1) throw stale_move("r1_remove: loop edge out of range");
  PassForm pf = decompose(d);
  int c = pf.pass_crossing[e - 1];
  if (pf.pass_crossing[e] != c || d.crossings[c].kind != CrossingKind::classical)
    throw stale_move("r1_remove: not a classical kink");
  pf.pass_crossing.erase(pf.pass_crossing.begin() + (e - 1), pf.pass_crossing.begin() + (e + 1));
  pf.specs.erase(pf.specs.begin() + c);
  for (int& pc : pf.pass_crossing)
    if (pc > c) --pc;
  return rebuild(pf);
}

inline KnotoidDiagram apply_r2_add(const KnotoidDiagram& d, const MoveSite& s) {
  check_edge(d, s.a, "r2_add");
  check_edge(d, s.b, "r2_add");
  if (s.a == s.b) throw stale_move("r2_add: darts must differ");
  {
    FaceSet fs = faces_impl(d.crossings, d.edge_count(), false);
    if (fs.face_of(s.a) != fs.face_of(s.b)) throw stale_move("r2_add: darts not on one face");
  }
  PassForm pf = decompose(d);
  int n = static_cast<int>(pf.specs.size());
  int x = n, y = n + 1;  // x: first crossing along the bulge in dart-a direction

  // Rotation of the crossed strand relative to the bulging strand, derived for
  // forward darts and flipped once per reversed dart.
  int flips = (s.a.forward ? 0 : 1) + (s.b.forward ? 0 : 1);
  int rot_x_rel_a = (flips % 2 == 0) ? 3 : 1;
  int rot_y_rel_a = (flips % 2 == 0) ? 1 : 3;

  // Pass order: [x, y] along the bulge in dart-a direction, [y, x] along the
  // crossed strand in dart-b direction; convert to traversal order.
  std::array<int, 2> a_pair = s.a.forward ? std::array<int, 2>{x, y} : std::array<int, 2>{y, x};
  std::array<int, 2> b_pair = s.b.forward ? std::array<int, 2>{y, x} : std::array<int, 2>{x, y};

  std::vector<int> rebuilt;
  rebuilt.reserve(pf.pass_crossing.size() + 4);
  int a_pos[2] = {-1, -1}, b_pos[2] = {-1, -1};  // positions of {x, y} per strand
  for (int e = 0; e <= static_cast<int>(pf.pass_crossing.size()); ++e) {
    if (e == s.a.edge) {
      a_pos[a_pair[0] == x ? 0 : 1] = static_cast<int>(rebuilt.size());
      rebuilt.push_back(a_pair[0]);
      a_pos[a_pair[1] == x ? 0 : 1] = static_cast<int>(rebuilt.size());
      rebuilt.push_back(a_pair[1]);
    }
    if (e == s.b.edge) {
      b_pos[b_pair[0] == x ? 0 : 1] = static_cast<int>(rebuilt.size());
      rebuilt.push_back(b_pair[0]);
      b_pos[b_pair[1] == x ? 0 : 1] = static_cast<int>(rebuilt.size());
      rebuilt.push_back(b_pair[1]);
    }
    if (e < static_cast<int>(pf.pass_crossing.size())) rebuilt.push_back(pf.pass_crossing[e]);
  }

  for (int idx = 0; idx < 2; ++idx) {  // idx 0 -> crossing x, 1 -> crossing y
    int rot_rel_a = idx == 0 ? rot_x_rel_a : rot_y_rel_a;
    bool first_is_a = a_pos[idx] < b_pos[idx];
    bool under_is_a = !s.flag;
    CrossingSpec spec;
    spec.kind = CrossingKind::classical;
    spec.rot_first = first_is_a ? rot_rel_a : (rot_rel_a == 1 ? 3 : 1);
    spec.under_first = (first_is_a == under_is_a);
    pf.specs.push_back(spec);
  }
  pf.pass_crossing = std::move(rebuilt);
  return rebuild(pf);
}

inline KnotoidDiagram apply_r2_remove(const KnotoidDiagram& d, const MoveSite& s) {
  check_edge(d, s.a, "r2_remove");
  check_edge(d, s.b, "r2_remove");
  FaceSet fs = faces_impl(d.crossings, d.edge_count(), false);
  int fid = fs.face_of(s.a);
  if (fid != fs.face_of(s.b) || fs.faces[fid].boundary.size() != 2)
    throw stale_move("r2_remove: not a bigon");
  auto ps = passes(d);
  int m = s.a.edge, w = s.b.edge;
  if (m == w || m == 0 || w == 0) throw stale_move("r2_remove: degenerate bigon");
  int x = ps[m - 1].crossing, y = ps[m].crossing;
  if (x == y) throw stale_move("r2_remove: single-crossing bigon");
  if (!((ps[w - 1].crossing == x && ps[w].crossing == y) ||
        (ps[w - 1].crossing == y && ps[w].crossing == x)))
    throw stale_move("r2_remove: sides do not join the same crossings");
  if (d.crossings[x].kind != CrossingKind::classical ||
      d.crossings[y].kind != CrossingKind::classical)
    throw stale_move("r2_remove: crossings must be classical");
  if (ps[m - 1].slot0_strand != ps[m].slot0_strand)
    throw stale_move("r2_remove: clasp bigon is not removable");

  PassForm pf = decompose(d);
  std::vector<int> keep;
  keep.reserve(pf.pass_crossing.size() - 4);
  for (int pc : pf.pass_crossing)
    if (pc != x && pc != y) keep.push_back(pc);
  int lo = std::min(x, y), hi = std::max(x, y);
  for (int& pc : keep) {
    if (pc > hi) pc -= 2;
    else if (pc > lo) pc -= 1;
  }
  std::vector<CrossingSpec> specs;
  specs.reserve(pf.specs.size() - 2);
  for (int c = 0; c < static_cast<int>(pf.specs.size()); ++c)
    if (c != x && c != y) specs.push_back(pf.specs[c]);
  pf.pass_crossing = std::move(keep);
  pf.specs = std::move(specs);
  return rebuild(pf);
}

inline KnotoidDiagram apply_r3(const KnotoidDiagram& d, const MoveSite& s) {
  check_edge(d, s.a, "r3");
  check_edge(d, s.b, "r3");
  check_edge(d, s.c, "r3");
  FaceSet fs = faces_impl(d.crossings, d.edge_count(), false);
  int fid = fs.face_of(s.a);
  if (fid != fs.face_of(s.b) || fid != fs.face_of(s.c) || fs.faces[fid].boundary.size() != 3)
    throw stale_move("r3: not a triangle face");
  detail::TriangleInfo t = triangle_info(d.crossings, d.edge_count(), fs.faces[fid]);
  auto ps = passes(d);
  if (!t.ok) throw stale_move("r3: degenerate triangle");
  MoveKind k = triangle_site_kind(d, ps, t);
  if (k != MoveKind::r3 && k != MoveKind::rigid_slide)
    throw stale_move("r3: over/under pattern admits no slide");

  PassForm pf = decompose(d);
  for (int e : t.sides) std::swap(pf.pass_crossing[e - 1], pf.pass_crossing[e]);
  return rebuild(pf);
}

}  // namespace detail

inline KnotoidDiagram apply_move(const KnotoidDiagram& d, const MoveSite& s) {
  detail::check_spherical(d, "apply_move");
  require_valid(d);
  switch (s.kind) {
    case MoveKind::r1_add: return detail::apply_r1_add(d, s);
    case MoveKind::r1_remove: return detail::apply_r1_remove(d, s);
    case MoveKind::r2_add: return detail::apply_r2_add(d, s);
    case MoveKind::r2_remove: return detail::apply_r2_remove(d, s);
    case MoveKind::r3:
    case MoveKind::rigid_slide: return detail::apply_r3(d, s);
    case MoveKind::switch_crossing: return switch_crossing(d, s.crossing);
  }
  throw std::logic_error("apply_move: unknown move kind");
}

// ---------------------------------------------------------------------------
// Descending walk

inline bool is_descending(const KnotoidDiagram& d) {
  PassForm pf = decompose(d);
  for (const CrossingSpec& s : pf.specs)
    if (s.kind == CrossingKind::classical && s.under_first) return false;
  return true;
}

struct SwitchEntry {
  int crossing = -1;
  int sign_before = 0;       // sign in the walk state at switch time
  KnotoidDiagram nodified;   // that state with the crossing nodified
};

struct SwitchRecord {
  std::vector<SwitchEntry> entries;
};

/// Walk from the leg switching every classical crossing first met as an
/// under-crossing; records each switch with the nodified snapshot of the
/// walk state.
inline std::pair<KnotoidDiagram, SwitchRecord> make_descending(const KnotoidDiagram& d) {
  require_valid(d);
  for (const Crossing& c : d.crossings)
    if (c.kind == CrossingKind::singular)
      throw wrong_kind("make_descending: singular crossings not allowed");

  PassForm pf = decompose(d);
  SwitchRecord rec;
  std::vector<bool> visited(pf.specs.size(), false);
  for (int k = 0; k < static_cast<int>(pf.pass_crossing.size()); ++k) {
    int c = pf.pass_crossing[k];
    if (visited[c]) continue;
    visited[c] = true;
    CrossingSpec& spec = pf.specs[c];
    if (spec.kind != CrossingKind::classical || !spec.under_first) continue;
    SwitchEntry entry;
    entry.crossing = c;
    entry.sign_before = spec_sign(spec);
    std::vector<CrossingSpec> snap = pf.specs;
    snap[c].kind = CrossingKind::singular;
    snap[c].under_first = true;
    entry.nodified = build_from_passes(d.surface, pf.pass_crossing, snap, d.outer_face);
    rec.entries.push_back(std::move(entry));
    spec.under_first = false;
  }
  KnotoidDiagram out = build_from_passes(d.surface, pf.pass_crossing, pf.specs, d.outer_face);
  return {std::move(out), std::move(rec)};
}

// ---------------------------------------------------------------------------
// Random walks

struct WalkOptions {
  int max_crossings = 12;        // additions disabled at or above this size
  bool include_switches = false; // singular-equivalence walks also switch crossings
};

inline KnotoidDiagram random_walk(const KnotoidDiagram& d, int steps, std::uint64_t seed,
                                  const WalkOptions& opts = {}) {
  if (steps < 0) throw std::invalid_argument("random_walk: steps must be >= 0");
  detail::check_spherical(d, "random_walk");
  std::mt19937_64 rng(seed);
  KnotoidDiagram cur = d;
  for (int i = 0; i < steps; ++i) {
    std::vector<MoveSite> sites = enumerate_move_sites(cur);
    std::vector<MoveSite> usable;
    usable.reserve(sites.size());
    bool allow_add = static_cast<int>(cur.crossings.size()) < opts.max_crossings;
    for (const MoveSite& s : sites) {
      if (s.kind == MoveKind::switch_crossing && !opts.include_switches) continue;
      if ((s.kind == MoveKind::r1_add || s.kind == MoveKind::r2_add) && !allow_add) continue;
      usable.push_back(s);
    }
    if (usable.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, usable.size() - 1);
    cur = apply_move(cur, usable[pick(rng)]);
  }
  return cur;
}

/// Seeded generator of valid spherical diagrams: grows a diagram by random
/// additions/triangle moves, then randomizes crossings by switches so the
/// result is not tied to the trivial knotoid class.
inline KnotoidDiagram random_diagram(int crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  KnotoidDiagram cur = trivial_diagram();
  int guard = 0;
  while (static_cast<int>(cur.crossings.size()) < crossings && guard++ < 100 * (crossings + 1)) {
    std::vector<MoveSite> sites = enumerate_move_sites(cur);
    std::vector<MoveSite> grow;
    for (const MoveSite& s : sites)
      if (s.kind == MoveKind::r1_add || s.kind == MoveKind::r2_add || s.kind == MoveKind::r3)
        grow.push_back(s);
    if (grow.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, grow.size() - 1);
    cur = apply_move(cur, grow[pick(rng)]);
  }
  for (int c = 0; c < static_cast<int>(cur.crossings.size()); ++c) {
    if (cur.crossings[c].kind == CrossingKind::classical && (rng() & 1))
      cur = switch_crossing(cur, c);
  }
  return cur;
}

/// Nodify `k` distinct randomly chosen classical crossings.
inline KnotoidDiagram with_random_singulars(KnotoidDiagram d, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> classical;
  for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
    if (d.crossings[c].kind == CrossingKind::classical) classical.push_back(c);
  if (static_cast<int>(classical.size()) < k)
    throw std::invalid_argument("with_random_singulars: not enough classical crossings");
  std::shuffle(classical.begin(), classical.end(), rng);
  for (int i = 0; i < k; ++i) d = nodify(d, classical[i]);
  return d;
}

}  // namespace knotoid
