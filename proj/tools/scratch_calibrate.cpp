// Development scratch: verifies the derived constructions and searches the
// small-diagram space for the reference diagrams used by the test corpus.
#include "knotoid/knotoid.hpp"
#include "../tests/helpers.hpp"

#include <iostream>

using namespace knotoid;

int main() {
  // 1. Regular diagrams: validity, counts, chord, height, descending.
  for (int w = -4; w <= 6; ++w) {
    KnotoidDiagram r = regular_diagram(w);
    auto rep = validate(r);
    std::cout << "R_" << w << ": valid=" << rep.ok();
    if (!rep.ok()) {
      std::cout << "  [" << rep.summary() << "]\n";
      continue;
    }
    int classical = 0;
    for (auto& c : r.crossings)
      if (c.kind == CrossingKind::classical) ++classical;
    std::cout << " classical=" << classical << " chord=" << chord_of_singular(r).winding
              << " height=" << height_of_diagram(r) << " descending=" << is_descending(r)
              << "\n";
  }

  // 2. Surgery: validity + round trip.
  for (int w = -4; w <= 4; ++w) {
    KnotoidDiagram s = surgery({w});
    auto rep = validate(s);
    std::cout << "surgery(" << w << "): valid=" << rep.ok();
    if (!rep.ok()) {
      std::cout << "  [" << rep.summary() << "]\n";
      continue;
    }
    std::cout << " chord=" << chord_of_singular(s).winding << "\n";
  }

  // 3. Search all 2-crossing diagrams for the reference bracket values.
  auto two = testing::enumerate_classical_diagrams(2);
  std::cout << "2-crossing valid diagrams: " << two.size() << "\n";
  Laurent1 target_bracket = testing::poly1(Var::A, {{4, -1}, {0, 1}, {-2, 1}});
  Laurent1 target_f = testing::poly1(Var::A, {{10, -1}, {6, 1}, {4, 1}});
  Laurent2 target_T = testing::poly2({{4, 0, 1}, {6, 2, 1}, {10, 2, -1}});
  int hits = 0;
  for (const auto& d : two) {
    if (kauffman_bracket(d) == target_bracket && writhe(d) == -2) {
      ++hits;
      std::cout << "  bracket+writhe match:\n" << emit_ktd(d);
      std::cout << "  f == target: " << (normalized_bracket(d) == target_f)
                << "  T: " << turaev_extended_bracket(d).str()
                << "  T == target: " << (turaev_extended_bracket(d) == target_T) << "\n";
    }
  }
  std::cout << "matches: " << hits << "\n";

  // 4. Positive kink bracket (calibrates the smoothing convention).
  {
    KnotoidDiagram kink = build_from_passes(Surface::sphere, {0, 0},
                                            {{CrossingKind::classical, true, 3}});
    std::cout << "positive kink valid=" << validate(kink).ok()
              << " sign=" << crossing_sign(kink, 0)
              << " bracket=" << kauffman_bracket(kink).str() << "\n";
  }
  return 0;
}
