#pragma once

// Shared test utilities: exhaustive enumeration of small diagrams and a few
// polynomial literals.

#include "knotoid/knotoid.hpp"

#include <functional>
#include <vector>

namespace knotoid::testing {

/// All valid spherical diagrams with exactly n classical crossings, built by
/// enumerating pass pairings and crossing specs and keeping the planar ones.
inline std::vector<KnotoidDiagram> enumerate_classical_diagrams(int n) {
  std::vector<KnotoidDiagram> out;
  int passes = 2 * n;
  std::vector<int> partner(passes, -1);

  std::function<void(int)> match = [&](int next_id) {
    int a = -1;
    for (int i = 0; i < passes; ++i)
      if (partner[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      // pass assignment fixed; sweep all crossing specs
      std::vector<int> pass_crossing(passes);
      std::vector<int> id_of_pass(passes, -1);
      int id = 0;
      for (int i = 0; i < passes; ++i) {
        if (id_of_pass[i] < 0) {
          id_of_pass[i] = id_of_pass[partner[i]] = id++;
        }
        pass_crossing[i] = id_of_pass[i];
      }
      for (int specbits = 0; specbits < (1 << (2 * n)); ++specbits) {
        std::vector<CrossingSpec> specs(n);
        for (int c = 0; c < n; ++c) {
          specs[c].kind = CrossingKind::classical;
          specs[c].under_first = (specbits >> (2 * c)) & 1;
          specs[c].rot_first = ((specbits >> (2 * c + 1)) & 1) ? 1 : 3;
        }
        KnotoidDiagram d = build_from_passes(Surface::sphere, pass_crossing, specs);
        if (validate(d).ok()) out.push_back(std::move(d));
      }
      return;
    }
    for (int b = a + 1; b < passes; ++b) {
      if (partner[b] >= 0) continue;
      partner[a] = b;
      partner[b] = a;
      match(next_id + 1);
      partner[a] = partner[b] = -1;
    }
  };
  if (n == 0) {
    out.push_back(trivial_diagram());
  } else {
    match(0);
  }
  return out;
}

inline Laurent1 poly1(Var v, std::initializer_list<std::pair<int, int>> terms) {
  Laurent1 p(v);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

inline Laurent2 poly2(std::initializer_list<std::tuple<int, int, int>> terms) {
  Laurent2 p;
  for (const auto& [ea, eu, c] : terms) p.add_term(ea, eu, c);
  return p;
}

}  // namespace knotoid::testing
