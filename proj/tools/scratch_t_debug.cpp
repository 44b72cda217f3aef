// Development scratch: 4-crossing searches + move-engine invariance smoke.
#include "knotoid/knotoid.hpp"
#include "../tests/helpers.hpp"

#include <iostream>
#include <map>
#include <set>

using namespace knotoid;
using testing::poly1;

int main(int argc, char** argv) {
  bool fuzz_only = argc > 1 && std::string(argv[1]) == "fuzz";
  if (!fuzz_only) {
    auto four = testing::enumerate_classical_diagrams(4);
    std::cout << "4-crossing valid diagrams: " << four.size() << "\n";

    // Example weight-table search: signs/weights multiset
    // {(-1,2),(-1,1),(-1,-2),(+1,-1)}, P = -(t^2+t^-2-2).
    Laurent1 target_p1 = poly1(Var::t, {{2, -1}, {-2, -1}, {0, 2}});
    std::multiset<std::pair<int,int>> target_tbl{{-1,2},{-1,1},{-1,-2},{1,-1}};
    std::string best1;
    int count1 = 0;
    for (const auto& d : four) {
      if (affine_index_polynomial(d) != target_p1) continue;
      AffineLabels al = affine_labels(d);
      std::multiset<std::pair<int,int>> tbl;
      for (int c = 0; c < 4; ++c) tbl.insert({crossing_sign(d, c), al.weights.at(c).w_plus});
      if (tbl != target_tbl) continue;
      ++count1;
      std::string ktd = emit_ktd(d);
      if (best1.empty() || ktd < best1) best1 = ktd;
    }
    std::cout << "weight-table matches: " << count1 << "\nbest:\n" << best1;
    {
      KnotoidDiagram d = parse_ktd(best1);
      std::cout << "  height=" << height_of_diagram(d)
                << " faces=" << faces(d).faces.size() << "\n";
    }

    // Height-2 clasp search: P = t^2+t+t^-1+t^-2-4, height 2.
    Laurent1 target_p2 = poly1(Var::t, {{2,1},{1,1},{-1,1},{-2,1},{0,-4}});
    std::string best2;
    int count2 = 0;
    for (const auto& d : four) {
      if (affine_index_polynomial(d) != target_p2) continue;
      if (height_of_diagram(d) != 2) continue;
      ++count2;
      std::string ktd = emit_ktd(d);
      if (best2.empty() || ktd < best2) best2 = ktd;
    }
    std::cout << "height-2 P matches: " << count2 << "\nbest:\n" << best2;
  }

  // Move-engine smoke: invariance of f, T, P, vbar under random walks.
  int fails = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    KnotoidDiagram d0 = random_diagram(6, seed);
    Laurent1 f0 = normalized_bracket(d0);
    Laurent2 t0 = turaev_extended_bracket(d0);
    Laurent1 p0 = affine_index_polynomial(d0);
    Laurent1 v0 = vbar(d0);
    KnotoidDiagram d1 = random_walk(d0, 200, seed * 77, {10, false});
    bool ok = normalized_bracket(d1) == f0 && turaev_extended_bracket(d1) == t0 &&
              affine_index_polynomial(d1) == p0 && vbar(d1) == v0;
    // identities
    bool id1 = p0 == v0 + v0.substitute_inverse();
    bool id2 = t0.specialize_u1() == f0;
    std::cout << "seed " << seed << ": crossings " << d0.crossings.size() << " -> "
              << d1.crossings.size() << "  invariance=" << ok << " P=v+v(1/t): " << id1
              << " T(A,1)=f: " << id2 << "\n";
    if (!ok || !id1 || !id2) ++fails;
  }
  std::cout << (fails ? "SMOKE FAILURES\n" : "smoke all good\n");
  return fails;
}
