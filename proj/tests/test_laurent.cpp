#include "knotoid/laurent.hpp"
#include <catch2/catch_amalgamated.hpp>

using namespace knotoid;

TEST_CASE("laurent smoke") {
  Laurent1 p = Laurent1::monomial(Var::A, 1);
  REQUIRE(exp_coeff(p, 3) == Rational(1, 6));
}
