#include "doctest.h"
#include "psilab/perm.hpp"

using namespace psilab;

TEST_CASE("permutation basics") {
  Perm id(4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);
  CHECK(id.to_cycles() == "()");

  Perm t = Perm::from_cycles("(1,2)", 4);
  Perm c = Perm::from_cycles("(1,2,3,4)", 4);
  CHECK(t.order() == 2);
  CHECK(c.order() == 4);
  CHECK((t * t).is_identity());
  CHECK(c.power(4).is_identity());
  CHECK(c.power(-1) == c.inverse());
  CHECK((c * c.inverse()).is_identity());

  // products are evaluated left-to-right
  Perm a = Perm::from_cycles("(1,2)", 3);
  Perm b = Perm::from_cycles("(2,3)", 3);
  Perm ab = a * b;
  CHECK(ab[0] == 2);  // 1 -> 2 -> 3

  // associativity spot check
  Perm d = Perm::from_cycles("(1,3)", 3);
  CHECK(((a * b) * d).images() == (a * (b * d)).images());
  CHECK(Perm::from_cycles("(1,2)(3,4)", 5).to_cycles() == "(1,2)(3,4)");
}

TEST_CASE("cycle text round trip and validation") {
  Perm g = Perm::from_cycles("(1,3,5)(2,4)", 6);
  CHECK(Perm::from_cycles(g.to_cycles(), 6) == g);
  CHECK(g.order() == 6);
  CHECK_THROWS_AS(Perm::from_cycles("(1,7)", 5), Error);
  CHECK_THROWS_AS(Perm::from_cycles("(1,2)(2,3)", 5), Error);
}

TEST_CASE("conjugation") {
  Perm a = Perm::from_cycles("(1,2,3)", 5);
  Perm g = Perm::from_cycles("(3,4)", 5);
  CHECK(a.conjugate_by(g) == g.inverse() * a * g);
}
