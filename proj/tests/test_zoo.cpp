#include "doctest.h"
#include "psilab/zoo.hpp"

using namespace psilab;

TEST_CASE("galois field tables") {
  // GF(4): x*x = x+1 under x^2+x+1 (element 2 is x, 3 is x+1)
  const GaloisField& f4 = GaloisField::get(4);
  CHECK(f4.mul(2, 2) == 3);
  // GF(5): 2^-1 = 3
  const GaloisField& f5 = GaloisField::get(5);
  CHECK(f5.inv(2) == 3);
  // GF(9): multiplicative group cyclic of order 8
  const GaloisField& f9 = GaloisField::get(9);
  CHECK(f9.element_order(f9.generator()) == 8);
  bool has8 = false;
  for (int x = 1; x < 9; ++x)
    if (f9.element_order(x) == 8) has8 = true;
  CHECK(has8);

  // field axioms, exhaustively, for a sample of q
  for (u64 q : {4ull, 8ull, 9ull, 16ull, 25ull, 27ull, 49ull, 81ull}) {
    const GaloisField& f = GaloisField::get(q);
    int n = static_cast<int>(q);
    for (int x = 0; x < n; ++x) {
      CHECK(f.add(x, f.neg(x)) == 0);
      CHECK(f.mul(x, 1) == x);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (int y = 0; y < n; ++y) {
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (int z = 0; z < std::min(n, 9); ++z) {
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        }
      }
    }
    // Frobenius is an automorphism: (x+y)^p = x^p + y^p
    int p = static_cast<int>(f.p());
    auto pw = [&](int x) {
      int r = 1;
      for (int i = 0; i < p; ++i) r = f.mul(r, x);
      return r;
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) CHECK(pw(f.add(x, y)) == f.add(pw(x), pw(y)));
  }
  CHECK_THROWS_AS(GaloisField::get(6), Error);
}

TEST_CASE("zoo constructors") {
  CHECK(construct("sym:5")->order() == 120);
  CHECK(construct("sym:1")->order() == 1);
  CHECK(construct("alt:4")->order() == 12);
  CHECK(construct("alt:6")->order() == 360);
  CHECK(construct("cyclic:12")->order() == 12);
  CHECK(construct("dihedral:8")->order() == 8);
  CHECK(construct("dihedral:24")->order() == 24);

  GroupRef psl25 = construct("psl:2,5");
  CHECK(psl25->order() == 60);
  CHECK(psl25->degree() == 6);

  GroupRef sl23 = construct("sl:2,3");
  CHECK(sl23->order() == 24);
  CHECK(sl23->degree() == 8);

  CHECK(construct("psl:2,4")->order() == 60);
  CHECK(construct("psl:2,7")->order() == 168);
  CHECK(construct("psl:2,9")->order() == 360);
  CHECK(construct("sl:2,5")->order() == 120);
  CHECK(construct("gl:2,3")->order() == 48);
  CHECK(construct("gl:1,5")->order() == 4);
  CHECK(construct("gl:3,2")->order() == 168);

  CHECK_THROWS_AS(construct("psl:2,6"), Error);
  CHECK_THROWS_AS(construct("gl:4,2"), Error);
  CHECK_THROWS_AS(construct("nosuch:3"), Error);
}

TEST_CASE("direct products") {
  GroupRef g = construct("cyclic:2*cyclic:3");
  CHECK(g->order() == 6);
  CHECK(g->classes().count() == 6);  // abelian
  CHECK(construct("sym:3*cyclic:2")->order() == 12);
  GroupRef t = construct("cyclic:1*sym:3");
  CHECK(t->order() == 6);
  CHECK(t->spec_text() == "cyclic:1*sym:3");
}

TEST_CASE("psl simplicity via class closures") {
  for (const char* spec : {"psl:2,5", "psl:2,7"}) {
    GroupRef g = construct(spec);
    const auto& cls = g->classes();
    for (int j = 1; j < cls.count(); ++j) {
      GroupRef n = g->normal_closure({cls.representatives[j]});
      CHECK(n->order() == g->order());
    }
  }
}

TEST_CASE("sl center and psl order relation") {
  for (u64 q : {5ull, 7ull, 9ull}) {
    GroupRef sl = construct("sl:2," + std::to_string(q));
    GroupRef z = sl->center();
    CHECK(z->order() == gcd_u64(2, q - 1));
    CHECK(sl->order() / z->order() ==
          construct("psl:2," + std::to_string(q))->order());
  }
  GroupRef sl4 = construct("sl:2,4");
  CHECK(sl4->center()->order() == 1);
}
