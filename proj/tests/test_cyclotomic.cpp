#include "doctest.h"
#include "psilab/cyclotomic.hpp"

using namespace psilab;

TEST_CASE("rational arithmetic and conductor 1") {
  Cyclotomic a(3), b(mpq_class(1, 2));
  CHECK((a + b).rational_value() == mpq_class(7, 2));
  CHECK((a * b).rational_value() == mpq_class(3, 2));
  CHECK(a.is_integer());
  CHECK_FALSE(b.is_integer());
  CHECK(Cyclotomic(0).is_zero());
  CHECK(a.conjugate() == a);
  CHECK(a.inverse().rational_value() == mpq_class(1, 3));
}

TEST_CASE("roots of unity") {
  Cyclotomic z3 = Cyclotomic::zeta(3);
  CHECK(z3.conductor() == 3);
  CHECK((z3 * z3 * z3).rational_value() == 1);
  // 1 + z + z^2 = 0
  CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());

  Cyclotomic z4 = Cyclotomic::zeta(4);
  CHECK((z4 * z4).rational_value() == -1);
  CHECK(z4.conjugate() == Cyclotomic::zeta(4, 3));
  CHECK(z4.conjugate().conjugate() == z4);

  // conductor 2 mod 4 is never canonical: zeta_6 = 1 + zeta_3
  Cyclotomic z6 = Cyclotomic::zeta(6);
  CHECK(z6.conductor() == 3);
  CHECK(z6 == Cyclotomic(1) + z3);
  CHECK((z6 * z6 * z6).rational_value() == -1);

  // zeta_5 + zeta_5^4 generates the real quadratic subfield of Q(zeta_5)
  Cyclotomic g = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
  CHECK(g.conductor() == 5);
  // it satisfies x^2 + x - 1 = 0
  CHECK((g * g + g - Cyclotomic(1)).is_zero());
}

TEST_CASE("conductor descent on sums") {
  // zeta_12^3 = i descends to conductor 4
  Cyclotomic v = Cyclotomic::zeta(12, 3);
  CHECK(v.conductor() == 4);
  CHECK(v == Cyclotomic::zeta(4));
  // zeta_12^4 = zeta_3
  CHECK(Cyclotomic::zeta(12, 4) == Cyclotomic::zeta(3));
  // sum of the primitive 12th roots is mu(12) = 0
  Cyclotomic s = Cyclotomic::zeta(12, 1) + Cyclotomic::zeta(12, 5) + Cyclotomic::zeta(12, 7) +
                 Cyclotomic::zeta(12, 11);
  CHECK(s.is_zero());
  // mixed-conductor sums
  Cyclotomic m = Cyclotomic::zeta(3) + Cyclotomic::zeta(4);
  CHECK(m.conductor() == 12);
  CHECK(m - Cyclotomic::zeta(4) == Cyclotomic::zeta(3));
}

TEST_CASE("galois and inverse") {
  Cyclotomic z7 = Cyclotomic::zeta(7);
  Cyclotomic v = z7 + z7 * z7;  // zeta + zeta^2
  CHECK(v.galois(2) == Cyclotomic::zeta(7, 2) + Cyclotomic::zeta(7, 4));
  CHECK((v * v.inverse()).rational_value() == 1);
  CHECK(v.inverse().conductor() == 7);

  // product over all conjugates is rational
  Cyclotomic prod(1);
  for (i64 r : {1, 2, 3, 4, 5, 6}) prod *= v.galois(r);
  CHECK(prod.is_rational());
}

TEST_CASE("serialization round trip") {
  Cyclotomic v = Cyclotomic::zeta(5) + Cyclotomic(2);
  std::string s = v.to_string();
  CHECK(Cyclotomic::parse(s) == v);
  CHECK(Cyclotomic::parse("1@1") == Cyclotomic(1));
  CHECK(Cyclotomic::parse("-1:2@1").rational_value() == mpq_class(-1, 2));
  CHECK(Cyclotomic(7).to_string() == "7@1");
  CHECK_THROWS_AS(Cyclotomic::parse("1/2"), Error);
}

TEST_CASE("accumulator matches naive sums") {
  CycAccumulator acc;
  Cyclotomic direct(0);
  for (int k = 0; k < 30; ++k) {
    Cyclotomic t = Cyclotomic::zeta(1 + (k % 5), k) * Cyclotomic(k % 7 - 3);
    acc.add(t);
    direct += t;
  }
  CHECK(acc.result() == direct);

  CycAccumulator acc2;
  acc2.add_product(Cyclotomic::zeta(8), Cyclotomic::zeta(8, 7), mpq_class(1, 3));
  CHECK(acc2.result().rational_value() == mpq_class(1, 3));
}
