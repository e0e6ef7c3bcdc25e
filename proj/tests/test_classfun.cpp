#include "doctest.h"
#include "psilab/classfun.hpp"
#include "psilab/zoo.hpp"

using namespace psilab;

namespace {

// independent oracle: induction evaluated by summing over the whole big group
Cyclotomic naive_induced_value(const ClassFunction& alpha, const Group& big, const Perm& g) {
  CycAccumulator acc;
  for (const Perm& x : big.elements()) {
    Perm c = g.conjugate_by(x);
    if (alpha.group->contains(c))
      acc.add(alpha.values[alpha.group->class_of(c)]);
  }
  return acc.result() * Cyclotomic(mpq_class(1, static_cast<unsigned long>(alpha.group->order())));
}

// independent oracle: inner product as an elementwise sum over the group
Cyclotomic naive_inner(const ClassFunction& a, const ClassFunction& b) {
  CycAccumulator acc;
  for (const Perm& x : a.group->elements())
    acc.add_product(a.values[a.group->class_of(x)], b.values[b.group->class_of(x)].conjugate(),
                    mpq_class(1));
  return acc.result() * Cyclotomic(mpq_class(1, static_cast<unsigned long>(a.group->order())));
}

}  // namespace

TEST_CASE("induction from C2 to S3") {
  GroupRef s3 = construct("sym:3");
  GroupRef c2 = s3->subgroup({Perm::from_cycles("(1,2)", 3)});
  ClassFunction one = ClassFunction::trivial(c2);
  ClassFunction ind = induce(one, s3);
  // classes (1, transposition, 3-cycle)
  CHECK(ind.values[0].rational_value() == 3);
  CHECK(ind.values[1].rational_value() == 1);
  CHECK(ind.values[2].rational_value() == 0);
  for (int j = 0; j < 3; ++j)
    CHECK(ind.values[j] == naive_induced_value(one, *s3, s3->classes().representatives[j]));

  // Frobenius reciprocity: <Ind 1, 1> = <1, Res 1> = 1
  CHECK(inner_product(ind, ClassFunction::trivial(s3)).rational_value() == 1);
}

TEST_CASE("regular character induces from trivial subgroup") {
  GroupRef s3 = construct("sym:3");
  GroupRef triv = s3->subgroup({});
  ClassFunction ind = induce(ClassFunction::trivial(triv), s3);
  CHECK(ind == ClassFunction::regular(s3));
}

TEST_CASE("restricted inner product") {
  GroupRef s3 = construct("sym:3");
  ClassFunction one = ClassFunction::trivial(s3);
  // restricted to the 2-regular classes of S_3 (identity and 3-cycles):
  // (1 + 2)/6 = 1/2
  std::set<int> reg{0, 2};
  CHECK(inner_product(one, one, reg).rational_value() == mpq_class(1, 2));
  CHECK(inner_product(one, one).rational_value() == 1);
}

TEST_CASE("adams operations") {
  GroupRef s3 = construct("sym:3");
  // degree-2 character of S_3 written down directly: (2, 0, -1)
  ClassFunction chi(s3, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)});
  ClassFunction sq = adams(chi, 2);
  CHECK(sq.values[0].rational_value() == 2);
  CHECK(sq.values[1].rational_value() == 2);   // transposition squares to 1
  CHECK(sq.values[2].rational_value() == -1);  // 3-cycles square to 3-cycles
  CHECK(adams(chi, 1 + static_cast<i64>(s3->exponent())) == chi);
  // n = -1 is complex conjugation
  GroupRef c3 = construct("cyclic:3");
  ClassFunction lin(c3, {Cyclotomic(1), Cyclotomic::zeta(3), Cyclotomic::zeta(3, 2)});
  CHECK(adams(lin, -1) == lin.conjugate());
}

TEST_CASE("frobenius schur") {
  GroupRef s3 = construct("sym:3");
  ClassFunction chi(s3, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)});
  CHECK(frobenius_schur(chi) == 1);
  CHECK(frobenius_schur(ClassFunction::trivial(s3)) == 1);
  GroupRef c3 = construct("cyclic:3");
  ClassFunction lin(c3, {Cyclotomic(1), Cyclotomic::zeta(3), Cyclotomic::zeta(3, 2)});
  CHECK(frobenius_schur(lin) == 0);
}

TEST_CASE("induction oracle on A4 from V4") {
  GroupRef a4 = construct("alt:4");
  GroupRef v4 = a4->subgroup({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
  // a nontrivial linear character of V4
  const auto& vcls = v4->classes();
  REQUIRE(vcls.count() == 4);
  std::vector<Cyclotomic> vals(4, Cyclotomic(1));
  for (int j = 1; j < 4; ++j)
    if (vcls.representatives[j] != Perm::from_cycles("(1,2)(3,4)", 4)) vals[j] = Cyclotomic(-1);
  ClassFunction lambda(v4, vals);
  ClassFunction ind = induce(lambda, a4);
  for (int j = 0; j < a4->classes().count(); ++j)
    CHECK(ind.values[j] == naive_induced_value(lambda, *a4, a4->classes().representatives[j]));
  CHECK(inner_product(ind, ind) == naive_inner(ind, ind));
}

TEST_CASE("inflation through a quotient") {
  GroupRef s4 = construct("sym:4");
  GroupRef v4 = s4->subgroup({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
  QuotientResult q = s4->quotient(*v4);
  ClassFunction reg = ClassFunction::regular(q.quotient);
  ClassFunction inf = inflate(reg, q, s4);
  // value 6 on classes mapping into V4, zero elsewhere
  const auto& cls = s4->classes();
  for (int j = 0; j < cls.count(); ++j) {
    if (v4->contains(cls.representatives[j]))
      CHECK(inf.values[j].rational_value() == 6);
    else
      CHECK(inf.values[j].is_zero());
  }
}
