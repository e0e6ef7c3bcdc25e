#include <set>

#include "doctest.h"
#include "psilab/group.hpp"
#include "psilab/zoo.hpp"

using namespace psilab;

namespace {

// independent oracle: centralizer order by scanning every element
u64 naive_centralizer_order(const Group& g, const Perm& x) {
  u64 n = 0;
  for (const Perm& e : g.elements())
    if (e.commutes_with(x)) ++n;
  return n;
}

}  // namespace

TEST_CASE("build_group orders") {
  // {(0 1),(0 1 2 3 4)} generates S_5
  GroupRef s5 = build_group(5, {Perm::from_cycles("(1,2)", 5), Perm::from_cycles("(1,2,3,4,5)", 5)});
  CHECK(s5->order() == 120);

  GroupRef triv = build_group(3, {});
  CHECK(triv->order() == 1);
  CHECK(triv->contains(Perm(3)));

  GroupRef a5 = construct("alt:5");
  CHECK(a5->order() == 60);

  CHECK_THROWS_AS(build_group(3, {Perm::from_cycles("(1,2)", 4)}), Error);
}

TEST_CASE("membership and element enumeration") {
  GroupRef s4 = construct("sym:4");
  CHECK(s4->order() == 24);
  CHECK(s4->elements().size() == 24);
  CHECK(s4->contains(Perm::from_cycles("(1,2,3,4)", 4)));
  GroupRef a4 = construct("alt:4");
  CHECK(a4->order() == 12);
  CHECK_FALSE(a4->contains(Perm::from_cycles("(1,2)", 4)));
  // deterministic canonical order
  CHECK(std::is_sorted(s4->elements().begin(), s4->elements().end()));
}

TEST_CASE("conjugacy classes") {
  GroupRef s3 = construct("sym:3");
  const auto& cls = s3->classes();
  REQUIRE(cls.count() == 3);
  CHECK(cls.sizes == std::vector<u64>{1, 3, 2});
  CHECK(cls.element_orders == std::vector<u64>{1, 2, 3});

  GroupRef c4 = construct("cyclic:4");
  CHECK(c4->classes().count() == 4);
  for (u64 s : c4->classes().sizes) CHECK(s == 1);

  // A_5 class sizes from the brute-force conjugation orbit
  GroupRef a5 = construct("alt:5");
  const auto& acls = a5->classes();
  REQUIRE(acls.count() == 5);
  std::multiset<u64> sizes(acls.sizes.begin(), acls.sizes.end());
  CHECK(sizes == std::multiset<u64>{1, 15, 20, 12, 12});

  // size * centralizer order = |G| on every class
  for (int j = 0; j < acls.count(); ++j)
    CHECK(acls.sizes[j] * acls.centralizer_orders[j] == a5->order());
}

TEST_CASE("centralizer") {
  GroupRef s4 = construct("sym:4");
  Perm x = Perm::from_cycles("(1,2)(3,4)", 4);
  GroupRef c = s4->centralizer(x);
  CHECK(c->order() == 8);
  CHECK(c->order() == naive_centralizer_order(*s4, x));

  GroupRef s3 = construct("sym:3");
  CHECK(s3->centralizer(Perm::from_cycles("(1,2,3)", 3))->order() == 3);
  CHECK(s3->centralizer(Perm(3))->order() == s3->order());
  CHECK_THROWS_AS(s3->centralizer(Perm::from_cycles("(1,2)", 4)), Error);
}

TEST_CASE("normalizer") {
  GroupRef a5 = construct("alt:5");
  GroupRef syl2 = a5->sylow_subgroup(2);
  CHECK(syl2->order() == 4);
  CHECK(a5->normalizer(*syl2)->order() == 12);

  GroupRef s3 = construct("sym:3");
  GroupRef c2 = s3->subgroup({Perm::from_cycles("(1,2)", 3)});
  CHECK(s3->normalizer(*c2)->order() == 2);
  CHECK(s3->normalizer(*s3)->order() == 6);
}

TEST_CASE("sylow subgroups") {
  GroupRef s4 = construct("sym:4");
  CHECK(s4->sylow_subgroup(2)->order() == 8);
  CHECK(s4->sylow_subgroup(3)->order() == 3);
  CHECK(s4->sylow_subgroup(5)->order() == 1);
  GroupRef a5 = construct("alt:5");
  CHECK(a5->sylow_subgroup(5)->order() == 5);
  CHECK(a5->sylow_subgroup(2)->is_subgroup_of(*a5));
}

TEST_CASE("pi parts") {
  Perm g = Perm::from_cycles("(1,2,3,4,5,6)", 6);
  auto d = Group::pi_part(g, {2});
  CHECK(d.pi_part == g.power(3));
  CHECK(d.pi_prime_part == g.power(4));
  CHECK(d.pi_part.order() == 2);
  CHECK(d.pi_prime_part.order() == 3);
  CHECK(d.pi_part.commutes_with(d.pi_prime_part));
  CHECK(d.pi_part * d.pi_prime_part == g);

  auto di = Group::pi_part(Perm(4), {2, 3});
  CHECK(di.pi_part.is_identity());
  CHECK(di.pi_prime_part.is_identity());

  Perm f = Perm::from_cycles("(1,2,3,4,5)", 5);
  auto d5 = Group::pi_part(f, {2, 3});
  CHECK(d5.pi_part.is_identity());
  CHECK(d5.pi_prime_part == f);

  // exhaustive property on S_4 for several prime sets
  GroupRef s4 = construct("sym:4");
  for (const auto& pi : std::vector<std::vector<u64>>{{2}, {3}, {2, 3}}) {
    for (const Perm& x : s4->elements()) {
      auto dx = Group::pi_part(x, pi);
      CHECK(dx.pi_part * dx.pi_prime_part == x);
      CHECK(dx.pi_part.commutes_with(dx.pi_prime_part));
      CHECK(is_pi_number(dx.pi_part.order(), pi));
      CHECK(pi_part_of(dx.pi_prime_part.order(), pi) == 1);
    }
  }
}

TEST_CASE("count_pi_elements") {
  CHECK(construct("sym:4")->count_pi_elements({2}) == 16);
  CHECK(construct("cyclic:5")->count_pi_elements({2}) == 1);
  CHECK(construct("sym:3")->count_pi_elements({2}) == 4);
}

TEST_CASE("normal pi complement") {
  CHECK(construct("sym:3")->has_normal_pi_complement({2}));
  CHECK_FALSE(construct("sym:4")->has_normal_pi_complement({2}));
  CHECK(construct("cyclic:15")->has_normal_pi_complement({2}));  // pi'-group
  // complement implies the regular-element count equals |H|_{pi'}
  GroupRef s3 = construct("sym:3");
  u64 regulars = 0;
  for (const Perm& x : s3->elements())
    if (x.order() % 2 != 0) ++regulars;
  CHECK(regulars == 3);
}

TEST_CASE("find_subgroup_of_order") {
  GroupRef a5 = construct("alt:5");
  GroupRef h = a5->normalizer(*a5->sylow_subgroup(5));
  CHECK(h->order() == 10);
  auto t = h->find_subgroup_of_order(2);
  REQUIRE(t.has_value());
  CHECK((*t)->order() == 2);

  GroupRef a4 = construct("alt:4");
  CHECK_FALSE(a4->find_subgroup_of_order(6).has_value());
  CHECK((*a4->find_subgroup_of_order(1))->order() == 1);
  CHECK_THROWS_AS(a4->find_subgroup_of_order(5), Error);
}

TEST_CASE("quotient group") {
  GroupRef s4 = construct("sym:4");
  GroupRef v4 = s4->subgroup({Perm::from_cycles("(1,2)(3,4)", 4), Perm::from_cycles("(1,3)(2,4)", 4)});
  CHECK(v4->order() == 4);
  QuotientResult q = s4->quotient(*v4);
  CHECK(q.quotient->order() == 6);
  CHECK(q.quotient->classes().count() == 3);  // iso to S_3 in order terms

  // projection is a homomorphism (exhaustive; |N| = 24)
  for (const Perm& a : s4->elements())
    for (const Perm& b : s4->elements())
      CHECK(q.project_perm(a * b, *s4) == q.project_perm(a, *s4) * q.project_perm(b, *s4));

  QuotientResult qq = s4->quotient(*s4);
  CHECK(qq.quotient->order() == 1);
  GroupRef c2 = construct("cyclic:2");
  QuotientResult qc = c2->quotient(*c2->subgroup({}));
  CHECK(qc.quotient->order() == 2);

  GroupRef c2s = s4->subgroup({Perm::from_cycles("(1,2)", 4)});
  CHECK_THROWS_AS(s4->quotient(*c2s), Error);
}

TEST_CASE("pi sections") {
  GroupRef s3 = construct("sym:3");
  auto sec = s3->pi_sections({2});
  // classes: (1, transposition, 3-cycle); 2-parts: 1, transposition, 1
  CHECK(sec == std::vector<int>{0, 1, 0});

  // section-size identity on S_4: for 2-regular y the 2'-section of y
  // (elements whose 2'-part is conjugate to y) has cardinality
  // [G:C(y)] * (number of 2-elements of C(y))
  GroupRef s4 = construct("sym:4");
  auto sec4 = s4->pi_sections({3});  // 2'-part = {3}-part here
  const auto& cls = s4->classes();
  for (int j = 0; j < cls.count(); ++j) {
    if (cls.element_orders[j] % 2 == 0) continue;
    u64 size = 0;
    for (int i = 0; i < cls.count(); ++i)
      if (sec4[i] == j) size += cls.sizes[i];
    GroupRef c = s4->centralizer(cls.representatives[j]);
    CHECK(size == (s4->order() / c->order()) * c->count_pi_elements({2}));
  }
}

TEST_CASE("solvability and pi separability") {
  CHECK(construct("sym:4")->is_solvable());
  CHECK_FALSE(construct("alt:5")->is_solvable());
  CHECK(construct("sym:4")->is_pi_separable({2}));
  CHECK(construct("sym:4")->is_pi_separable({2, 3}));
  CHECK_FALSE(construct("alt:5")->is_pi_separable({2}));
  CHECK(construct("alt:5")->is_pi_separable({2, 3, 5}));  // whole order is a pi-number
}

TEST_CASE("normal closure and O^p") {
  GroupRef s4 = construct("sym:4");
  GroupRef op = s4->o_p_power_residue(2);  // normal closure of 2-elements = S_4
  CHECK(op->order() == 24);
  GroupRef o3 = s4->o_p_power_residue(3);  // 3-elements generate A_4
  CHECK(o3->order() == 12);
  GroupRef s3 = construct("sym:3");
  CHECK(s3->o_p_power_residue(2)->order() == 6);
  CHECK(s3->o_p_power_residue(3)->order() == 3);
  CHECK(s4->o_p(2)->order() == 4);  // V_4
  CHECK(s4->o_p(3)->order() == 1);
}

TEST_CASE("group file io") {
  GroupRef g = load_group_file(std::string(PSILAB_DATA_DIR) + "/../tests/fixtures/s3.grp", 3);
  CHECK(g->order() == 6);
}
