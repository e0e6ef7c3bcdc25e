#include "psilab/classfun.hpp"

namespace psilab {

ClassFunction ClassFunction::constant(GroupRef g, const Cyclotomic& c) {
  int k = g->classes().count();
  return ClassFunction(std::move(g), std::vector<Cyclotomic>(k, c));
}

ClassFunction ClassFunction::regular(GroupRef g) {
  int k = g->classes().count();
  std::vector<Cyclotomic> v(k, Cyclotomic(0));
  v[0] = Cyclotomic(mpz_class(static_cast<unsigned long>(g->order())));
  return ClassFunction(std::move(g), std::move(v));
}

static void check_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group.get() != b.group.get())
    throw Error("class functions live on different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  check_same_group(*this, rhs);
  std::vector<Cyclotomic> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] + rhs.values[i];
  return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
  check_same_group(*this, rhs);
  std::vector<Cyclotomic> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] - rhs.values[i];
  return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& rhs) const {
  check_same_group(*this, rhs);
  std::vector<Cyclotomic> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] * rhs.values[i];
  return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
  std::vector<Cyclotomic> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i] * c;
  return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclotomic> v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i].conjugate();
  return ClassFunction(group, std::move(v));
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
  return group.get() == rhs.group.get() && values == rhs.values;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b,
                         const std::optional<std::set<int>>& restrict_to) {
  check_same_group(a, b);
  const auto& cls = a.group->classes();
  CycAccumulator acc;
  for (int j = 0; j < cls.count(); ++j) {
    if (restrict_to && !restrict_to->count(j)) continue;
    acc.add_product(a.values[j], b.values[j].conjugate(),
                    mpq_class(static_cast<unsigned long>(cls.sizes[j])));
  }
  Cyclotomic s = acc.result();
  return s * Cyclotomic(mpq_class(1, static_cast<unsigned long>(a.group->order())));
}

std::vector<int> class_fusion(const Group& sub, const Group& big) {
  if (!sub.is_subgroup_of(big)) throw Error("class_fusion: not a subgroup");
  const auto& scls = sub.classes();
  std::vector<int> fus(scls.count());
  for (int c = 0; c < scls.count(); ++c) fus[c] = big.class_of(scls.representatives[c]);
  return fus;
}

ClassFunction induce(const ClassFunction& alpha, GroupRef big) {
  const Group& h = *alpha.group;
  std::vector<int> fus = class_fusion(h, *big);
  const auto& hcls = h.classes();
  const auto& gcls = big->classes();
  // Ind(alpha)(g) = |C_G(g)| * sum over H-classes c fusing to g of
  //                 alpha(c) / |C_H(c)|
  std::vector<CycAccumulator> acc(gcls.count());
  for (int c = 0; c < hcls.count(); ++c)
    acc[fus[c]].add_product(alpha.values[c], Cyclotomic(1),
                            mpq_class(1, static_cast<unsigned long>(hcls.centralizer_orders[c])));
  std::vector<Cyclotomic> v(gcls.count());
  for (int j = 0; j < gcls.count(); ++j)
    v[j] = acc[j].result() *
           Cyclotomic(mpq_class(static_cast<unsigned long>(gcls.centralizer_orders[j])));
  return ClassFunction(std::move(big), std::move(v));
}

ClassFunction restrict_to(const ClassFunction& alpha, GroupRef sub) {
  std::vector<int> fus = class_fusion(*sub, *alpha.group);
  std::vector<Cyclotomic> v(fus.size());
  for (std::size_t c = 0; c < fus.size(); ++c) v[c] = alpha.values[fus[c]];
  return ClassFunction(std::move(sub), std::move(v));
}

ClassFunction adams(const ClassFunction& alpha, i64 n) {
  const Group& g = *alpha.group;
  int k = alpha.count();
  std::vector<Cyclotomic> v(k);
  for (int j = 0; j < k; ++j) v[j] = alpha.values[g.class_of_power(j, n)];
  return ClassFunction(alpha.group, std::move(v));
}

mpq_class frobenius_schur(const ClassFunction& chi) {
  const Group& g = *chi.group;
  const auto& cls = g.classes();
  CycAccumulator acc;
  for (int j = 0; j < cls.count(); ++j)
    acc.add_product(chi.values[g.class_of_power(j, 2)], Cyclotomic(1),
                    mpq_class(static_cast<unsigned long>(cls.sizes[j])));
  Cyclotomic s = acc.result() * Cyclotomic(mpq_class(1, static_cast<unsigned long>(g.order())));
  return s.rational_value();
}

ClassFunction inflate(const ClassFunction& alpha, const QuotientResult& q, GroupRef big) {
  const auto& bcls = big->classes();
  const Group& quot = *q.quotient;
  std::vector<Cyclotomic> v(bcls.count());
  for (int j = 0; j < bcls.count(); ++j) {
    Perm image = q.project_perm(bcls.representatives[j], *big);
    v[j] = alpha.values[quot.class_of(image)];
  }
  return ClassFunction(std::move(big), std::move(v));
}

}  // namespace psilab
