#pragma once

#include <optional>
#include <set>

#include "psilab/cyclotomic.hpp"
#include "psilab/group.hpp"

namespace psilab {

// A class function on a fixed group, one exact value per conjugacy class in
// canonical class order.
struct ClassFunction {
  GroupRef group;
  std::vector<Cyclotomic> values;

  ClassFunction() = default;
  ClassFunction(GroupRef g, std::vector<Cyclotomic> v) : group(std::move(g)), values(std::move(v)) {}

  static ClassFunction constant(GroupRef g, const Cyclotomic& c);
  static ClassFunction trivial(GroupRef g) { return constant(std::move(g), Cyclotomic(1)); }
  static ClassFunction regular(GroupRef g);

  int count() const { return static_cast<int>(values.size()); }
  const Cyclotomic& at(int j) const { return values[j]; }
  Cyclotomic degree() const { return values[0]; }

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction operator-(const ClassFunction& rhs) const;
  ClassFunction operator*(const ClassFunction& rhs) const;  // pointwise (tensor)
  ClassFunction scaled(const Cyclotomic& c) const;
  ClassFunction conjugate() const;
  bool is_zero() const;
  bool operator==(const ClassFunction& rhs) const;
};

// (1/|G|) sum over classes of |K| a(g) conj(b(g)), optionally restricted to a
// subset of classes.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b,
                         const std::optional<std::set<int>>& restrict_to = std::nullopt);

// Class fusion of a subgroup into its parent (same permutation degree).
std::vector<int> class_fusion(const Group& sub, const Group& big);

ClassFunction induce(const ClassFunction& alpha, GroupRef big);
ClassFunction restrict_to(const ClassFunction& alpha, GroupRef sub);

// Adams operation: value at the class of g is alpha at the class of g^n.
ClassFunction adams(const ClassFunction& alpha, i64 n);

// (1/|G|) sum chi(g^2); -1, 0 or 1 for irreducible chi.
mpq_class frobenius_schur(const ClassFunction& chi);

// Inflation along a quotient projection: value at g is alpha at proj(g).
ClassFunction inflate(const ClassFunction& alpha, const QuotientResult& q, GroupRef big);

}  // namespace psilab
