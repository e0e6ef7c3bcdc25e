#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "psilab/group.hpp"

namespace psilab {

// Arithmetic tables for GF(q), q = p^a <= 81.  Elements are indices 0..q-1,
// base-p digit i of the index being the coefficient of x^i modulo the pinned
// irreducible polynomial.
class GaloisField {
public:
  explicit GaloisField(u64 q);

  u64 q() const { return q_; }
  u64 p() const { return p_; }
  int deg() const { return a_; }

  int add(int x, int y) const { return add_[x * static_cast<int>(q_) + y]; }
  int mul(int x, int y) const { return mul_[x * static_cast<int>(q_) + y]; }
  int neg(int x) const { return neg_[x]; }
  int inv(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }
  // a multiplicative generator (smallest index of maximal order)
  int generator() const { return gen_; }
  u64 element_order(int x) const;

  static const GaloisField& get(u64 q);  // cached

private:
  u64 q_, p_;
  int a_;
  std::vector<int> add_, mul_, neg_;
  std::vector<int> inv_;
  int gen_;
};

struct GroupSpec {
  std::string text;

  static GroupSpec parse(const std::string& text);
};

// Constructs the permutation group named by the spec text:
//   sym:n alt:n cyclic:n dihedral:m (m the group order) psl:2,q sl:2,q gl:n,q
//   products with '*', e.g. "sym:5*cyclic:3"
GroupRef construct(const std::string& spec_text);
GroupRef direct_product(const Group& a, const Group& b);

}  // namespace psilab
