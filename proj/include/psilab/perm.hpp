#pragma once

#include <compare>
#include <string>
#include <vector>

#include "psilab/util.hpp"

namespace psilab {

// A permutation of {0..n-1}, stored by its image sequence.  Products act
// left-to-right: (a * b)[i] = b[a[i]].
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<std::uint16_t> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  bool is_identity() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm power(i64 n) const;
  Perm conjugate_by(const Perm& g) const;  // g^-1 * (*this) * g

  u64 order() const;  // lcm of cycle lengths
  bool commutes_with(const Perm& rhs) const;

  // Raw image bytes; usable as a hash-map key.
  std::string key() const;

  bool operator==(const Perm& rhs) const { return img_ == rhs.img_; }
  auto operator<=>(const Perm& rhs) const { return img_ <=> rhs.img_; }

  // Disjoint-cycle text with 1-based points, e.g. "(1,2)(3,4)"; identity is "()".
  std::string to_cycles() const;
  static Perm from_cycles(const std::string& text, int degree);

  const std::vector<std::uint16_t>& images() const { return img_; }

private:
  std::vector<std::uint16_t> img_;
};

}  // namespace psilab
