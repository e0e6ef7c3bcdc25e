#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psilab/perm.hpp"
#include "psilab/util.hpp"

namespace psilab {

class Group;
using GroupRef = std::shared_ptr<const Group>;

// Base and strong generating set, built by deterministic Schreier-Sims.
struct Bsgs {
  int degree = 0;
  std::vector<int> base;
  std::vector<std::vector<Perm>> level_gens;              // gens fixing base[0..i)
  std::vector<std::unordered_map<int, Perm>> transversal; // base[i] -> pt coset reps
  u64 order = 1;

  static Bsgs build(int degree, const std::vector<Perm>& gens);
  bool contains(const Perm& g) const;
};

struct PartDecomposition {
  Perm pi_part;
  Perm pi_prime_part;
};

struct ConjugacyClassSet {
  std::vector<Perm> representatives;       // canonical order (see Group::classes)
  std::vector<u64> sizes;
  std::vector<u64> centralizer_orders;
  std::vector<u64> element_orders;
  // power map cache: (class, exponent mod element order) -> class
  mutable std::map<std::pair<int, u64>, int> power_cache;
  mutable std::mutex power_mutex;

  int count() const { return static_cast<int>(representatives.size()); }
};

struct QuotientResult {
  GroupRef quotient;
  // projection of an element of N (by key) to a point of the quotient group
  std::shared_ptr<const std::unordered_map<std::string, int>> coset_of;
  std::vector<Perm> coset_reps;  // lex-minimal representative per coset

  int project(const Perm& g) const;
  Perm project_perm(const Perm& g, const Group& N) const;  // induced permutation of cosets
};

// An immutable permutation group with lazily computed, internally cached data.
class Group : public std::enable_shared_from_this<Group> {
public:
  static GroupRef make(int degree, std::vector<Perm> generators, std::string spec_text = "");

  int degree() const { return degree_; }
  u64 order() const { return bsgs_.order; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Bsgs& bsgs() const { return bsgs_; }
  const std::string& spec_text() const { return spec_text_; }
  u64 generator_hash() const;  // content hash of the canonical generator list

  bool contains(const Perm& g) const;
  bool is_subgroup_of(const Group& big) const;
  bool is_normal_in(const Group& big) const;  // assumes *this <= big
  u64 exponent() const;

  // All elements in canonical (lexicographic) order.  Throws above the cap.
  const std::vector<Perm>& elements() const;
  static constexpr u64 kEnumerationCap = 400000;

  const ConjugacyClassSet& classes() const;
  int class_of(const Perm& g) const;
  // class of representatives[j]^n (n arbitrary, reduced mod element order)
  int class_of_power(int j, i64 n) const;
  int inverse_class(int j) const;

  // Subgroup construction from elements of this group (deduplicated by sifting).
  GroupRef subgroup(const std::vector<Perm>& elts) const;

  GroupRef centralizer(const Perm& g) const;
  GroupRef centralizer_subgroup(const Group& h) const;  // C_G(H)
  GroupRef normalizer(const Group& h) const;
  GroupRef sylow_subgroup(u64 p) const;
  GroupRef center() const;
  GroupRef normal_closure(const std::vector<Perm>& elts) const;
  GroupRef o_p(u64 p) const;       // largest normal p-subgroup
  GroupRef o_pi_prime(const std::vector<u64>& pi) const;  // normal pi-complement if it exists
  GroupRef intersection(const Group& other) const;
  GroupRef o_p_power_residue(u64 p) const;  // O^p(G): normal closure of all p-elements

  static PartDecomposition pi_part(const Perm& g, const std::vector<u64>& pi);
  u64 count_pi_elements(const std::vector<u64>& pi) const;
  bool has_normal_pi_complement(const std::vector<u64>& pi) const;
  bool is_pi_separable(const std::vector<u64>& pi) const;
  bool is_solvable() const;

  std::optional<GroupRef> find_subgroup_of_order(u64 n) const;
  std::vector<GroupRef> all_subgroups(u64 cap = 20000) const;

  QuotientResult quotient(const Group& q) const;  // *this / q, q normal in *this

  // class index of the pi-part of each class representative
  std::vector<int> pi_sections(const std::vector<u64>& pi) const;

private:
  Group(int degree, std::vector<Perm> gens, Bsgs bsgs, std::string spec_text);

  int degree_;
  std::vector<Perm> gens_;
  Bsgs bsgs_;
  std::string spec_text_;

  mutable std::mutex mutex_;
  mutable std::shared_ptr<std::vector<Perm>> elements_;
  mutable std::shared_ptr<ConjugacyClassSet> classes_;
  mutable std::shared_ptr<std::unordered_map<std::string, int>> class_map_;
  mutable std::optional<u64> exponent_;

  void ensure_elements_locked() const;
  void ensure_classes_locked() const;
};

GroupRef build_group(int degree, const std::vector<Perm>& generators);

// Parses a group file: one generator per line in cycle notation, '#' comments.
GroupRef load_group_file(const std::string& path, int degree);

}  // namespace psilab
