#pragma once

#include <memory>

#include "psilab/classfun.hpp"

namespace psilab {

struct BlockDistribution {
  u64 p;
  std::vector<int> block_of;     // per irreducible
  std::vector<int> defect;       // per block
  int count() const { return static_cast<int>(defect.size()); }
  int principal() const;         // block containing the trivial character
};

// Exact ordinary character table.  Characters are in canonical order: the
// trivial character first, the rest sorted by (degree, value tuple).
class CharacterTable {
public:
  GroupRef group;
  std::vector<ClassFunction> irr;
  u64 exponent;

  int class_count() const { return group->classes().count(); }
  int irr_count() const { return static_cast<int>(irr.size()); }
  const ClassFunction& trivial() const { return irr[0]; }

  // index of the irreducible equal to the given class function, or -1
  int index_of(const ClassFunction& chi) const;

  // p-blocks via central characters reduced modulo a prime ideal above p
  const BlockDistribution& blocks(u64 p) const;

  // degree as an exact non-negative integer
  mpz_class degree(int i) const { return irr[i].degree().rational_value().get_num(); }

  std::string serialize() const;       // canonical, versioned, bit-exact
  u64 content_hash() const;            // fnv64 of serialize()

  // verifies row/column orthogonality and the degree sum; throws on failure
  void verify() const;

private:
  mutable std::mutex blocks_mutex_;
  mutable std::map<u64, std::shared_ptr<const BlockDistribution>> blocks_cache_;
};

using TableRef = std::shared_ptr<const CharacterTable>;

// Computes (or loads from the on-disk cache) the character table of g.
TableRef character_table(GroupRef g);

// cache location: PSI_CACHE_DIR environment variable, default ".psi-cache"
std::string table_cache_dir();

// Dixon-Schneider, no caching; exposed for tests.
TableRef compute_character_table(GroupRef g);

// Parses a canonical serialization against the given group (validates class
// data and orthogonality); used by the disk cache.
TableRef parse_character_table(GroupRef g, const std::string& text);

}  // namespace psilab
