#include <algorithm>
#include <functional>

#include "psilab/group.hpp"

namespace psilab {

namespace {

// Orbit of pt under gens, with coset representatives (BFS in point order).
void recompute_orbit(int pt, const std::vector<Perm>& gens, int degree,
                     std::unordered_map<int, Perm>& tr, std::vector<int>& orbit) {
  tr.clear();
  orbit.clear();
  tr.emplace(pt, Perm(degree));
  orbit.push_back(pt);
  for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
    int a = orbit[qi];
    Perm ua = tr.at(a);
    for (const Perm& s : gens) {
      int b = s[a];
      if (!tr.count(b)) {
        tr.emplace(b, ua * s);
        orbit.push_back(b);
      }
    }
  }
}

std::pair<Perm, std::size_t> strip(const Bsgs& B, Perm g, std::size_t from) {
  for (std::size_t i = from; i < B.base.size(); ++i) {
    int pt = g[B.base[i]];
    auto it = B.transversal[i].find(pt);
    if (it == B.transversal[i].end()) return {std::move(g), i};
    g = g * it->second.inverse();
  }
  return {std::move(g), B.base.size()};
}

}  // namespace

Bsgs Bsgs::build(int degree, const std::vector<Perm>& gens) {
  Bsgs B;
  B.degree = degree;

  auto first_moved_point = [&](const Perm& g) {
    for (int i = 0; i < degree; ++i)
      if (g[i] != i) return i;
    throw Error("Bsgs: identity offered as strong generator");
  };

  auto add_level = [&](int pt) {
    B.base.push_back(pt);
    B.level_gens.emplace_back();
    B.transversal.emplace_back();
    B.transversal.back().emplace(pt, Perm(degree));
  };

  // Completes level i, assuming all deeper levels are complete.  Note that
  // add_level may reallocate the per-level vectors, so no references are held
  // across iterations.
  std::function<void(std::size_t)> complete_level = [&](std::size_t i) {
    std::vector<int> orbit;
    recompute_orbit(B.base[i], B.level_gens[i], degree, B.transversal[i], orbit);
    for (std::size_t oi = 0; oi < orbit.size(); ++oi) {
      int pt = orbit[oi];
      Perm u = B.transversal[i].at(pt);
      for (std::size_t si = 0; si < B.level_gens[i].size(); ++si) {
        Perm s = B.level_gens[i][si];
        Perm schreier = (u * s) * B.transversal[i].at(s[pt]).inverse();
        if (schreier.is_identity()) continue;
        auto [h, lev] = strip(B, std::move(schreier), i + 1);
        if (h.is_identity()) continue;
        if (lev == B.base.size()) add_level(first_moved_point(h));
        for (std::size_t j = i + 1; j <= lev && j < B.base.size(); ++j)
          B.level_gens[j].push_back(h);
        for (std::size_t j = std::min(lev, B.base.size() - 1); j >= i + 1; --j) complete_level(j);
      }
    }
  };

  for (const Perm& g : gens) {
    if (g.degree() != degree) throw Error("Bsgs: generator degree mismatch");
    if (g.is_identity()) continue;
    auto [h, lev] = strip(B, g, 0);
    if (h.is_identity()) continue;
    if (lev == B.base.size()) add_level(first_moved_point(h));
    for (std::size_t j = 0; j <= lev && j < B.base.size(); ++j) B.level_gens[j].push_back(h);
    for (std::size_t j = std::min(lev, B.base.size() - 1) + 1; j-- > 0;) complete_level(j);
  }

  B.order = 1;
  for (auto& t : B.transversal) B.order *= static_cast<u64>(t.size());
  return B;
}

bool Bsgs::contains(const Perm& g) const {
  if (g.degree() != degree) return false;
  if (g.is_identity()) return true;
  if (base.empty()) return false;
  auto [h, lev] = strip(*this, g, 0);
  return h.is_identity();
}

}  // namespace psilab
