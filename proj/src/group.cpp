#include "psilab/group.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace psilab {

Group::Group(int degree, std::vector<Perm> gens, Bsgs bsgs, std::string spec_text)
    : degree_(degree), gens_(std::move(gens)), bsgs_(std::move(bsgs)),
      spec_text_(std::move(spec_text)) {}

GroupRef Group::make(int degree, std::vector<Perm> generators, std::string spec_text) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw Error("Group: generator degree mismatch");
  Bsgs b = Bsgs::build(degree, generators);
  for (const Perm& g : generators)
    if (!b.contains(g)) throw VerificationError("Group: generator fails bsgs membership");
  return GroupRef(new Group(degree, std::move(generators), std::move(b), std::move(spec_text)));
}

GroupRef build_group(int degree, const std::vector<Perm>& generators) {
  return Group::make(degree, generators);
}

GroupRef load_group_file(const std::string& path, int degree) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    gens.push_back(Perm::from_cycles(line, degree));
  }
  return Group::make(degree, std::move(gens));
}

u64 Group::generator_hash() const {
  u64 h = fnv1a(&degree_, sizeof(degree_));
  for (const Perm& g : gens_) h = fnv1a(g.key(), h);
  return h;
}

bool Group::contains(const Perm& g) const { return bsgs_.contains(g); }

bool Group::is_subgroup_of(const Group& big) const {
  if (degree_ != big.degree()) return false;
  for (const Perm& g : gens_)
    if (!big.contains(g)) return false;
  return true;
}

bool Group::is_normal_in(const Group& big) const {
  for (const Perm& x : big.generators())
    for (const Perm& g : gens_)
      if (!contains(g.conjugate_by(x))) return false;
  return true;
}

u64 Group::exponent() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!exponent_) {
    ensure_classes_locked();
    u64 e = 1;
    for (u64 o : classes_->element_orders) e = lcm_u64(e, o);
    exponent_ = e;
  }
  return *exponent_;
}

void Group::ensure_elements_locked() const {
  if (elements_) return;
  if (order() > kEnumerationCap)
    throw Error("group order " + std::to_string(order()) + " exceeds enumeration cap");
  auto elts = std::make_shared<std::vector<Perm>>();
  elts->reserve(order());
  // product of transversals over all levels
  std::vector<std::vector<Perm>> levels;
  for (auto& t : bsgs_.transversal) {
    std::vector<Perm> reps;
    reps.reserve(t.size());
    for (auto& [pt, u] : t) reps.push_back(u);
    levels.push_back(std::move(reps));
  }
  elts->push_back(Perm(degree_));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(elts->size() * it->size());
    for (const Perm& u : *it)
      for (const Perm& x : *elts) next.push_back(x * u);
    *elts = std::move(next);
  }
  std::sort(elts->begin(), elts->end());
  if (elts->size() != order()) throw VerificationError("element enumeration size mismatch");
  elements_ = std::move(elts);
}

const std::vector<Perm>& Group::elements() const {
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_elements_locked();
  return *elements_;
}

void Group::ensure_classes_locked() const {
  if (classes_) return;
  ensure_elements_locked();
  const std::vector<Perm>& elts = *elements_;

  auto cmap = std::make_shared<std::unordered_map<std::string, int>>();
  cmap->reserve(elts.size() * 2);

  struct RawClass {
    Perm rep;
    u64 size;
    u64 order;
  };
  std::vector<RawClass> raw;
  int next_class = 0;
  std::vector<Perm> queue;
  for (const Perm& e : elts) {
    if (cmap->count(e.key())) continue;
    int id = next_class++;
    queue.clear();
    queue.push_back(e);
    cmap->emplace(e.key(), id);
    u64 size = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Perm x = queue[qi];
      for (const Perm& g : gens_) {
        Perm y = x.conjugate_by(g);
        auto [it, inserted] = cmap->emplace(y.key(), id);
        if (inserted) {
          queue.push_back(y);
          ++size;
        }
      }
    }
    raw.push_back({e, size, e.order()});
  }

  // canonical order: element order, then class size, then lex-minimal rep
  std::vector<int> perm_idx(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) perm_idx[i] = static_cast<int>(i);
  std::sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    if (raw[a].size != raw[b].size) return raw[a].size < raw[b].size;
    return raw[a].rep < raw[b].rep;
  });
  std::vector<int> new_id(raw.size());
  for (std::size_t i = 0; i < perm_idx.size(); ++i) new_id[perm_idx[i]] = static_cast<int>(i);
  for (auto& [k, v] : *cmap) v = new_id[v];

  auto cls = std::make_shared<ConjugacyClassSet>();
  u64 total = 0;
  for (int i : perm_idx) {
    cls->representatives.push_back(raw[i].rep);
    cls->sizes.push_back(raw[i].size);
    cls->centralizer_orders.push_back(order() / raw[i].size);
    cls->element_orders.push_back(raw[i].order);
    if (order() % raw[i].size != 0)
      throw VerificationError("class size does not divide group order");
    total += raw[i].size;
  }
  if (total != order()) throw VerificationError("class sizes do not sum to group order");

  class_map_ = std::move(cmap);
  classes_ = std::move(cls);
}

const ConjugacyClassSet& Group::classes() const {
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_classes_locked();
  return *classes_;
}

int Group::class_of(const Perm& g) const {
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_classes_locked();
  auto it = class_map_->find(g.key());
  if (it == class_map_->end()) throw Error("class_of: element not in group");
  return it->second;
}

int Group::class_of_power(int j, i64 n) const {
  const ConjugacyClassSet& cls = classes();
  u64 o = cls.element_orders[j];
  u64 r = static_cast<u64>(((n % static_cast<i64>(o)) + static_cast<i64>(o)) % static_cast<i64>(o));
  {
    std::lock_guard<std::mutex> lock(cls.power_mutex);
    auto it = cls.power_cache.find({j, r});
    if (it != cls.power_cache.end()) return it->second;
  }
  int c = class_of(cls.representatives[j].power(static_cast<i64>(r)));
  std::lock_guard<std::mutex> lock(cls.power_mutex);
  cls.power_cache.emplace(std::make_pair(j, r), c);
  return c;
}

int Group::inverse_class(int j) const { return class_of_power(j, -1); }

GroupRef Group::subgroup(const std::vector<Perm>& elts) const {
  std::vector<Perm> gens;
  Bsgs b = Bsgs::build(degree_, {});
  for (const Perm& e : elts) {
    if (!e.is_identity() && !b.contains(e)) {
      gens.push_back(e);
      b = Bsgs::build(degree_, gens);
    }
  }
  return Group::make(degree_, std::move(gens));
}

GroupRef Group::centralizer(const Perm& g) const {
  if (!contains(g)) throw Error("centralizer: element not in group");
  std::vector<Perm> found;
  for (const Perm& x : elements())
    if (x.commutes_with(g)) found.push_back(x);
  GroupRef c = subgroup(found);
  if (c->order() != order() / classes().sizes[class_of(g)])
    throw VerificationError("centralizer order mismatch");
  return c;
}

GroupRef Group::centralizer_subgroup(const Group& h) const {
  std::vector<Perm> found;
  for (const Perm& x : elements()) {
    bool ok = true;
    for (const Perm& g : h.generators())
      if (!x.commutes_with(g)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  return subgroup(found);
}

GroupRef Group::normalizer(const Group& h) const {
  if (!h.is_subgroup_of(*this)) throw Error("normalizer: not a subgroup");
  std::vector<Perm> found;
  for (const Perm& x : elements()) {
    bool ok = true;
    for (const Perm& g : h.generators())
      if (!h.contains(g.conjugate_by(x))) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  GroupRef n = subgroup(found);
  if (n->order() % h.order() != 0) throw VerificationError("normalizer does not contain subgroup");
  return n;
}

GroupRef Group::sylow_subgroup(u64 p) const {
  if (!is_prime(p)) throw Error("sylow_subgroup: p must be prime");
  u64 target = pi_part_of(order(), {p});
  if (target == 1) return subgroup({});
  // start from a p-element of maximal p-power order among class representatives
  const ConjugacyClassSet& cls = classes();
  Perm seed(degree_);
  u64 best = 1;
  for (int j = 0; j < cls.count(); ++j) {
    u64 o = cls.element_orders[j];
    if (is_pi_number(o, {p}) && o > best) {
      best = o;
      seed = cls.representatives[j];
    }
  }
  GroupRef P = subgroup({seed});
  while (P->order() < target) {
    GroupRef N = normalizer(*P);
    bool grew = false;
    for (const Perm& y : N->elements()) {
      if (P->contains(y)) continue;
      if (!is_pi_number(y.order(), {p})) continue;
      std::vector<Perm> gens = P->generators();
      gens.push_back(y);
      GroupRef bigger = Group::make(degree_, gens);
      if (is_pi_number(bigger->order(), {p})) {
        P = bigger;
        grew = true;
        break;
      }
    }
    if (!grew) throw VerificationError("sylow_subgroup: failed to grow p-subgroup");
  }
  return P;
}

GroupRef Group::center() const {
  std::vector<Perm> found;
  for (const Perm& x : elements()) {
    bool ok = true;
    for (const Perm& g : gens_)
      if (!x.commutes_with(g)) {
        ok = false;
        break;
      }
    if (ok) found.push_back(x);
  }
  return subgroup(found);
}

GroupRef Group::normal_closure(const std::vector<Perm>& elts) const {
  std::vector<Perm> gens;
  Bsgs b = Bsgs::build(degree_, {});
  std::vector<Perm> work = elts;
  for (std::size_t wi = 0; wi < work.size(); ++wi) {
    const Perm x = work[wi];
    if (x.is_identity() || b.contains(x)) continue;
    gens.push_back(x);
    b = Bsgs::build(degree_, gens);
    for (const Perm& g : gens_) work.push_back(x.conjugate_by(g));
  }
  return Group::make(degree_, gens);
}

GroupRef Group::o_p(u64 p) const {
  GroupRef S = sylow_subgroup(p);
  if (S->order() == 1) return S;
  // intersection of all conjugates of S
  GroupRef core = S;
  std::vector<GroupRef> orbit{S};
  std::set<u64> seen;
  auto key_of = [](const Group& g) {
    std::vector<std::string> ks;
    for (const Perm& e : g.elements()) ks.push_back(e.key());
    std::sort(ks.begin(), ks.end());
    u64 h = 1469598103934665603ull;
    for (auto& k : ks) h = fnv1a(k, h);
    return h;
  };
  seen.insert(key_of(*S));
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens_) {
      std::vector<Perm> conj;
      for (const Perm& x : orbit[i]->generators()) conj.push_back(x.conjugate_by(g));
      GroupRef c = Group::make(degree_, conj);
      if (seen.insert(key_of(*c)).second) {
        orbit.push_back(c);
        core = core->intersection(*c);
        if (core->order() == 1) return core;
      }
    }
  }
  return core;
}

GroupRef Group::intersection(const Group& other) const {
  const Group* small = this;
  const Group* big = &other;
  if (small->order() > big->order()) std::swap(small, big);
  std::vector<Perm> found;
  for (const Perm& x : small->elements())
    if (big->contains(x)) found.push_back(x);
  return subgroup(found);
}

GroupRef Group::o_p_power_residue(u64 p) const {
  std::vector<Perm> pelts;
  const ConjugacyClassSet& cls = classes();
  for (int j = 0; j < cls.count(); ++j)
    if (cls.element_orders[j] > 1 && is_pi_number(cls.element_orders[j], {p}))
      pelts.push_back(cls.representatives[j]);
  return normal_closure(pelts);
}

PartDecomposition Group::pi_part(const Perm& g, const std::vector<u64>& pi) {
  u64 o = g.order();
  u64 k = pi_part_of(o, pi);  // pi-part of the order
  u64 m = o / k;
  // u*k + v*m = 1; g_pi = g^(v*m), g_pi' = g^(u*k)
  i64 gg, u, v;
  egcd(static_cast<i64>(k), static_cast<i64>(m), gg, u, v);
  PartDecomposition d;
  d.pi_part = g.power(v * static_cast<i64>(m));
  d.pi_prime_part = g.power(u * static_cast<i64>(k));
  return d;
}

u64 Group::count_pi_elements(const std::vector<u64>& pi) const {
  u64 n = 0;
  const ConjugacyClassSet& cls = classes();
  for (int j = 0; j < cls.count(); ++j)
    if (is_pi_number(cls.element_orders[j], pi)) n += cls.sizes[j];
  return n;
}

bool Group::has_normal_pi_complement(const std::vector<u64>& pi) const {
  std::vector<Perm> regular;
  for (const Perm& x : elements())
    if (pi_part_of(x.order(), pi) == 1) regular.push_back(x);
  GroupRef h = subgroup(regular);
  return h->order() == regular.size();
}

GroupRef Group::o_pi_prime(const std::vector<u64>& pi) const {
  std::vector<Perm> regular;
  for (const Perm& x : elements())
    if (pi_part_of(x.order(), pi) == 1) regular.push_back(x);
  GroupRef h = subgroup(regular);
  if (h->order() != regular.size()) throw Error("o_pi_prime: no normal pi-complement");
  return h;
}

bool Group::is_solvable() const {
  GroupRef d = shared_from_this();
  while (d->order() > 1) {
    std::vector<Perm> comms;
    for (const Perm& a : d->generators())
      for (const Perm& b : d->generators())
        comms.push_back(a.inverse() * b.inverse() * a * b);
    GroupRef next = d->normal_closure(comms);
    if (next->order() == d->order()) return false;
    d = next;
  }
  return true;
}

bool Group::is_pi_separable(const std::vector<u64>& pi) const {
  if (order() == 1) return true;
  auto pi_free = [&](u64 n) {
    for (u64 p : pi)
      if (n % p == 0) return false;
    return true;
  };
  if (is_pi_number(order(), pi) || pi_free(order())) return true;
  // find a minimal normal subgroup via normal closures of class representatives
  GroupRef minimal;
  const ConjugacyClassSet& cls = classes();
  for (int j = 1; j < cls.count(); ++j) {
    GroupRef n = normal_closure({cls.representatives[j]});
    if (n->order() == order()) continue;
    if (!minimal || n->order() < minimal->order()) minimal = n;
  }
  if (!minimal) {
    // G is simple and of mixed order
    return false;
  }
  if (!is_pi_number(minimal->order(), pi) && !pi_free(minimal->order())) return false;
  QuotientResult q = quotient(*minimal);
  return q.quotient->is_pi_separable(pi);
}

std::vector<GroupRef> Group::all_subgroups(u64 cap) const {
  if (order() > 5000) throw Error("all_subgroups: group too large for lattice enumeration");
  std::map<std::string, GroupRef> lat;
  auto key_of = [](const Group& g) {
    std::string s;
    std::vector<std::string> ks;
    for (const Perm& e : g.elements()) ks.push_back(e.key());
    std::sort(ks.begin(), ks.end());
    for (auto& k : ks) s += k;
    return s;
  };
  std::vector<GroupRef> work;
  GroupRef triv = subgroup({});
  lat.emplace(key_of(*triv), triv);
  work.push_back(triv);
  for (const Perm& x : elements()) {
    if (x.is_identity()) continue;
    GroupRef c = subgroup({x});
    auto k = key_of(*c);
    if (!lat.count(k)) {
      lat.emplace(k, c);
      work.push_back(c);
    }
  }
  // join closure
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Perm> gens = work[i]->generators();
      for (const Perm& g : work[j]->generators()) gens.push_back(g);
      GroupRef join = Group::make(degree_, gens);
      auto k = key_of(*join);
      if (!lat.count(k)) {
        lat.emplace(k, join);
        work.push_back(join);
        if (work.size() > cap) throw Error("all_subgroups: lattice cap exceeded");
      }
    }
  }
  std::vector<GroupRef> out;
  for (auto& [k, g] : lat) out.push_back(g);
  std::sort(out.begin(), out.end(), [](const GroupRef& a, const GroupRef& b) {
    return a->order() < b->order();
  });
  return out;
}

std::optional<GroupRef> Group::find_subgroup_of_order(u64 n) const {
  if (order() % n != 0) throw Error("find_subgroup_of_order: n does not divide group order");
  if (n == 1) return subgroup({});
  if (n == order()) return shared_from_this();
  // cheap pass: cyclic subgroups
  for (const Perm& x : elements())
    if (x.order() == n) return subgroup({x});
  // exhaustive pass over the subgroup lattice, deterministic order
  std::vector<GroupRef> cands;
  for (const GroupRef& h : all_subgroups())
    if (h->order() == n) cands.push_back(h);
  if (cands.empty()) return std::nullopt;
  // canonical choice: lexicographically smallest element list
  std::sort(cands.begin(), cands.end(), [](const GroupRef& a, const GroupRef& b) {
    return a->elements() < b->elements();
  });
  return cands.front();
}

int QuotientResult::project(const Perm& g) const {
  auto it = coset_of->find(g.key());
  if (it == coset_of->end()) throw Error("quotient projection: element not in group");
  return it->second;
}

Perm QuotientResult::project_perm(const Perm& g, const Group& N) const {
  (void)N;
  int deg = quotient->degree();
  std::vector<std::uint16_t> img(deg);
  for (int c = 0; c < deg; ++c) img[c] = static_cast<std::uint16_t>(project(coset_reps[c] * g));
  return Perm(std::move(img));
}

QuotientResult Group::quotient(const Group& q) const {
  if (!q.is_subgroup_of(*this)) throw Error("quotient: not a subgroup");
  if (!q.is_normal_in(*this)) throw Error("quotient: subgroup is not normal");
  const std::vector<Perm>& elts = elements();
  const std::vector<Perm>& qelts = q.elements();

  auto coset_of = std::make_shared<std::unordered_map<std::string, int>>();
  coset_of->reserve(elts.size() * 2);
  std::vector<Perm> reps;
  // elements scanned in lex order, so the first member of each right coset Qx
  // is its lex-minimal representative
  for (const Perm& x : elts) {
    if (coset_of->count(x.key())) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (const Perm& s : qelts) coset_of->emplace((s * x).key(), id);
  }
  if (reps.size() * q.order() != order()) throw VerificationError("quotient: coset count mismatch");

  QuotientResult res;
  res.coset_of = coset_of;
  res.coset_reps = reps;
  int deg = static_cast<int>(reps.size());
  std::vector<Perm> qgens;
  for (const Perm& g : gens_) {
    std::vector<std::uint16_t> img(deg);
    for (int c = 0; c < deg; ++c) img[c] = static_cast<std::uint16_t>(coset_of->at((reps[c] * g).key()));
    Perm pg{std::move(img)};
    if (!pg.is_identity()) qgens.push_back(pg);
  }
  res.quotient = Group::make(deg, qgens);
  if (res.quotient->order() != order() / q.order())
    throw VerificationError("quotient: order mismatch");
  return res;
}

std::vector<int> Group::pi_sections(const std::vector<u64>& pi) const {
  const ConjugacyClassSet& cls = classes();
  std::vector<int> sec(cls.count());
  for (int j = 0; j < cls.count(); ++j) {
    PartDecomposition d = pi_part(cls.representatives[j], pi);
    sec[j] = class_of(d.pi_part);
  }
  return sec;
}

}  // namespace psilab
