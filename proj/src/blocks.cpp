#include <algorithm>
#include <map>

#include "psilab/chartab.hpp"

// p-blocks by central-character congruence.  The reduction of Z[zeta_e] to
// characteristic p is pinned as follows: write e = p^a m with p not dividing
// m, pick one irreducible factor h of Phi_m over F_p (degree d = ord of p
// mod m), work in F_p[y]/(h) and send zeta_e to y^s where s inverts p^a
// modulo m.  Any other choice of h permutes blocks consistently.

namespace psilab {

namespace {

using Poly = std::vector<u64>;  // coefficients mod p, low degree first

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  // reduce by the monic modulus
  int dm = static_cast<int>(mod.size()) - 1;
  for (int k = static_cast<int>(c.size()) - 1; k >= dm; --k) {
    u64 f = c[k];
    if (f == 0) continue;
    c[k] = 0;
    for (int i = 0; i < dm; ++i) c[k - dm + i] = (c[k - dm + i] + (p - mod[i] % p) * f) % p;
  }
  c.resize(dm);
  return trim(c);
}

Poly poly_powmod(Poly base, u64 exp, const Poly& mod, u64 p) {
  Poly r{1};
  base = trim(std::move(base));
  while (exp) {
    if (exp & 1) r = poly_mulmod(r, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    int db = static_cast<int>(b.size()) - 1;
    u64 lead_inv = inverse_mod(b.back(), p);
    Poly r = a;
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
      if (r[k] == 0) continue;
      u64 f = mulmod(r[k], lead_inv, p);
      for (int i = 0; i <= db; ++i) r[k - db + i] = (r[k - db + i] + (p - mulmod(f, b[i], p))) % p;
    }
    r = trim(std::move(r));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

Poly poly_divexact(const Poly& a, const Poly& b, u64 p) {
  Poly r = a, q(a.size() - b.size() + 1, 0);
  int db = static_cast<int>(b.size()) - 1;
  u64 lead_inv = inverse_mod(b.back(), p);
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    if (r[k] == 0) continue;
    u64 f = mulmod(r[k], lead_inv, p);
    q[k - db] = f;
    for (int i = 0; i <= db; ++i) r[k - db + i] = (r[k - db + i] + (p - mulmod(f, b[i], p))) % p;
  }
  return trim(q);
}

// deterministic-with-seed linear congruential source
struct Lcg {
  u64 s;
  u64 next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 11;
  }
};

// one irreducible degree-d factor of the squarefree polynomial f over F_p
// (all its irreducible factors have degree d); Cantor-Zassenhaus with a
// seeded source so runs are reproducible
Poly equal_degree_factor(Poly f, int d, u64 p, Lcg& rng) {
  f = trim(std::move(f));
  while (static_cast<int>(f.size()) - 1 > d) {
    int n = static_cast<int>(f.size()) - 1;
    Poly r(n);
    for (int i = 0; i < n; ++i) r[i] = rng.next() % p;
    r = trim(std::move(r));
    if (r.size() <= 1) continue;
    Poly g;
    if (p == 2) {
      // trace map r + r^2 + ... + r^{2^{d-1}}
      Poly t = r, acc = r;
      for (int i = 1; i < d; ++i) {
        t = poly_mulmod(t, t, f, p);
        acc.resize(std::max(acc.size(), t.size()), 0);
        for (std::size_t j = 0; j < t.size(); ++j) acc[j] = (acc[j] + t[j]) % 2;
      }
      g = poly_gcd(f, trim(std::move(acc)), p);
    } else {
      u64 pd = 1;
      for (int i = 0; i < d; ++i) {
        if (pd > (1ull << 62) / p) throw Error("blocks: field too large");
        pd *= p;
      }
      Poly e = poly_powmod(r, (pd - 1) / 2, f, p);
      if (e.empty())
        g = poly_gcd(f, r, p);
      else {
        e[0] = (e[0] + p - 1) % p;
        g = poly_gcd(f, trim(std::move(e)), p);
      }
    }
    if (g.size() <= 1 || g.size() == f.size()) continue;
    Poly other = poly_divexact(f, g, p);
    f = (g.size() <= other.size()) ? std::move(g) : std::move(other);
  }
  // normalize monic
  u64 inv = inverse_mod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

struct ResidueField {
  u64 p;
  int d;
  Poly h;                      // irreducible modulus, monic, degree d
  std::vector<Poly> y_pow;     // y^k mod h for k in [0, m)
};

}  // namespace

int BlockDistribution::principal() const { return block_of[0]; }

const BlockDistribution& CharacterTable::blocks(u64 p) const {
  {
    std::lock_guard<std::mutex> lock(blocks_mutex_);
    auto it = blocks_cache_.find(p);
    if (it != blocks_cache_.end()) return *it->second;
  }
  if (!is_prime(p)) throw Error("blocks: p must be prime");

  auto dist = std::make_shared<BlockDistribution>();
  dist->p = p;
  const int k = irr_count();
  const auto& cls = group->classes();

  if (group->order() % p != 0) {
    // every character alone in a defect-zero block
    dist->block_of.resize(k);
    for (int i = 0; i < k; ++i) dist->block_of[i] = i;
    dist->defect.assign(k, 0);
  } else {
    u64 e = exponent;
    int a = padic_val(e, p);
    u64 m = e;
    for (int i = 0; i < a; ++i) m /= p;

    // residue field from one irreducible factor of Phi_m mod p
    ResidueField F;
    F.p = p;
    F.d = static_cast<int>(m == 1 ? 1 : multiplicative_order(p % m, m));
    {
      const ConductorData& cd = ConductorData::get(static_cast<i64>(m));
      Poly phim(cd.poly.size());
      for (std::size_t i = 0; i < cd.poly.size(); ++i) {
        mpz_class c = cd.poly[i] % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        phim[i] = c.get_ui();
      }
      if (m == 1)
        F.h = {0, 1};  // y, so the image of zeta_1 is 1 via y^0
      else {
        Lcg rng{group->generator_hash() ^ (p * 0x9e3779b97f4a7c15ull)};
        F.h = equal_degree_factor(phim, F.d, p, rng);
      }
      F.y_pow.resize(std::max<u64>(m, 1));
      F.y_pow[0] = Poly{1};
      for (u64 t = 1; t < m; ++t) F.y_pow[t] = poly_mulmod(F.y_pow[t - 1], Poly{0, 1}, F.h, p);
    }
    u64 pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    u64 s = (m == 1) ? 0 : inverse_mod(pa % m, m);

    // image of a cyclotomic integer under zeta_e -> y^s
    auto reduce = [&](const Cyclotomic& v) -> Poly {
      i64 cond = v.conductor();
      u64 step = (m == 1) ? 0 : (s * ((e / static_cast<u64>(cond)) % m)) % m;
      Poly out;
      for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
        const mpq_class& q = v.coeffs()[i];
        if (q.get_den() != 1) throw VerificationError("blocks: central character not integral");
        mpz_class c = q.get_num() % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        u64 cc = c.get_ui();
        if (cc == 0) continue;
        const Poly& ypk = F.y_pow[(step * i) % std::max<u64>(m, 1)];
        out.resize(std::max(out.size(), ypk.size()), 0);
        for (std::size_t j = 0; j < ypk.size(); ++j) out[j] = (out[j] + cc * ypk[j]) % p;
      }
      return trim(std::move(out));
    };

    // central characters omega(K_j) = |K_j| chi(g_j) / chi(1), reduced
    std::map<std::string, int> block_key;
    dist->block_of.resize(k);
    for (int i = 0; i < k; ++i) {
      Cyclotomic dinv = Cyclotomic(irr[i].values[0].rational_value()).inverse();
      std::string key;
      for (int j = 0; j < cls.count(); ++j) {
        Cyclotomic omega =
            irr[i].values[j] * dinv * Cyclotomic(mpz_class(static_cast<unsigned long>(cls.sizes[j])));
        Poly img = reduce(omega);
        key += std::to_string(img.size());
        key += ':';
        for (u64 c : img) {
          key += std::to_string(c);
          key += ',';
        }
        key += ';';
      }
      auto [it, inserted] = block_key.emplace(key, static_cast<int>(block_key.size()));
      dist->block_of[i] = it->second;
    }
    int nblocks = static_cast<int>(block_key.size());
    // defect: v_p(|G|) - min over the block of v_p(chi(1))
    int vg = padic_val(group->order(), p);
    dist->defect.assign(nblocks, 0);
    std::vector<int> minh(nblocks, vg + 1);
    for (int i = 0; i < k; ++i) {
      mpz_class d = degree(i);
      int v = 0;
      while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        d /= static_cast<long>(p);
        ++v;
      }
      minh[dist->block_of[i]] = std::min(minh[dist->block_of[i]], v);
    }
    for (int b = 0; b < nblocks; ++b) dist->defect[b] = vg - minh[b];
  }

  std::lock_guard<std::mutex> lock(blocks_mutex_);
  auto [it, inserted] = blocks_cache_.emplace(p, std::move(dist));
  return *it->second;
}

}  // namespace psilab
