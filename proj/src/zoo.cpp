#include "psilab/zoo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace psilab {

namespace {

// Irreducible polynomials pinned per prime power (coefficients of x^0..x^{a-1};
// the x^a coefficient is 1).  These fix element naming for all tables.
const std::map<u64, std::vector<int>> kIrreducible = {
    {4, {1, 1}},           // x^2+x+1 over GF(2)
    {8, {1, 1, 0}},        // x^3+x+1
    {16, {1, 1, 0, 0}},    // x^4+x+1
    {32, {1, 0, 1, 0, 0}}, // x^5+x^2+1
    {64, {1, 1, 0, 1, 1, 0}},  // x^6+x^4+x^3+x+1
    {9, {2, 2}},           // x^2+2x+2 over GF(3)
    {27, {1, 2, 0}},       // x^3+2x+1
    {81, {2, 0, 0, 2}},    // x^4+2x^3+2
    {25, {2, 4}},          // x^2+4x+2 over GF(5)
    {49, {3, 6}},          // x^2+6x+3 over GF(7)
};

}  // namespace

GaloisField::GaloisField(u64 q) : q_(q) {
  if (!is_prime_power(q, p_, a_) || q > 81) throw Error("GaloisField: q must be a prime power <= 81");
  int n = static_cast<int>(q);
  int p = static_cast<int>(p_);

  auto digits = [&](int x) {
    std::vector<int> d(a_);
    for (int i = 0; i < a_; ++i) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = a_ - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  };

  std::vector<int> irr;
  if (a_ > 1) {
    auto it = kIrreducible.find(q);
    if (it == kIrreducible.end()) throw Error("GaloisField: no pinned polynomial for q");
    irr = it->second;
  }

  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    auto dx = digits(x);
    std::vector<int> dn(a_);
    for (int i = 0; i < a_; ++i) dn[i] = (p - dx[i]) % p;
    neg_[x] = index(dn);
    for (int y = 0; y < n; ++y) {
      auto dy = digits(y);
      std::vector<int> ds(a_);
      for (int i = 0; i < a_; ++i) ds[i] = (dx[i] + dy[i]) % p;
      add_[x * n + y] = index(ds);
      // polynomial product reduced modulo the pinned irreducible
      std::vector<int> prod(2 * a_ - 1, 0);
      for (int i = 0; i < a_; ++i)
        for (int j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
      for (int k = 2 * a_ - 2; k >= a_; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < a_; ++i)
          prod[k - a_ + i] = ((prod[k - a_ + i] - c * irr[i]) % p + p * p) % p;
      }
      prod.resize(a_);
      mul_[x * n + y] = index(prod);
    }
  }
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (mul_[x * n + y] == 1) inv_[x] = y;
  for (int x = 1; x < n; ++x)
    if (inv_[x] < 0) throw VerificationError("GaloisField: pinned polynomial is not irreducible");

  gen_ = -1;
  for (int x = 1; x < n && gen_ < 0; ++x)
    if (element_order(x) == q_ - 1) gen_ = x;
  if (gen_ < 0) throw VerificationError("GaloisField: no multiplicative generator");
}

int GaloisField::inv(int x) const {
  if (x == 0) throw Error("GaloisField: inverse of zero");
  return inv_[x];
}

u64 GaloisField::element_order(int x) const {
  if (x == 0) throw Error("GaloisField: order of zero");
  u64 o = 1;
  int y = x;
  while (y != 1) {
    y = mul(y, x);
    ++o;
  }
  return o;
}

const GaloisField& GaloisField::get(u64 q) {
  static std::mutex m;
  static std::map<u64, std::unique_ptr<GaloisField>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, std::make_unique<GaloisField>(q)).first;
  return *it->second;
}

namespace {

GroupRef make_sym(int n) {
  if (n < 1) throw Error("sym: n >= 1 required");
  std::vector<Perm> gens;
  int deg = std::max(n, 1);
  if (n >= 2) {
    std::vector<std::uint16_t> t(deg);
    for (int i = 0; i < deg; ++i) t[i] = static_cast<std::uint16_t>(i);
    std::swap(t[0], t[1]);
    gens.emplace_back(t);
  }
  if (n >= 3) {
    std::vector<std::uint16_t> c(deg);
    for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
    gens.emplace_back(c);
  }
  return Group::make(deg, gens, "sym:" + std::to_string(n));
}

GroupRef make_alt(int n) {
  if (n < 1) throw Error("alt: n >= 1 required");
  int deg = std::max(n, 1);
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<std::uint16_t> c3(deg);
    for (int i = 0; i < deg; ++i) c3[i] = static_cast<std::uint16_t>(i);
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    gens.emplace_back(c3);
  }
  if (n >= 4) {
    std::vector<std::uint16_t> g(deg);
    for (int i = 0; i < deg; ++i) g[i] = static_cast<std::uint16_t>(i);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) g[i] = static_cast<std::uint16_t>((i + 1) % n);  // n-cycle, even
    } else {
      for (int i = 1; i < n; ++i) g[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);  // (n-1)-cycle
    }
    gens.emplace_back(g);
  }
  return Group::make(deg, gens, "alt:" + std::to_string(n));
}

GroupRef make_cyclic(int n) {
  if (n < 1) throw Error("cyclic: n >= 1 required");
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<std::uint16_t> c(n);
    for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
    gens.emplace_back(c);
  }
  return Group::make(std::max(n, 1), gens, "cyclic:" + std::to_string(n));
}

GroupRef make_dihedral(int m) {
  if (m < 2 || m % 2 != 0) throw Error("dihedral: parameter is the group order 2n, even and >= 2");
  int n = m / 2;
  if (n == 1) {
    std::vector<std::uint16_t> t{1, 0};
    return Group::make(2, {Perm(t)}, "dihedral:2");
  }
  std::vector<std::uint16_t> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    ref[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return Group::make(n, {Perm(rot), Perm(ref)}, "dihedral:" + std::to_string(m));
}

using Mat2 = std::array<int, 4>;  // row major [[a,b],[c,d]] over GF(q)

GroupRef make_sl2(u64 q, bool projective) {
  u64 p;
  int a;
  if (!is_prime_power(q, p, a) || q < 2 || q > 81) throw Error("sl/psl: q must be a prime power in [2,81]");
  const GaloisField& F = GaloisField::get(q);
  int qi = static_cast<int>(q);

  std::vector<Mat2> mats;
  // upper unipotents over a basis of the field, plus the Weyl element
  int x = 1;
  for (int i = 0; i < a; ++i) {
    mats.push_back({1, x, 0, 1});
    x = F.mul(x, F.generator());
  }
  mats.push_back({0, 1, F.neg(1), 0});

  std::vector<Perm> gens;
  if (!projective) {
    // action on the q^2-1 nonzero row vectors (x,y), index = x*q + y - 1
    int deg = qi * qi - 1;
    for (const Mat2& m : mats) {
      std::vector<std::uint16_t> img(deg);
      for (int vx = 0; vx < qi; ++vx)
        for (int vy = 0; vy < qi; ++vy) {
          if (vx == 0 && vy == 0) continue;
          int wx = F.add(F.mul(vx, m[0]), F.mul(vy, m[2]));
          int wy = F.add(F.mul(vx, m[1]), F.mul(vy, m[3]));
          img[vx * qi + vy - 1] = static_cast<std::uint16_t>(wx * qi + wy - 1);
        }
      gens.emplace_back(img);
    }
    GroupRef g = Group::make(qi * qi - 1, gens, "sl:2," + std::to_string(q));
    u64 expect = q * (q * q - 1);
    if (g->order() != expect) throw VerificationError("sl order mismatch");
    return g;
  }

  // action on the projective line: points [t:1] for t in GF(q) are 0..q-1,
  // the point [1:0] is q
  int deg = qi + 1;
  for (const Mat2& m : mats) {
    std::vector<std::uint16_t> img(deg);
    for (int t = 0; t <= qi; ++t) {
      int vx = (t == qi) ? 1 : t;
      int vy = (t == qi) ? 0 : 1;
      int wx = F.add(F.mul(vx, m[0]), F.mul(vy, m[2]));
      int wy = F.add(F.mul(vx, m[1]), F.mul(vy, m[3]));
      int image = (wy == 0) ? qi : F.mul(wx, F.inv(wy));
      img[t] = static_cast<std::uint16_t>(image);
    }
    gens.emplace_back(img);
  }
  GroupRef g = Group::make(deg, gens, "psl:2," + std::to_string(q));
  u64 expect = q * (q * q - 1) / gcd_u64(2, q - 1);
  if (g->order() != expect) throw VerificationError("psl order mismatch");
  return g;
}

GroupRef make_gl(int n, u64 q) {
  if (n < 1 || n > 3 || q < 2 || q > 9) throw Error("gl: supported range is n <= 3, q <= 9");
  u64 p;
  int a;
  if (!is_prime_power(q, p, a)) throw Error("gl: q must be a prime power");
  const GaloisField& F = GaloisField::get(q);
  int qi = static_cast<int>(q);

  // generators: all elementary transvections E_ij(1) plus diag(gen,1,..,1)
  std::vector<std::vector<int>> mats;
  auto identity_mat = [&] {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto m = identity_mat();
      m[i * n + j] = 1;
      mats.push_back(m);
    }
  {
    auto m = identity_mat();
    m[0] = F.generator();
    mats.push_back(m);
  }

  // action on nonzero row vectors; vector index in base q, minus one
  i64 npts = 1;
  for (int i = 0; i < n; ++i) npts *= qi;
  npts -= 1;
  if (npts > 65535) throw Error("gl: degree too large");
  auto vec_of = [&](i64 idx) {
    std::vector<int> v(n);
    i64 x = idx + 1;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<int>(x % qi);
      x /= qi;
    }
    return v;
  };
  auto idx_of = [&](const std::vector<int>& v) {
    i64 x = 0;
    for (int i = n - 1; i >= 0; --i) x = x * qi + v[i];
    return x - 1;
  };

  std::vector<Perm> gens;
  for (const auto& m : mats) {
    std::vector<std::uint16_t> img(npts);
    for (i64 t = 0; t < npts; ++t) {
      auto v = vec_of(t);
      std::vector<int> w(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[j] = F.add(w[j], F.mul(v[i], m[i * n + j]));
      img[t] = static_cast<std::uint16_t>(idx_of(w));
    }
    Perm pg{img};
    if (!pg.is_identity()) gens.push_back(pg);
  }
  GroupRef g = Group::make(static_cast<int>(npts), gens,
                           "gl:" + std::to_string(n) + "," + std::to_string(q));
  u64 expect = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  u64 qi_pow = 1;
  for (int i = 0; i < n; ++i) {
    expect *= (qn - qi_pow);
    qi_pow *= q;
  }
  if (g->order() != expect) throw VerificationError("gl order mismatch");
  return g;
}

GroupRef construct_atom(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("bad group spec: " + spec);
  std::string family = spec.substr(0, colon);
  std::vector<std::string> params = split(spec.substr(colon + 1), ',');
  auto arg = [&](std::size_t i) {
    if (i >= params.size() || params[i].empty()) throw Error("bad group spec: " + spec);
    return std::stol(params[i]);
  };
  if (family == "sym") return make_sym(static_cast<int>(arg(0)));
  if (family == "alt") return make_alt(static_cast<int>(arg(0)));
  if (family == "cyclic") return make_cyclic(static_cast<int>(arg(0)));
  if (family == "dihedral") return make_dihedral(static_cast<int>(arg(0)));
  if (family == "psl") {
    if (arg(0) != 2) throw Error("psl: only psl:2,q supported");
    return make_sl2(static_cast<u64>(arg(1)), true);
  }
  if (family == "sl") {
    if (arg(0) != 2) throw Error("sl: only sl:2,q supported");
    return make_sl2(static_cast<u64>(arg(1)), false);
  }
  if (family == "gl") return make_gl(static_cast<int>(arg(0)), static_cast<u64>(arg(1)));
  throw Error("unknown group family: " + family);
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  construct(text);  // validates
  return GroupSpec{text};
}

GroupRef direct_product(const Group& a, const Group& b) {
  int deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.generators()) {
    std::vector<std::uint16_t> img(deg);
    for (int i = 0; i < a.degree(); ++i) img[i] = static_cast<std::uint16_t>(g[i]);
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<std::uint16_t>(a.degree() + i);
    gens.emplace_back(img);
  }
  for (const Perm& g : b.generators()) {
    std::vector<std::uint16_t> img(deg);
    for (int i = 0; i < a.degree(); ++i) img[i] = static_cast<std::uint16_t>(i);
    for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<std::uint16_t>(a.degree() + g[i]);
    gens.emplace_back(img);
  }
  std::string spec;
  if (!a.spec_text().empty() && !b.spec_text().empty()) spec = a.spec_text() + "*" + b.spec_text();
  GroupRef g = Group::make(deg, gens, spec);
  if (g->order() != a.order() * b.order()) throw VerificationError("direct product order mismatch");
  return g;
}

GroupRef construct(const std::string& spec_text) {
  std::vector<std::string> parts = split(spec_text, '*');
  GroupRef g = construct_atom(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(*g, *construct_atom(parts[i]));
  return g;
}

}  // namespace psilab
