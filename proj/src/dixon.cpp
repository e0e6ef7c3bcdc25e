#include <algorithm>
#include <memory>

#include "psilab/chartab.hpp"

// Dixon-Schneider: split the class algebra over a prime field F_l with
// l = 1 (mod exponent) and l > 2 sqrt(|G|), then lift the eigenvector data to
// exact cyclotomic character values through the root-of-unity multiplicity
// formula.  No floating point anywhere.

namespace psilab {

namespace {

struct ModMatrix {
  int n = 0;
  u64 l = 0;
  std::vector<u64> a;  // row major
  u64& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  u64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// nullspace basis of m over F_l
std::vector<std::vector<u64>> nullspace_mod(ModMatrix m) {
  int n = m.n;
  u64 l = m.l;
  std::vector<int> pivot_of_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pr = -1;
    for (int r = rank; r < n; ++r)
      if (m.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int c = 0; c < n; ++c)
      std::swap(m.a[static_cast<std::size_t>(rank) * n + c],
                m.a[static_cast<std::size_t>(pr) * n + c]);
    u64 inv = inverse_mod(m.at(rank, col), l);
    for (int c = col; c < n; ++c) m.at(rank, c) = mulmod(m.at(rank, c), inv, l);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      u64 f = m.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < n; ++c)
        m.at(r, c) = (m.at(r, c) + l - mulmod(f, m.at(rank, c), l)) % l;
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::vector<u64>> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<u64> v(n, 0);
    v[col] = 1;
    for (int c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = (l - m.at(pivot_of_col[c], col)) % l;
    basis.push_back(std::move(v));
  }
  return basis;
}

// characteristic polynomial by Faddeev-LeVerrier (valid since l > n is prime)
std::vector<u64> char_poly_mod(const ModMatrix& m) {
  int n = m.n;
  u64 l = m.l;
  std::vector<u64> coeff(n + 1, 0);
  coeff[n] = 1;
  ModMatrix M{n, l, std::vector<u64>(static_cast<std::size_t>(n) * n, 0)};
  for (int k = 1; k <= n; ++k) {
    ModMatrix AM{n, l, std::vector<u64>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        u64 f = m.at(i, t);
        if (f == 0) continue;
        for (int j = 0; j < n; ++j) AM.at(i, j) = (AM.at(i, j) + mulmod(f, M.at(t, j), l)) % l;
      }
    for (int i = 0; i < n; ++i) AM.at(i, i) = (AM.at(i, i) + coeff[n - k + 1]) % l;
    u64 tr = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr = (tr + mulmod(m.at(i, t), AM.at(t, i), l)) % l;
    u64 c = mulmod(tr, inverse_mod(static_cast<u64>(k) % l, l), l);
    coeff[n - k] = (l - c) % l;
    M = std::move(AM);
  }
  return coeff;
}

std::vector<u64> poly_roots_mod(const std::vector<u64>& coeff, u64 l) {
  std::vector<u64> roots;
  for (u64 x = 0; x < l; ++x) {
    u64 v = 0;
    for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
      v = (mulmod(v, x, l) + coeff[i]) % l;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

u64 primitive_root_mod(u64 l) {
  std::vector<u64> ps = prime_divisors(l - 1);
  for (u64 a = 2; a < l; ++a) {
    bool ok = true;
    for (u64 r : ps)
      if (powmod(a, (l - 1) / r, l) == 1) {
        ok = false;
        break;
      }
    if (ok) return a;
  }
  throw VerificationError("no primitive root found");
}

using Subspace = std::vector<std::vector<u64>>;  // basis vectors in F_l^k

// Splits the subspace into the eigenspaces of the class matrix M restricted
// to it.  The class matrices commute, so eigenspaces refine consistently.
std::vector<Subspace> split_subspace(const Subspace& basis_in, const ModMatrix& M) {
  int k = M.n;
  u64 l = M.l;
  int d = static_cast<int>(basis_in.size());

  // row-reduce the basis so that d coordinate rows carry an identity block
  Subspace basis = basis_in;
  std::vector<int> pivot_rows;
  {
    int rank = 0;
    for (int col = 0; col < k && rank < d; ++col) {
      int pr = -1;
      for (int r = rank; r < d; ++r)
        if (basis[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(basis[rank], basis[pr]);
      u64 inv = inverse_mod(basis[rank][col], l);
      for (int c = 0; c < k; ++c) basis[rank][c] = mulmod(basis[rank][c], inv, l);
      for (int r = 0; r < d; ++r) {
        if (r == rank) continue;
        u64 f = basis[r][col];
        if (f == 0) continue;
        for (int c = 0; c < k; ++c)
          basis[r][c] = (basis[r][c] + l - mulmod(f, basis[rank][c], l)) % l;
      }
      pivot_rows.push_back(col);
      ++rank;
    }
    if (rank != d) throw VerificationError("dixon: dependent subspace basis");
  }

  // restriction X: M * b_j = sum_r X(r,j) b_r, read off at the pivot rows
  ModMatrix X{d, l, std::vector<u64>(static_cast<std::size_t>(d) * d, 0)};
  for (int b = 0; b < d; ++b) {
    std::vector<u64> image(k, 0);
    for (int row = 0; row < k; ++row) {
      u64 acc = 0;
      for (int c = 0; c < k; ++c)
        if (M.at(row, c) != 0 && basis[b][c] != 0)
          acc = (acc + mulmod(M.at(row, c), basis[b][c], l)) % l;
      image[row] = acc;
    }
    for (int r = 0; r < d; ++r) X.at(r, b) = image[pivot_rows[r]];
  }

  std::vector<u64> roots = poly_roots_mod(char_poly_mod(X), l);
  std::vector<Subspace> out;
  int total_dim = 0;
  for (u64 lam : roots) {
    ModMatrix XmL = X;
    for (int r = 0; r < d; ++r) XmL.at(r, r) = (XmL.at(r, r) + l - lam) % l;
    auto null = nullspace_mod(XmL);
    if (null.empty()) continue;
    Subspace sub;
    for (auto& nv : null) {
      std::vector<u64> v(k, 0);
      for (int b = 0; b < d; ++b)
        if (nv[b] != 0)
          for (int c = 0; c < k; ++c) v[c] = (v[c] + mulmod(nv[b], basis[b][c], l)) % l;
      sub.push_back(std::move(v));
    }
    total_dim += static_cast<int>(sub.size());
    out.push_back(std::move(sub));
  }
  if (total_dim != d)
    throw VerificationError("dixon: restriction not diagonalizable (retry with another split class)");
  return out;
}

}  // namespace

TableRef compute_character_table(GroupRef g) {
  const ConjugacyClassSet& cls = g->classes();
  const int k = cls.count();
  const u64 n = g->order();
  const u64 e = g->exponent();

  u64 l = e + 1;
  while (!(is_prime(l) && static_cast<double>(l) * static_cast<double>(l) > 4.0 * static_cast<double>(n)))
    l += e;

  std::vector<std::vector<Perm>> class_elements(k);
  for (int j = 0; j < k; ++j) {
    std::vector<Perm> queue{cls.representatives[j]};
    std::unordered_map<std::string, bool> seen{{queue[0].key(), true}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Perm x = queue[qi];
      for (const Perm& s : g->generators()) {
        Perm y = x.conjugate_by(s);
        if (seen.emplace(y.key(), true).second) queue.push_back(y);
      }
    }
    class_elements[j] = std::move(queue);
  }

  // class-multiplication matrices M_i[j][t] = #{u in C_i : u^{-1} w_t in C_j},
  // computed lazily: most tables split long before every class is used
  std::vector<std::unique_ptr<ModMatrix>> class_matrix(k);
  auto matrix_for = [&](int i) -> const ModMatrix& {
    if (!class_matrix[i]) {
      auto m = std::make_unique<ModMatrix>();
      m->n = k;
      m->l = l;
      m->a.assign(static_cast<std::size_t>(k) * k, 0);
      for (int t = 0; t < k; ++t) {
        const Perm& wt = cls.representatives[t];
        for (const Perm& u : class_elements[i]) {
          int j = g->class_of(u.inverse() * wt);
          m->at(j, t) = (m->at(j, t) + 1) % l;
        }
      }
      class_matrix[i] = std::move(m);
    }
    return *class_matrix[i];
  };

  std::vector<Subspace> spaces;
  {
    Subspace full;
    for (int i = 0; i < k; ++i) {
      std::vector<u64> ei(k, 0);
      ei[i] = 1;
      full.push_back(std::move(ei));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool all_done = true;
    for (auto& s : spaces)
      if (s.size() != 1) all_done = false;
    if (all_done) break;
    const ModMatrix& M = matrix_for(i);
    std::vector<Subspace> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      for (auto& piece : split_subspace(basis, M)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  for (auto& s : spaces)
    if (s.size() != 1) throw VerificationError("dixon: eigenvalue split incomplete");
  if (static_cast<int>(spaces.size()) != k)
    throw VerificationError("dixon: wrong number of eigenspaces");

  // normalize eigenvectors to v[identity class] = 1
  std::vector<std::vector<u64>> vecs;
  for (auto& s : spaces) {
    std::vector<u64> v = s[0];
    if (v[0] == 0) throw VerificationError("dixon: eigenvector vanishes at identity");
    u64 inv = inverse_mod(v[0], l);
    for (auto& x : v) x = mulmod(x, inv, l);
    vecs.push_back(std::move(v));
  }

  std::vector<int> invcls(k);
  for (int j = 0; j < k; ++j) invcls[j] = g->class_of(cls.representatives[j].inverse());

  u64 root = primitive_root_mod(l);
  u64 z = powmod(root, (l - 1) / e, l);  // primitive e-th root of unity mod l

  // chi mod l on every class; v[j] = |C_j| chi(g_j) / chi(1)
  std::vector<std::vector<u64>> chimod(k, std::vector<u64>(k, 0));
  std::vector<u64> degrees(k, 0);
  for (int t = 0; t < k; ++t) {
    const std::vector<u64>& v = vecs[t];
    u64 s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + mulmod(mulmod(v[j], v[invcls[j]], l), inverse_mod(cls.sizes[j] % l, l), l)) % l;
    if (s == 0) throw VerificationError("dixon: zero norm");
    u64 d2 = mulmod(n % l, inverse_mod(s, l), l);
    u64 deg = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (mulmod(d % l, d % l, l) == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw VerificationError("dixon: no degree square root");
    degrees[t] = deg;
    for (int j = 0; j < k; ++j)
      chimod[t][j] = mulmod(mulmod(deg % l, v[j], l), inverse_mod(cls.sizes[j] % l, l), l);
  }

  // lift to exact cyclotomic values: chi(g_j) = sum_m m_m zeta_o^m with
  // m_m = (1/o) sum_s chi(g_j^s) zeta_o^{-ms}, each m_m in [0, chi(1)]
  auto table = std::make_shared<CharacterTable>();
  table->group = g;
  table->exponent = e;
  for (int t = 0; t < k; ++t) {
    std::vector<Cyclotomic> values(k);
    for (int j = 0; j < k; ++j) {
      u64 o = cls.element_orders[j];
      u64 zo = powmod(z, e / o, l);
      u64 oinv = inverse_mod(o % l, l);
      CycAccumulator val;
      for (u64 m = 0; m < o; ++m) {
        u64 acc = 0;
        for (u64 s = 0; s < o; ++s) {
          int cj = g->class_of_power(j, static_cast<i64>(s));
          u64 zpow = powmod(zo, ((o - m) % o) * s % o, l);
          acc = (acc + mulmod(chimod[t][cj], zpow, l)) % l;
        }
        u64 mult = mulmod(acc, oinv, l);
        if (mult == 0) continue;
        if (mult > degrees[t]) throw VerificationError("dixon: bad multiplicity lift");
        val.add(Cyclotomic::zeta(static_cast<i64>(o), static_cast<i64>(m)) *
                Cyclotomic(static_cast<int>(mult)));
      }
      values[j] = val.result();
    }
    table->irr.emplace_back(g, std::move(values));
  }

  // canonical order: trivial character first, then the value tuple ordered
  // lexicographically (the degree is the first entry, so degree leads)
  ClassFunction triv = ClassFunction::trivial(g);
  std::sort(table->irr.begin(), table->irr.end(),
            [&](const ClassFunction& a, const ClassFunction& b) {
              bool at = a == triv, bt = b == triv;
              if (at != bt) return at;
              for (std::size_t j = 0; j < a.values.size(); ++j) {
                int c = a.values[j].compare(b.values[j]);
                if (c != 0) return c < 0;
              }
              return false;
            });

  table->verify();
  return table;
}

}  // namespace psilab
