#include "psilab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace psilab {

namespace {

// Phi_e as integer polynomial (coefficient list, low degree first, monic).
std::vector<mpz_class> cyclotomic_poly(i64 e, std::map<i64, std::vector<mpz_class>>& cache) {
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  // x^e - 1 divided by the product of Phi_d over proper divisors d
  std::vector<mpz_class> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (u64 d : divisors(static_cast<u64>(e))) {
    if (static_cast<i64>(d) == e) continue;
    std::vector<mpz_class> phi_d = cyclotomic_poly(static_cast<i64>(d), cache);
    // exact division num /= phi_d
    std::vector<mpz_class> q(num.size() - phi_d.size() + 1, 0);
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      mpz_class c = num[k + phi_d.size() - 1];
      q[k] = c;  // phi_d monic
      if (c == 0) continue;
      for (std::size_t j = 0; j < phi_d.size(); ++j) num[k + j] -= c * phi_d[j];
    }
    for (const mpz_class& c : num)
      if (c != 0) throw VerificationError("cyclotomic_poly: division not exact");
    num = std::move(q);
  }
  cache.emplace(e, num);
  return num;
}

std::mutex g_cond_mutex;
std::map<i64, std::shared_ptr<const ConductorData>> g_cond_cache;

}  // namespace

const ConductorData& ConductorData::get(i64 e) {
  {
    std::lock_guard<std::mutex> lock(g_cond_mutex);
    auto it = g_cond_cache.find(e);
    if (it != g_cond_cache.end()) return *it->second;
  }
  auto data = std::make_shared<ConductorData>();
  data->e = e;
  data->phi = static_cast<int>(euler_phi(static_cast<u64>(e)));
  {
    std::map<i64, std::vector<mpz_class>> cache;
    data->poly = cyclotomic_poly(e, cache);
  }
  int phi = data->phi;
  data->zeta_pow.resize(e);
  for (i64 k = 0; k < std::min<i64>(phi, e); ++k) {
    data->zeta_pow[k].assign(phi, 0);
    data->zeta_pow[k][k] = 1;
  }
  for (i64 k = phi; k < e; ++k) {
    // zeta^k = zeta * zeta^{k-1}, reduced by the monic Phi_e
    const auto& prev = data->zeta_pow[k - 1];
    std::vector<mpz_class> cur(phi, 0);
    mpz_class lead = prev[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (lead != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= lead * data->poly[i];
    data->zeta_pow[k] = std::move(cur);
  }
  std::lock_guard<std::mutex> lock(g_cond_mutex);
  auto [it, inserted] = g_cond_cache.emplace(e, std::move(data));
  return *it->second;
}

Cyclotomic Cyclotomic::zeta(i64 e, i64 k) {
  if (e < 1) throw Error("zeta: conductor must be positive");
  k %= e;
  if (k < 0) k += e;
  const ConductorData& cd = ConductorData::get(e);
  Cyclotomic v;
  v.cond_ = e;
  v.c_.assign(cd.phi, mpq_class(0));
  const auto& rep = cd.zeta_pow[k];
  for (int i = 0; i < cd.phi; ++i) v.c_[i] = rep[i];
  v.normalize();
  return v;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  return cond_ == 1 && c_[0].get_den() == 1;
}

mpq_class Cyclotomic::rational_value() const {
  if (cond_ != 1) throw Error("rational_value: not rational (conductor " + std::to_string(cond_) + ")");
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(const Cyclotomic& v, i64 target) {
  if (v.cond_ == target) return v;
  const ConductorData& cd = ConductorData::get(target);
  i64 m = target / v.cond_;
  Cyclotomic r;
  r.cond_ = target;
  r.c_.assign(cd.phi, mpq_class(0));
  for (std::size_t i = 0; i < v.c_.size(); ++i) {
    if (v.c_[i] == 0) continue;
    const auto& rep = cd.zeta_pow[(m * static_cast<i64>(i)) % target];
    for (int j = 0; j < cd.phi; ++j)
      if (rep[j] != 0) r.c_[j] += v.c_[i] * rep[j];
  }
  return r;
}

std::vector<mpq_class> Cyclotomic::galois_raw(i64 r) const {
  const ConductorData& cd = ConductorData::get(cond_);
  std::vector<mpq_class> out(cd.phi, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& rep = cd.zeta_pow[(r * static_cast<i64>(i)) % cond_];
    for (int j = 0; j < cd.phi; ++j)
      if (rep[j] != 0) out[j] += c_[i] * rep[j];
  }
  return out;
}

void Cyclotomic::normalize() {
  // fast path: rational
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    mpq_class v = c_[0];
    v.canonicalize();
    cond_ = 1;
    c_.assign(1, v);
    return;
  }

  for (u64 du : divisors(static_cast<u64>(cond_))) {
    i64 d = static_cast<i64>(du);
    if (d == cond_ || d == 1) continue;
    if (d % 4 == 2) continue;
    // A value lies in Q(zeta_d) iff it is fixed by every sigma_k with
    // k = 1 mod d.  When cond_ = 2 mod 4 and d = cond_/2 the two fields
    // coincide and the rewrite always succeeds.
    bool same_field = (cond_ % 4 == 2 && d == cond_ / 2);
    if (!same_field) {
      bool fixed = true;
      for (i64 k = 1 + d; k < cond_ && fixed; k += d)
        if (gcd_u64(static_cast<u64>(k), static_cast<u64>(cond_)) == 1)
          if (galois_raw(k) != c_) fixed = false;
      if (!fixed) continue;
    }
    // rewrite over the power basis of Q(zeta_d): solve B x = c with columns
    // B_j = lift of zeta_d^j
    const ConductorData& cd = ConductorData::get(cond_);
    const ConductorData& cdd = ConductorData::get(d);
    i64 m = cond_ / d;
    int rows = cd.phi, cols = cdd.phi;
    std::vector<std::vector<mpq_class>> mat(rows, std::vector<mpq_class>(cols + 1, mpq_class(0)));
    for (int j = 0; j < cols; ++j) {
      const auto& rep = cd.zeta_pow[(m * j) % cond_];
      for (int i = 0; i < rows; ++i) mat[i][j] = rep[i];
    }
    for (int i = 0; i < rows; ++i) mat[i][cols] = c_[i];
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
      int pr = -1;
      for (int r = rank; r < rows; ++r)
        if (mat[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(mat[rank], mat[pr]);
      mpq_class inv = 1 / mat[rank][col];
      for (int cc = col; cc <= cols; ++cc) mat[rank][cc] *= inv;
      for (int r = 0; r < rows; ++r) {
        if (r == rank || mat[r][col] == 0) continue;
        mpq_class f = mat[r][col];
        for (int cc = col; cc <= cols; ++cc) mat[r][cc] -= f * mat[rank][cc];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    bool consistent = true;
    for (int r = rank; r < rows; ++r)
      if (mat[r][cols] != 0) consistent = false;
    if (!consistent) {
      if (same_field) throw VerificationError("normalize: even-conductor rewrite failed");
      continue;
    }
    std::vector<mpq_class> sol(cols, mpq_class(0));
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = mat[r][cols];
    cond_ = d;
    c_ = std::move(sol);
    normalize();  // may descend further
    return;
  }
  if (cond_ % 4 == 2) throw VerificationError("normalize: conductor 2 mod 4 survived");
  for (auto& q : c_) q.canonicalize();
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  i64 L = static_cast<i64>(lcm_u64(static_cast<u64>(cond_), static_cast<u64>(rhs.cond_)));
  Cyclotomic a = lifted(*this, L), b = lifted(rhs, L);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  if (cond_ == 1) {
    if (c_[0] == 0) return Cyclotomic();
    Cyclotomic r = rhs;
    for (auto& q : r.c_) q *= c_[0];
    r.normalize();
    return r;
  }
  if (rhs.cond_ == 1) return rhs * *this;
  i64 L = static_cast<i64>(lcm_u64(static_cast<u64>(cond_), static_cast<u64>(rhs.cond_)));
  Cyclotomic a = lifted(*this, L), b = lifted(rhs, L);
  const ConductorData& cd = ConductorData::get(L);
  Cyclotomic r;
  r.cond_ = L;
  r.c_.assign(cd.phi, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_class prod = a.c_[i] * b.c_[j];
      const auto& rep = cd.zeta_pow[static_cast<i64>(i + j) % L];
      for (int t = 0; t < cd.phi; ++t)
        if (rep[t] != 0) r.c_[t] += prod * rep[t];
    }
  }
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("Cyclotomic: inverse of zero");
  if (cond_ == 1) {
    Cyclotomic r;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // solve (this) * x = 1 over the power basis
  const ConductorData& cd = ConductorData::get(cond_);
  int n = cd.phi;
  std::vector<std::vector<mpq_class>> mat(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
  for (int j = 0; j < n; ++j) {
    // column j = coefficients of (this) * zeta^j
    for (int i = 0; i < n; ++i) {
      if (c_[i] == 0) continue;
      const auto& rep = cd.zeta_pow[(i + j) % cond_];
      for (int t = 0; t < n; ++t)
        if (rep[t] != 0) mat[t][j] += c_[i] * rep[t];
    }
  }
  mat[0][n] = 1;
  for (int col = 0, rank = 0; col < n && rank < n; ++col) {
    int pr = -1;
    for (int r = rank; r < n; ++r)
      if (mat[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) throw VerificationError("Cyclotomic: singular multiplication matrix");
    std::swap(mat[rank], mat[pr]);
    mpq_class inv = 1 / mat[rank][col];
    for (int cc = col; cc <= n; ++cc) mat[rank][cc] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || mat[r][col] == 0) continue;
      mpq_class f = mat[r][col];
      for (int cc = col; cc <= n; ++cc) mat[r][cc] -= f * mat[rank][cc];
    }
    ++rank;
  }
  Cyclotomic x;
  x.cond_ = cond_;
  x.c_.assign(n, mpq_class(0));
  for (int i = 0; i < n; ++i) x.c_[i] = mat[i][n];
  x.normalize();
  return x;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (cond_ == 1) return *this;
  return galois(cond_ - 1);
}

Cyclotomic Cyclotomic::galois(i64 r) const {
  if (cond_ == 1) return *this;
  r %= cond_;
  if (r < 0) r += cond_;
  if (gcd_u64(static_cast<u64>(r), static_cast<u64>(cond_)) != 1)
    throw Error("Cyclotomic: galois exponent not coprime to conductor");
  Cyclotomic out;
  out.cond_ = cond_;
  out.c_ = galois_raw(r);
  out.normalize();
  return out;
}

int Cyclotomic::compare(const Cyclotomic& rhs) const {
  if (cond_ != rhs.cond_) return cond_ < rhs.cond_ ? -1 : 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    int c = cmp(c_[i], rhs.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {
std::string coeff_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + ":" + q.get_den().get_str();
}
mpq_class parse_coeff(const std::string& s) {
  auto pos = s.find(':');
  if (pos == std::string::npos) return mpq_class(mpz_class(s));
  return mpq_class(mpz_class(s.substr(0, pos)), mpz_class(s.substr(pos + 1)));
}
}  // namespace

std::string Cyclotomic::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += '/';
    s += coeff_str(c_[i]);
  }
  s += "@" + std::to_string(cond_);
  return s;
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos) throw Error("Cyclotomic::parse: missing conductor: " + text);
  i64 e = std::stoll(text.substr(at + 1));
  if (e < 1) throw Error("Cyclotomic::parse: bad conductor: " + text);
  std::vector<std::string> parts = split(text.substr(0, at), '/');
  const ConductorData& cd = ConductorData::get(e);
  if (static_cast<int>(parts.size()) != cd.phi)
    throw Error("Cyclotomic::parse: wrong coefficient count: " + text);
  Cyclotomic v;
  v.cond_ = e;
  v.c_.resize(cd.phi);
  for (int i = 0; i < cd.phi; ++i) {
    v.c_[i] = parse_coeff(parts[i]);
    v.c_[i].canonicalize();
  }
  v.normalize();
  return v;
}

void CycAccumulator::add(const Cyclotomic& v) {
  if (v.is_zero()) return;
  for (auto& b : buckets_) {
    if (b.cond_ == v.cond_) {
      for (std::size_t i = 0; i < b.c_.size(); ++i) b.c_[i] += v.c_[i];
      return;
    }
  }
  buckets_.push_back(v);
}

void CycAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b, const mpq_class& scale) {
  if (scale == 0 || a.is_zero() || b.is_zero()) return;
  Cyclotomic p = a * b;
  for (auto& q : p.c_) q *= scale;
  add(p);
}

Cyclotomic CycAccumulator::result() const {
  Cyclotomic total;
  if (buckets_.empty()) return total;
  i64 L = 1;
  for (const auto& b : buckets_)
    L = static_cast<i64>(lcm_u64(static_cast<u64>(L), static_cast<u64>(b.cond_)));
  Cyclotomic acc = Cyclotomic::lifted(buckets_[0], L);
  for (std::size_t k = 1; k < buckets_.size(); ++k) {
    Cyclotomic t = Cyclotomic::lifted(buckets_[k], L);
    for (std::size_t i = 0; i < acc.c_.size(); ++i) acc.c_[i] += t.c_[i];
  }
  acc.normalize();
  return acc;
}

}  // namespace psilab
