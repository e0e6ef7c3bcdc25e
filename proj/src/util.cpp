#include "psilab/util.hpp"

#include <algorithm>
#include <numeric>

namespace psilab {

std::string hex64(u64 h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm_u64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

void egcd(i64 a, i64 b, i64& g, i64& x, i64& y) {
  if (b == 0) {
    g = a;
    x = 1;
    y = 0;
    return;
  }
  i64 g1, x1, y1;
  egcd(b, a % b, g1, x1, y1);
  g = g1;
  x = y1;
  y = x1 - (a / b) * y1;
}

u64 inverse_mod(u64 a, u64 m) {
  i64 g, x, y;
  egcd(static_cast<i64>(a % m), static_cast<i64>(m), g, x, y);
  if (g != 1) throw Error("inverse_mod: not invertible");
  i64 r = x % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> f;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      f.emplace_back(d, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

bool is_prime_power(u64 q, u64& p, int& a) {
  auto f = factorize(q);
  if (f.size() != 1) return false;
  p = f[0].first;
  a = f[0].second;
  return true;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto& [p, e] : factorize(n)) {
    std::size_t sz = ds.size();
    u64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

u64 pi_part_of(u64 n, const std::vector<u64>& pi) {
  u64 r = 1;
  for (u64 p : pi) {
    while (n % p == 0) {
      n /= p;
      r *= p;
    }
  }
  return r;
}

bool is_pi_number(u64 n, const std::vector<u64>& pi) {
  return pi_part_of(n, pi) == n;
}

int padic_val(u64 n, u64 p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw Error("multiplicative_order: gcd(a,m) != 1");
  u64 o = 1, x = a % m;
  while (x != 1) {
    x = mulmod(x, a % m, m);
    ++o;
    if (o > m) throw Error("multiplicative_order: runaway");
  }
  return o;
}

std::string pow_decimal(u64 p, u64 e) {
  std::vector<int> digits{1};
  for (u64 i = 0; i < e; ++i) {
    int carry = 0;
    for (auto& d : digits) {
      long v = static_cast<long>(d) * static_cast<long>(p) + carry;
      d = static_cast<int>(v % 10);
      carry = static_cast<int>(v / 10);
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s += static_cast<char>('0' + *it);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace psilab
