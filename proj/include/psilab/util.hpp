#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psilab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// All user-facing failures (bad input, violated precondition, cap exceeded).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failures (a verification that must hold did not).
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

inline u64 fnv1a(const void* data, std::size_t n, u64 h = 14695981039346656037ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline u64 fnv1a(const std::string& s, u64 h = 14695981039346656037ull) {
  return fnv1a(s.data(), s.size(), h);
}

std::string hex64(u64 h);

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

// x, y with a*x + b*y = gcd(a, b).
void egcd(i64 a, i64 b, i64& g, i64& x, i64& y);
u64 inverse_mod(u64 a, u64 m);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

bool is_prime(u64 n);
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
bool is_prime_power(u64 q, u64& p, int& a);
u64 euler_phi(u64 n);
std::vector<u64> divisors(u64 n);

// Largest divisor of n supported on the prime set pi.
u64 pi_part_of(u64 n, const std::vector<u64>& pi);
bool is_pi_number(u64 n, const std::vector<u64>& pi);
int padic_val(u64 n, u64 p);

// Multiplicative order of a modulo m (requires gcd(a, m) = 1).
u64 multiplicative_order(u64 a, u64 m);

// Decimal string of p^e (e may be large enough to overflow u64).
std::string pow_decimal(u64 p, u64 e);

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace psilab
