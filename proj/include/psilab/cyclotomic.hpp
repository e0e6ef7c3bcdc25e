#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "psilab/util.hpp"

namespace psilab {

// An element of the cyclotomic field Q(zeta_e), stored at its minimal
// conductor (never 2 mod 4) over the power basis zeta^0..zeta^{phi(e)-1},
// reduced modulo the e-th cyclotomic polynomial.  Rationals have conductor 1.
class Cyclotomic {
public:
  Cyclotomic() : cond_(1), c_(1, mpq_class(0)) {}
  Cyclotomic(int v) : cond_(1), c_(1, mpq_class(v)) {}          // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpq_class& v) : cond_(1), c_(1, v) {}        // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpz_class& v) : cond_(1), c_(1, mpq_class(v)) {}  // NOLINT

  static Cyclotomic zeta(i64 e, i64 k = 1);  // zeta_e^k

  i64 conductor() const { return cond_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return cond_ == 1; }
  bool is_integer() const;
  mpq_class rational_value() const;  // throws unless rational

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic inverse() const;
  Cyclotomic conjugate() const;
  // Galois substitution zeta_e -> zeta_e^r (requires gcd(r, e) = 1).
  Cyclotomic galois(i64 r) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
  Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
  Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

  bool operator==(const Cyclotomic& rhs) const { return cond_ == rhs.cond_ && c_ == rhs.c_; }
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }
  // total order for canonical sorting: conductor first, then coefficients
  int compare(const Cyclotomic& rhs) const;

  // "c0/c1/...@e"; integer coefficients are plain, fractions print as "a:b"
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

private:
  i64 cond_;
  std::vector<mpq_class> c_;

  void normalize();  // descend to minimal conductor
  static Cyclotomic lifted(const Cyclotomic& v, i64 target);
  std::vector<mpq_class> galois_raw(i64 r) const;

  friend class CycAccumulator;
};

// Accumulates a sum of many terms cheaply: terms are bucketed per conductor
// and merged once at the end.
class CycAccumulator {
public:
  void add(const Cyclotomic& v);
  void add_product(const Cyclotomic& a, const Cyclotomic& b, const mpq_class& scale);
  Cyclotomic result() const;

private:
  std::vector<Cyclotomic> buckets_;  // at most one per conductor, unreduced
};

// phi(e)-degree cyclotomic polynomial data, cached per conductor.
struct ConductorData {
  i64 e;
  int phi;
  std::vector<mpz_class> poly;                    // Phi_e, degree phi, monic
  std::vector<std::vector<mpz_class>> zeta_pow;   // zeta_e^k over the basis, k in [0, e)
  static const ConductorData& get(i64 e);
};

}  // namespace psilab
