#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
//
// The engine is ring-agnostic: a polynomial knows only its variable count.
// Variable naming, the periodic automorphisms and the divided differences of
// the (A, B, z_1..z_N) ring live in zring.hpp.
//
// Monomial order: graded lexicographic. Total degree decides first; ties are
// broken by scanning exponents from the highest variable index down, larger
// exponent wins. With variables listed in increasing order v_0 < v_1 < ...,
// this makes the last-listed variable the most significant one.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct DivisionError : std::runtime_error {
  explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() : e_{} {}

  uint16_t operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  void set(int i, int v) { e_[static_cast<size_t>(i)] = static_cast<uint16_t>(v); }
  void bump(int i, int dv) { e_[static_cast<size_t>(i)] = static_cast<uint16_t>(e_[static_cast<size_t>(i)] + dv); }

  int degree() const {
    int d = 0;
    for (uint16_t x : e_) d += x;
    return d;
  }

  // Unused variable slots are zero on both sides, so the scan needs no nvars.
  static int cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (a.e_[static_cast<size_t>(i)] != b.e_[static_cast<size_t>(i)])
        return a.e_[static_cast<size_t>(i)] < b.e_[static_cast<size_t>(i)] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return cmp(a, b) > 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e_[static_cast<size_t>(i)] = static_cast<uint16_t>(e_[static_cast<size_t>(i)] + o.e_[static_cast<size_t>(i)]);
    return r;
  }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[static_cast<size_t>(i)] > m.e_[static_cast<size_t>(i)]) return false;
    return true;
  }

  // Requires divides(m).
  Monomial quotient_of(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
      r.e_[static_cast<size_t>(i)] = static_cast<uint16_t>(m.e_[static_cast<size_t>(i)] - e_[static_cast<size_t>(i)]);
    return r;
  }

 private:
  std::array<uint16_t, kMaxVars> e_;
};

struct MonomialDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

// Terms are kept strictly descending in the monomial order with no zero
// coefficients; that vector is the canonical form used for equality and
// serialization.
class Poly {
 public:
  using Term = std::pair<Monomial, Int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, Int c);
  static Poly variable(int nvars, int idx);
  static Poly monomial(int nvars, const Monomial& m, Int c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term under the monomial order. Requires a nonzero polynomial.
  const Term& leading() const;

  int degree() const;          // max total degree, -1 for the zero polynomial
  bool homogeneous() const;    // all terms share one total degree (true for 0)
  int degree_in(int var) const;

  Int coeff(const Monomial& m) const;
  Int content() const;         // gcd of coefficients, 0 for the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly times_int(const Int& c) const;
  Poly times_monomial(const Monomial& m, const Int& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact division: returns r with *this == q * r, throws DivisionError when
  // no such r with integer coefficients exists. Classic leading-term
  // elimination; exactness of every intermediate step is forced when the
  // division is exact because the order is multiplicative.
  Poly exact_div(const Poly& q) const;

  // Ring-homomorphic substitution; images[i] replaces variable i and every
  // image must use the same variable count (the result's).
  Poly substitute(const std::vector<Poly>& images) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  // Builds the canonical form from arbitrary (monomial, coeff) pairs.
  static Poly from_terms(int nvars, std::vector<Term>&& raw);
  static Poly from_map(int nvars, std::map<Monomial, Int, MonomialDesc>&& acc);

 private:
  static void check_nvars(int nvars);
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace brl
