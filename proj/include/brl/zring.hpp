#pragma once

// The working ring Z[A, B, z_1..z_N] with the periodic convention
// z_{i+N} = z_i + A - B. Variable slots: 0 = A, 1 = B, 1+i = z_i.
//
// tau(i) for i < N swaps z_i and z_{i+1}; tau(N) is the periodic wrap
// z_N -> z_1 + (A-B), z_1 -> z_N - (A-B). sigma shifts z_i -> z_{i+1} with
// the same wrap, so sigma^N adds A-B to every z.

#include <string>
#include <utility>
#include <vector>

#include "brl/poly.hpp"

namespace brl {

class ZRing {
 public:
  explicit ZRing(int N);

  int N() const { return N_; }
  int nvars() const { return N_ + 2; }

  Poly A() const { return Poly::variable(nvars(), 0); }
  Poly B() const { return Poly::variable(nvars(), 1); }
  // z(k) accepts any integer and reduces through the periodic convention.
  Poly z(long k) const;
  Poly constant(Int c) const { return Poly::constant(nvars(), std::move(c)); }
  Poly zero() const { return Poly::zero(nvars()); }

  // weight(i, j) = A + z_i - z_j, defined for all integers i, j.
  Poly weight(long i, long j) const;

  // Variable images of tau(i) and sigma, for the reference substitution path.
  std::vector<Poly> tau_images(int i) const;
  std::vector<Poly> sigma_images() const;

  // Fast implementations (exponent manipulation; tau(N) runs through
  // sigma . tau(N-1) . sigma^{-1}).
  Poly tau(int i, const Poly& p) const;
  Poly sigma(const Poly& p) const;
  Poly sigma_inv(const Poly& p) const;

  // (p - tau_i p) / (z_i - z_{i+1}), denominator wrapped for i = N.
  // Throws logic_error if the division is inexact (arithmetic bug).
  Poly divided_difference(int i, const Poly& p) const;

  // B-leading form: largest B-exponent and the matching terms with B^e removed.
  std::pair<int, Poly> init_B(const Poly& p) const;

  Rat evaluate(const Poly& p, const Rat& a, const Rat& b, const std::vector<Rat>& zs) const;

  std::string var_name(int idx) const;
  std::string to_string(const Poly& p) const;

 private:
  void check_index(int i) const;
  int N_;
};

}  // namespace brl
