#pragma once

// Rational functions as unreduced num/den pairs. No GCD normalization is
// ever applied; equality means num1*den2 == num2*den1.

#include <string>
#include <vector>

#include "brl/poly.hpp"

namespace brl {

class RatFun {
 public:
  RatFun() = default;
  RatFun(Poly num, Poly den);
  // Embeds a polynomial with denominator 1.
  explicit RatFun(Poly num);

  static RatFun constant(int nvars, Int c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  // Throws DivisionError when o is the zero function.
  RatFun operator/(const RatFun& o) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // Throws PoleError when the denominator vanishes at the point.
  Rat evaluate(const std::vector<Rat>& point) const;

 private:
  Poly num_, den_;
};

}  // namespace brl
