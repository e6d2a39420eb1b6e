#include "brl/ratfun.hpp"

#include <stdexcept>
#include <utility>

namespace brl {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  if (num_.nvars() != den_.nvars()) throw std::invalid_argument("variable count mismatch");
}

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.nvars(), 1)) {}

RatFun RatFun::constant(int nvars, Int c) {
  return RatFun(Poly::constant(nvars, std::move(c)));
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.num_.is_zero()) throw DivisionError("division by the zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

Rat RatFun::evaluate(const std::vector<Rat>& point) const {
  Rat d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

}  // namespace brl
