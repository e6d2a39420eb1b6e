#include "brl/poly.hpp"

#include <algorithm>
#include <numeric>

namespace brl {

void Poly::check_nvars(int nvars) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw std::invalid_argument("variable count out of range: " + std::to_string(nvars));
}

Poly Poly::constant(int nvars, Int c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial{}, std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int idx) {
  if (idx < 0 || idx >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  Monomial m;
  m.set(idx, 1);
  p.terms_.emplace_back(m, Int(1));
  return p;
}

Poly Poly::monomial(int nvars, const Monomial& m, Int c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

bool Poly::homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().first.degree();
  for (const Term& t : terms_)
    if (t.first.degree() != d) return false;
  return true;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.first[var]));
  return d;
}

Int Poly::coeff(const Monomial& m) const {
  // Descending order: binary search.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return Monomial::cmp(t.first, key) > 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Int(0);
}

Int Poly::content() const {
  Int g(0);
  for (const Term& t : terms_) {
    g = boost::multiprecision::gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, -t.second);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch in +");
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    int c = Monomial::cmp(a->first, b->first);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Int s = a->second + b->second;
      if (s != 0) r.terms_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch in *");
  if (is_zero() || o.is_zero()) return Poly(nvars_);
  // Accumulate into an ordered map; products of sparse inputs stay sparse.
  std::map<Monomial, Int, MonomialDesc> acc;
  const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Poly& big = terms_.size() <= o.terms_.size() ? o : *this;
  for (const Term& s : small.terms_) {
    for (const Term& t : big.terms_) {
      Monomial m = s.first * t.first;
      auto [it, inserted] = acc.try_emplace(m, Int(0));
      it->second += s.second * t.second;
    }
  }
  return from_map(nvars_, std::move(acc));
}

Poly Poly::times_int(const Int& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Int& c) const {
  if (c == 0) return Poly(nvars_);
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  // Multiplying every monomial by a fixed one preserves the ordering.
  return r;
}

Poly Poly::exact_div(const Poly& q) const {
  if (q.is_zero()) throw DivisionError("division by zero polynomial");
  if (nvars_ != q.nvars_) throw std::invalid_argument("variable count mismatch in exact_div");
  std::map<Monomial, Int, MonomialDesc> rem;
  for (const Term& t : terms_) rem.emplace(t.first, t.second);
  const Monomial& qm = q.leading().first;
  const Int& qc = q.leading().second;
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!qm.divides(lead->first))
      throw DivisionError("leading monomial not divisible");
    Int qr, rr;
    boost::multiprecision::divide_qr(lead->second, qc, qr, rr);
    if (rr != 0) throw DivisionError("leading coefficient not divisible");
    Monomial mq = qm.quotient_of(lead->first);
    quot.emplace_back(mq, qr);
    // rem -= (qr * mq) * q
    for (const Term& t : q.terms()) {
      Monomial m = t.first * mq;
      auto [it, inserted] = rem.try_emplace(m, Int(0));
      it->second -= t.second * qr;
      if (it->second == 0) rem.erase(it);
    }
  }
  // Quotient terms were produced in strictly descending order.
  Poly r(nvars_);
  r.terms_ = std::move(quot);
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute needs one image per variable");
  int out_nvars = nvars_;
  if (!images.empty()) out_nvars = images.front().nvars();
  for (const Poly& im : images)
    if (im.nvars() != out_nvars) throw std::invalid_argument("inconsistent image variable counts");

  // Memoized powers of each image, grown on demand.
  std::vector<std::vector<Poly>> pows(images.size());
  auto power = [&](int var, int e) -> const Poly& {
    auto& ladder = pows[static_cast<size_t>(var)];
    if (ladder.empty()) ladder.push_back(Poly::constant(out_nvars, 1));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * images[static_cast<size_t>(var)]);
    return ladder[static_cast<size_t>(e)];
  };

  Poly acc(out_nvars);
  for (const Term& t : terms_) {
    Poly prod = Poly::constant(out_nvars, t.second);
    for (int v = 0; v < nvars_; ++v) {
      int e = t.first[v];
      if (e > 0) prod = prod * power(v, e);
    }
    acc = acc + prod;
  }
  return acc;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate needs one value per variable");
  // Memoized powers per variable.
  std::vector<std::vector<Rat>> pows(point.size());
  auto power = [&](int var, int e) -> const Rat& {
    auto& ladder = pows[static_cast<size_t>(var)];
    if (ladder.empty()) ladder.push_back(Rat(1));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(ladder.back() * point[static_cast<size_t>(var)]);
    return ladder[static_cast<size_t>(e)];
  };
  Rat acc(0);
  for (const Term& t : terms_) {
    Rat prod(t.second);
    for (int v = 0; v < nvars_; ++v) {
      int e = t.first[v];
      if (e > 0) prod *= power(v, e);
    }
    acc += prod;
  }
  return acc;
}

Poly Poly::from_terms(int nvars, std::vector<Term>&& raw) {
  std::map<Monomial, Int, MonomialDesc> acc;
  for (Term& t : raw) {
    auto [it, inserted] = acc.try_emplace(t.first, Int(0));
    it->second += t.second;
  }
  return from_map(nvars, std::move(acc));
}

Poly Poly::from_map(int nvars, std::map<Monomial, Int, MonomialDesc>&& acc) {
  Poly p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

}  // namespace brl
