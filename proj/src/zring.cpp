#include "brl/zring.hpp"

#include <stdexcept>

namespace brl {

ZRing::ZRing(int N) : N_(N) {
  if (N < 1) throw std::invalid_argument("ring needs N >= 1");
  if (N + 2 > Monomial::kMaxVars) throw std::invalid_argument("N too large for monomial capacity");
}

void ZRing::check_index(int i) const {
  if (i < 1 || i > N_) throw std::invalid_argument("index out of 1..N");
}

Poly ZRing::z(long k) const {
  // Reduce k to 1..N; each full period adds A - B.
  long q = (k - 1) / N_;
  long r = (k - 1) % N_;
  if (r < 0) {
    r += N_;
    q -= 1;
  }
  Poly base = Poly::variable(nvars(), 2 + static_cast<int>(r));
  if (q != 0) {
    Poly shift = (A() - B()).times_int(Int(q));
    base = base + shift;
  }
  return base;
}

Poly ZRing::weight(long i, long j) const { return A() + z(i) - z(j); }

std::vector<Poly> ZRing::tau_images(int i) const {
  check_index(i);
  std::vector<Poly> im;
  im.reserve(static_cast<size_t>(nvars()));
  im.push_back(A());
  im.push_back(B());
  for (int k = 1; k <= N_; ++k) im.push_back(z(k));
  if (i < N_) {
    std::swap(im[static_cast<size_t>(1 + i)], im[static_cast<size_t>(2 + i)]);
  } else {
    im[static_cast<size_t>(1 + N_)] = z(1) + A() - B();  // z_N -> z_1 + (A-B)
    im[2] = z(N_) - A() + B();                            // z_1 -> z_N - (A-B)
  }
  return im;
}

std::vector<Poly> ZRing::sigma_images() const {
  std::vector<Poly> im;
  im.reserve(static_cast<size_t>(nvars()));
  im.push_back(A());
  im.push_back(B());
  for (int k = 1; k <= N_; ++k) im.push_back(z(k + 1));
  return im;
}

Poly ZRing::tau(int i, const Poly& p) const {
  check_index(i);
  if (i == N_) {
    if (N_ == 1) {
      // tau(1) on one site: z_1 -> z_1, both images collapse; identity.
      return p;
    }
    return sigma(tau(N_ - 1, sigma_inv(p)));
  }
  const int a = 1 + i, b = 2 + i;
  std::vector<Poly::Term> raw;
  raw.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m = t.first;
    int ea = m[a], eb = m[b];
    m.set(a, eb);
    m.set(b, ea);
    raw.emplace_back(m, t.second);
  }
  return Poly::from_terms(nvars(), std::move(raw));
}

Poly ZRing::sigma(const Poly& p) const {
  // z_k -> z_{k+1} for k < N; the z_N exponent becomes a power of z_1 + A - B.
  const Poly wrap = z(1) + A() - B();
  std::vector<Poly> wrap_pows{constant(1)};
  auto wrap_pow = [&](int e) -> const Poly& {
    while (static_cast<int>(wrap_pows.size()) <= e) wrap_pows.push_back(wrap_pows.back() * wrap);
    return wrap_pows[static_cast<size_t>(e)];
  };
  std::map<Monomial, Int, MonomialDesc> acc;
  for (const auto& t : p.terms()) {
    Monomial m;
    m.set(0, t.first[0]);
    m.set(1, t.first[1]);
    for (int k = 1; k < N_; ++k) m.set(2 + k, t.first[1 + k]);
    const int ew = t.first[1 + N_];
    for (const auto& wt : wrap_pow(ew).terms()) {
      Monomial mm = m * wt.first;
      auto [it, inserted] = acc.try_emplace(mm, Int(0));
      it->second += t.second * wt.second;
    }
  }
  return Poly::from_map(nvars(), std::move(acc));
}

Poly ZRing::sigma_inv(const Poly& p) const {
  // z_k -> z_{k-1} for k > 1; the z_1 exponent becomes a power of z_N - A + B.
  const Poly wrap = z(N_) - A() + B();
  std::vector<Poly> wrap_pows{constant(1)};
  auto wrap_pow = [&](int e) -> const Poly& {
    while (static_cast<int>(wrap_pows.size()) <= e) wrap_pows.push_back(wrap_pows.back() * wrap);
    return wrap_pows[static_cast<size_t>(e)];
  };
  std::map<Monomial, Int, MonomialDesc> acc;
  for (const auto& t : p.terms()) {
    Monomial m;
    m.set(0, t.first[0]);
    m.set(1, t.first[1]);
    for (int k = 2; k <= N_; ++k) m.set(1 + k - 1, t.first[1 + k]);
    const int ew = t.first[2];
    for (const auto& wt : wrap_pow(ew).terms()) {
      Monomial mm = m * wt.first;
      auto [it, inserted] = acc.try_emplace(mm, Int(0));
      it->second += t.second * wt.second;
    }
  }
  return Poly::from_map(nvars(), std::move(acc));
}

Poly ZRing::divided_difference(int i, const Poly& p) const {
  check_index(i);
  Poly num = p - tau(i, p);
  if (num.is_zero()) return zero();
  Poly den = (i < N_) ? (z(i) - z(i + 1)) : (z(N_) - z(1) - A() + B());
  try {
    return num.exact_div(den);
  } catch (const DivisionError&) {
    throw std::logic_error("divided difference left a remainder; arithmetic bug");
  }
}

std::pair<int, Poly> ZRing::init_B(const Poly& p) const {
  if (p.is_zero()) throw std::invalid_argument("init_B of zero polynomial");
  const int e = p.degree_in(1);
  std::vector<Poly::Term> raw;
  for (const auto& t : p.terms()) {
    if (t.first[1] == e) {
      Monomial m = t.first;
      m.set(1, 0);
      raw.emplace_back(m, t.second);
    }
  }
  return {e, Poly::from_terms(nvars(), std::move(raw))};
}

Rat ZRing::evaluate(const Poly& p, const Rat& a, const Rat& b, const std::vector<Rat>& zs) const {
  if (static_cast<int>(zs.size()) != N_) throw std::invalid_argument("evaluate needs N z-values");
  std::vector<Rat> point;
  point.reserve(static_cast<size_t>(nvars()));
  point.push_back(a);
  point.push_back(b);
  for (const Rat& v : zs) point.push_back(v);
  return p.evaluate(point);
}

std::string ZRing::var_name(int idx) const {
  if (idx == 0) return "A";
  if (idx == 1) return "B";
  return "z" + std::to_string(idx - 1);
}

std::string ZRing::to_string(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Int c = t.second;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    std::string mono;
    for (int v = 0; v < nvars(); ++v) {
      int e = t.first[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace brl
