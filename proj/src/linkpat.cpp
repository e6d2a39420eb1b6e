#include "brl/linkpat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace brl {

namespace {

void check_pos(const Involution& pi, int i) {
  if (i < 1 || i > pi.size()) throw std::invalid_argument("position out of range");
}

// Cyclic successor within 1..N.
int succ(int i, int N) { return i % N + 1; }

}  // namespace

Involution::Involution(int N) : p_(static_cast<size_t>(N) + 1) {
  if (N < 0) throw std::invalid_argument("negative size");
  for (int i = 0; i <= N; ++i) p_[static_cast<size_t>(i)] = i;
  p_[0] = 0;
}

Involution Involution::from_pairing(const std::vector<int>& img) {
  const int N = static_cast<int>(img.size());
  Involution r(N);
  for (int i = 1; i <= N; ++i) r.p_[static_cast<size_t>(i)] = img[static_cast<size_t>(i - 1)];
  for (int i = 1; i <= N; ++i) {
    int j = r.p_[static_cast<size_t>(i)];
    if (j < 1 || j > N || r.p_[static_cast<size_t>(j)] != i)
      throw std::invalid_argument("not an involution pairing");
  }
  return r;
}

Involution Involution::from_chords(int N, const std::vector<std::pair<int, int>>& chords) {
  Involution r(N);
  for (auto [a, b] : chords) {
    if (a < 1 || a > N || b < 1 || b > N || a == b)
      throw std::invalid_argument("bad chord");
    if (!r.is_fixed(a) || !r.is_fixed(b)) throw std::invalid_argument("chord endpoint reused");
    r.p_[static_cast<size_t>(a)] = b;
    r.p_[static_cast<size_t>(b)] = a;
  }
  return r;
}

Involution Involution::parse(const std::string& text, int N) {
  if (text.find('(') != std::string::npos) {
    if (N <= 0) throw std::invalid_argument("cycle notation needs an explicit N");
    std::vector<std::pair<int, int>> chords;
    size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
      if (text[pos] != '(') throw std::invalid_argument("expected '('");
      size_t close = text.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced '('");
      std::string body = text.substr(pos + 1, close - pos - 1);
      for (char& ch : body)
        if (ch == ',') ch = ' ';
      std::istringstream in(body);
      std::vector<int> cyc;
      int v = 0;
      while (in >> v) cyc.push_back(v);
      if (cyc.size() == 2) chords.emplace_back(cyc[0], cyc[1]);
      else if (!cyc.empty()) throw std::invalid_argument("cycles must have length 2");
      pos = close + 1;
    }
    return from_chords(N, chords);
  }
  std::string body = text;
  for (char& ch : body)
    if (ch == ',') ch = ' ';
  std::istringstream in(body);
  std::vector<int> img;
  int v = 0;
  while (in >> v) img.push_back(v);
  if (N > 0 && static_cast<int>(img.size()) != N)
    throw std::invalid_argument("pairing length disagrees with N");
  return from_pairing(img);
}

bool Involution::fixed_point_free() const {
  for (int i = 1; i <= size(); ++i)
    if (is_fixed(i)) return false;
  return true;
}

int Involution::arches() const {
  int a = 0;
  for (int i = 1; i <= size(); ++i)
    if (p_[static_cast<size_t>(i)] > i) ++a;
  return a;
}

std::vector<std::pair<int, int>> Involution::chords() const {
  std::vector<std::pair<int, int>> r;
  for (int i = 1; i <= size(); ++i)
    if (p_[static_cast<size_t>(i)] > i) r.emplace_back(i, p_[static_cast<size_t>(i)]);
  return r;
}

std::vector<int> Involution::fixed_points() const {
  std::vector<int> r;
  for (int i = 1; i <= size(); ++i)
    if (is_fixed(i)) r.push_back(i);
  return r;
}

std::string Involution::cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (auto [a, b] : chords()) {
    out << '(' << a << ' ' << b << ')';
    any = true;
  }
  if (!any) out << "()";
  return out.str();
}

std::string Involution::pairing_string() const {
  std::ostringstream out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out << ',';
    out << p_[static_cast<size_t>(i)];
  }
  return out.str();
}

namespace {

void enumerate_rec(std::vector<int>& img, int N, bool allow_fixed,
                   std::vector<Involution>& out) {
  int i = 1;
  while (i <= N && img[static_cast<size_t>(i)] != 0) ++i;
  if (i > N) {
    std::vector<int> flat(img.begin() + 1, img.end());
    out.push_back(Involution::from_pairing(flat));
    return;
  }
  if (allow_fixed) {
    img[static_cast<size_t>(i)] = i;
    enumerate_rec(img, N, allow_fixed, out);
    img[static_cast<size_t>(i)] = 0;
  }
  for (int j = i + 1; j <= N; ++j) {
    if (img[static_cast<size_t>(j)] != 0) continue;
    img[static_cast<size_t>(i)] = j;
    img[static_cast<size_t>(j)] = i;
    enumerate_rec(img, N, allow_fixed, out);
    img[static_cast<size_t>(i)] = 0;
    img[static_cast<size_t>(j)] = 0;
  }
}

}  // namespace

std::vector<Involution> enumerate_involutions(int N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::vector<int> img(static_cast<size_t>(N) + 1, 0);
  std::vector<Involution> out;
  enumerate_rec(img, N, true, out);
  return out;
}

std::vector<Involution> enumerate_link_patterns(int N) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("link patterns need even N >= 2");
  std::vector<int> img(static_cast<size_t>(N) + 1, 0);
  std::vector<Involution> out;
  enumerate_rec(img, N, false, out);
  return out;
}

bool chords_cross(std::pair<int, int> ab, std::pair<int, int> cd) {
  auto [a, b] = ab;
  auto [c, d] = cd;
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a > c) { std::swap(a, c); std::swap(b, d); }
  return a < c && c < b && b < d;
}

int crossings(const Involution& pi) {
  const auto ch = pi.chords();
  const auto fx = pi.fixed_points();
  int c = 0;
  for (size_t s = 0; s < ch.size(); ++s)
    for (size_t t = s + 1; t < ch.size(); ++t)
      if (chords_cross(ch[s], ch[t])) ++c;
  for (int h : fx)
    for (auto [a, b] : ch)
      if (a < h && h < b) ++c;
  return c;
}

Involution f_act(int i, const Involution& pi) {
  check_pos(pi, i);
  const int N = pi.size();
  const int u = i, v = succ(i, N);
  std::vector<int> img(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) {
    int src = k == u ? v : k == v ? u : k;
    int w = pi(src);
    if (w == u) w = v;
    else if (w == v) w = u;
    img[static_cast<size_t>(k - 1)] = w;
  }
  return Involution::from_pairing(img);
}

Involution rot_act(const Involution& pi) {
  const int N = pi.size();
  std::vector<int> img(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) {
    int src = k == 1 ? N : k - 1;
    img[static_cast<size_t>(k - 1)] = succ(pi(src), N);
  }
  return Involution::from_pairing(img);
}

EAction e_act(int i, const Involution& pi) {
  check_pos(pi, i);
  const int N = pi.size();
  const int u = i, v = succ(i, N);
  if (pi(u) == v) return EAction{pi, true};
  const int a = pi(u), b = pi(v);
  std::vector<int> img(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) img[static_cast<size_t>(k - 1)] = pi(k);
  auto set = [&](int x, int y) {
    img[static_cast<size_t>(x - 1)] = y;
    img[static_cast<size_t>(y - 1)] = x;
  };
  set(u, v);
  if (a != u && b != v) set(a, b);
  else if (a != u) set(a, a);
  else if (b != v) set(b, b);
  return EAction{Involution::from_pairing(img), false};
}

std::optional<Involution> fbar_act(int i, const Involution& pi) {
  Involution r = f_act(i, pi);
  if (crossings(r) == crossings(pi) + 1) return r;
  return std::nullopt;
}

std::optional<EAction> ebar_act(int i, const Involution& pi) {
  EAction r = e_act(i, pi);
  if (crossings(r.pattern) == crossings(pi)) return r;
  return std::nullopt;
}

std::vector<Involution> e_preimages(int i, const Involution& pi) {
  check_pos(pi, i);
  if (!pi.fixed_point_free()) throw std::invalid_argument("e_preimages needs a link pattern");
  const int N = pi.size();
  const int u = i, v = succ(i, N);
  if (pi(u) != v) throw std::invalid_argument("e_preimages needs the little arch (i, i+1)");
  std::vector<Involution> out;
  for (auto [a, b] : pi.chords()) {
    if (a == std::min(u, v) && b == std::max(u, v)) continue;
    for (int swapped = 0; swapped < 2; ++swapped) {
      const int x = swapped ? b : a, y = swapped ? a : b;
      std::vector<int> img(static_cast<size_t>(N));
      for (int k = 1; k <= N; ++k) img[static_cast<size_t>(k - 1)] = pi(k);
      auto set = [&](int s, int t) {
        img[static_cast<size_t>(s - 1)] = t;
        img[static_cast<size_t>(t - 1)] = s;
      };
      set(u, x);
      set(v, y);
      out.push_back(Involution::from_pairing(img));
    }
  }
  return out;
}

BetaPoly BetaPoly::constant(Int c) {
  BetaPoly r;
  r.c_.push_back(std::move(c));
  r.trim();
  return r;
}

BetaPoly BetaPoly::beta() {
  BetaPoly r;
  r.c_ = {Int(0), Int(1)};
  return r;
}

void BetaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BetaPoly BetaPoly::operator-() const {
  BetaPoly r;
  r.c_.reserve(c_.size());
  for (const Int& x : c_) r.c_.push_back(-x);
  return r;
}

BetaPoly BetaPoly::operator+(const BetaPoly& o) const {
  BetaPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < r.c_.size(); ++k) {
    if (k < c_.size()) r.c_[k] += c_[k];
    if (k < o.c_.size()) r.c_[k] += o.c_[k];
  }
  r.trim();
  return r;
}

BetaPoly BetaPoly::operator-(const BetaPoly& o) const { return *this + (-o); }

BetaPoly BetaPoly::operator*(const BetaPoly& o) const {
  BetaPoly r;
  if (c_.empty() || o.c_.empty()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t s = 0; s < c_.size(); ++s)
    for (size_t t = 0; t < o.c_.size(); ++t) r.c_[s + t] += c_[s] * o.c_[t];
  r.trim();
  return r;
}

std::string BetaPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    out << c_[k].str();
    if (k >= 1) out << "*beta";
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

LinCombo<BetaPoly> generator_action(char g, int i, const Involution& pi) {
  LinCombo<BetaPoly> out;
  switch (g) {
    case 'f':
      out.add(f_act(i, pi), BetaPoly::constant(1));
      break;
    case 'r':
      out.add(rot_act(pi), BetaPoly::constant(1));
      break;
    case 'e': {
      EAction r = e_act(i, pi);
      out.add(r.pattern, r.beta ? BetaPoly::beta() : BetaPoly::constant(1));
      break;
    }
    case 'F': {
      if (auto r = fbar_act(i, pi)) out.add(*r, BetaPoly::constant(1));
      break;
    }
    default:
      throw std::invalid_argument("unknown generator kind");
  }
  return out;
}

}  // namespace brl
