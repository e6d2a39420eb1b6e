#include "brl/orbit_poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace brl {

int rank_interval(const Involution& pi, int i, int j) {
  if (i < 1 || j > pi.size() || i >= j) throw std::invalid_argument("need 1 <= i < j <= N");
  int r = 0;
  for (int a = i; a <= j; ++a) {
    int b = pi(a);
    if (a < b && b <= j) ++r;
  }
  return r;
}

bool poset_leq(const Involution& rho, const Involution& pi) {
  const int N = pi.size();
  if (rho.size() != N) throw std::invalid_argument("size mismatch");
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      if (rank_interval(pi, i, j) < rank_interval(rho, i, j)) return false;
  return true;
}

int dim_orbit(const Involution& pi) {
  const int a = pi.arches();
  const int h = pi.half_lines();
  const int c = crossings(pi);
  const int by_crossings = a * (a + h) - c;

  // Second route: the pair statistic. Ordered pairs (arch, any other curve),
  // each crossing subtracted once.
  int pairs = 0;
  const auto ch = pi.chords();
  const int curves = a + h;
  for (int k = 0; k < static_cast<int>(ch.size()); ++k) pairs += curves - 1;
  const int by_pairs = a + pairs - c;

  if (by_crossings != by_pairs) throw std::logic_error("orbit dimension formulas disagree");
  return by_crossings;
}

std::set<Involution> raw_moves(const Involution& pi) {
  const int N = pi.size();
  std::set<Involution> out;
  const auto ch = pi.chords();
  const auto fx = pi.fixed_points();

  // Move 1: cross an uncrossed arch pair on its own 4 endpoints.
  for (size_t s = 0; s < ch.size(); ++s)
    for (size_t t = s + 1; t < ch.size(); ++t) {
      if (chords_cross(ch[s], ch[t])) continue;
      std::vector<int> pts = {ch[s].first, ch[s].second, ch[t].first, ch[t].second};
      std::sort(pts.begin(), pts.end());
      auto rest = ch;
      rest.erase(rest.begin() + static_cast<long>(t));
      rest.erase(rest.begin() + static_cast<long>(s));
      rest.emplace_back(pts[0], pts[2]);
      rest.emplace_back(pts[1], pts[3]);
      out.insert(Involution::from_chords(N, rest));
    }

  // Move 2: slide an arch end onto a half-line it does not cross, leaving a
  // half-line at the vacated near end.
  for (int h : fx)
    for (size_t s = 0; s < ch.size(); ++s) {
      auto [a, b] = ch[s];
      if (a < h && h < b) continue;
      auto rest = ch;
      rest.erase(rest.begin() + static_cast<long>(s));
      if (h < a)
        rest.emplace_back(h, b);
      else
        rest.emplace_back(a, h);
      out.insert(Involution::from_chords(N, rest));
    }

  // Move 3: break an arch crossing every half-line into two half-lines.
  for (size_t s = 0; s < ch.size(); ++s) {
    auto [a, b] = ch[s];
    bool crosses_all = true;
    for (int h : fx)
      if (!(a < h && h < b)) {
        crosses_all = false;
        break;
      }
    if (!crosses_all) continue;
    auto rest = ch;
    rest.erase(rest.begin() + static_cast<long>(s));
    out.insert(Involution::from_chords(N, rest));
  }
  return out;
}

PosetRecord build_poset(int N, int bound) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  if (N > bound) throw std::invalid_argument("N exceeds the configured poset bound");
  PosetRecord rec;
  rec.N = N;
  rec.elements = enumerate_involutions(N);
  for (const auto& pi : rec.elements) rec.dim.emplace(pi, dim_orbit(pi));
  for (const auto& pi : rec.elements) {
    std::set<Involution> cov;
    const int dpi = rec.dim.at(pi);
    for (const auto& rho : rec.elements) {
      if (rec.dim.at(rho) != dpi - 1 || !poset_leq(rho, pi)) continue;
      bool between = false;
      for (const auto& sig : rec.elements) {
        if (sig == pi || sig == rho) continue;
        int ds = rec.dim.at(sig);
        if (ds <= dpi - 1 || ds >= dpi) continue;  // vacuous at drop 1, kept for shape
        if (poset_leq(rho, sig) && poset_leq(sig, pi)) {
          between = true;
          break;
        }
      }
      if (!between) cov.insert(rho);
    }
    rec.covers.emplace(pi, std::move(cov));
  }
  return rec;
}

namespace {

std::map<Involution, std::set<Involution>> down_sets(const PosetRecord& rec) {
  std::map<Involution, std::set<Involution>> down;
  // Process by increasing dimension so covered elements are already done.
  std::vector<Involution> order = rec.elements;
  std::sort(order.begin(), order.end(), [&](const Involution& x, const Involution& y) {
    int dx = rec.dim.at(x), dy = rec.dim.at(y);
    return dx != dy ? dx < dy : x < y;
  });
  for (const auto& pi : order) {
    std::set<Involution> d = {pi};
    for (const auto& rho : rec.covers.at(pi)) {
      const auto& sub = down.at(rho);
      d.insert(sub.begin(), sub.end());
    }
    down.emplace(pi, std::move(d));
  }
  return down;
}

}  // namespace

PosetReport verify_poset(int N) {
  PosetRecord rec = build_poset(N);
  PosetReport rep;
  auto add = [&](const std::string& name, bool pass) { rep.items.push_back({name, pass}); };

  const auto down = down_sets(rec);

  bool closure_ok = true;
  for (const auto& pi : rec.elements)
    for (const auto& rho : rec.elements) {
      bool reach = down.at(pi).count(rho) > 0;
      if (reach != poset_leq(rho, pi)) closure_ok = false;
    }
  add("transitive closure of covers equals rank-dominance order", closure_ok);

  bool moves_below = true, covers_are_moves = true;
  for (const auto& pi : rec.elements) {
    const auto mv = raw_moves(pi);
    for (const auto& mu : mv)
      if (mu == pi || !poset_leq(mu, pi)) moves_below = false;
    for (const auto& rho : rec.covers.at(pi))
      if (mv.count(rho) == 0) covers_are_moves = false;
  }
  add("raw moves land strictly below", moves_below);
  add("every cover is a raw move", covers_are_moves);

  bool rank_ok = true;
  int minima = 0;
  for (const auto& pi : rec.elements) {
    for (const auto& rho : rec.covers.at(pi))
      if (rec.dim.at(rho) != rec.dim.at(pi) - 1) rank_ok = false;
    bool minimal = true;
    for (const auto& other : rec.elements)
      if (other != pi && poset_leq(other, pi)) minimal = false;
    if (minimal) {
      ++minima;
      if (!(pi == Involution(N)) || rec.dim.at(pi) != 0) rank_ok = false;
    }
    if (rec.dim.at(pi) > 0 && rec.covers.at(pi).empty()) rank_ok = false;
  }
  add("dim is a rank function with unique minimum at the identity", rank_ok && minima == 1);

  const int maxdim = (N * N) / 4;
  bool max_ok = true;
  for (const auto& pi : rec.elements) {
    bool top = rec.dim.at(pi) == maxdim;
    bool nc = crossings(pi) == 0 && pi.half_lines() <= 1;
    if (rec.dim.at(pi) > maxdim || top != nc) max_ok = false;
  }
  add("maximal dimension is hit exactly by noncrossing, at most one half-line", max_ok);

  bool k_ok = true;
  for (int k = 0; k <= N / 2; ++k) {
    for (const auto& pi : rec.elements) {
      if (pi.arches() > k) continue;
      bool top = rec.dim.at(pi) == k * (N - k);
      bool want = crossings(pi) == 0 && pi.arches() == k;
      if (rec.dim.at(pi) > k * (N - k) || top != want) k_ok = false;
    }
  }
  add("dimension k(N-k) within <= k arches is exactly noncrossing with k arches", k_ok);

  return rep;
}

std::string poset_dot(const PosetRecord& rec) {
  std::ostringstream out;
  out << "digraph orbit_poset {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  std::map<Involution, size_t> id;
  for (size_t k = 0; k < rec.elements.size(); ++k) id.emplace(rec.elements[k], k);
  for (size_t k = 0; k < rec.elements.size(); ++k) {
    const auto& pi = rec.elements[k];
    out << "  n" << k << " [label=\"" << pi.cycle_string() << "\\ndim " << rec.dim.at(pi)
        << "\"];\n";
  }
  int maxdim = 0;
  for (const auto& [pi, d] : rec.dim) maxdim = std::max(maxdim, d);
  for (int d = 0; d <= maxdim; ++d) {
    out << "  { rank=same;";
    for (size_t k = 0; k < rec.elements.size(); ++k)
      if (rec.dim.at(rec.elements[k]) == d) out << " n" << k << ';';
    out << " }\n";
  }
  for (size_t k = 0; k < rec.elements.size(); ++k)
    for (const auto& rho : rec.covers.at(rec.elements[k]))
      out << "  n" << id.at(rho) << " -> n" << k << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace brl
