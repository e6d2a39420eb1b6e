#pragma once

// The ranked poset of B-orbits on {M^2 = 0} intersected with the upper
// triangle: orbits are indexed by involutions, the order is rank dominance
// over all intervals, the rank function is the orbit dimension, and the
// covering relations are realized by three local chord moves.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "brl/linkpat.hpp"

namespace brl {

// #{i <= a < b <= j : pi(a) = b}, the number of complete arches inside [i, j].
int rank_interval(const Involution& pi, int i, int j);

// rho <= pi in the closure order: rank dominance on every interval.
bool poset_leq(const Involution& rho, const Involution& pi);

// Orbit dimension. Computed by two formulas that must agree:
//   arches * (arches + half_lines) - crossings
//   arches + #ordered pairs (arch, other curve) - crossings
// (the pair count weights every unordered curve pair containing an arch
// once per arch in it, and each crossing is subtracted once).
int dim_orbit(const Involution& pi);

// Candidate degenerations, no drawing/adjacency filter:
//   1. replace an uncrossed arch pair by the crossed pairing on its 4 points;
//   2. swap a half-line with the near end of an arch not crossing it;
//   3. break an arch that crosses all half-lines into two half-lines.
std::set<Involution> raw_moves(const Involution& pi);

struct PosetRecord {
  int N = 0;
  std::vector<Involution> elements;          // canonical enumeration order
  std::map<Involution, int> dim;
  std::map<Involution, std::set<Involution>> covers;  // pi -> elements covered by pi
};

PosetRecord build_poset(int N, int bound = 8);

struct PosetReport {
  struct Item {
    std::string check;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// (a) transitive closure of covers == leq; (b) raw moves land strictly below
// and contain every cover; (c) dim is a rank function; (d) maximal-dimension
// elements are exactly the noncrossing diagrams with at most one half-line;
// (e) for each k, dimension k(N-k) with <= k arches happens exactly for
// noncrossing diagrams with k arches.
PosetReport verify_poset(int N);

// Hasse diagram, rank-aligned, deterministic node order.
std::string poset_dot(const PosetRecord& rec);

}  // namespace brl
