#pragma once

// Involutions of {1..N} as chord diagrams: arches for 2-cycles, half-lines
// for fixed points. Fixed-point-free involutions are the link patterns that
// span the Brauer-algebra representation; general involutions index B-orbits.
//
// All positions are 1-based. Generator indices are cyclic: index N acts
// through the pair (N, 1).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brl/poly.hpp"

namespace brl {

class Involution {
 public:
  Involution() = default;
  explicit Involution(int N);  // identity (all points fixed)

  // img[k] = pi(k+1); values 1-based. Validates pi(pi(i)) = i.
  static Involution from_pairing(const std::vector<int>& img);

  // Chords given as (a, b) pairs; everything unmentioned is fixed.
  static Involution from_chords(int N, const std::vector<std::pair<int, int>>& chords);

  // Accepts cycle notation "(1 3)(2 4)" (N required) and the compact pairing
  // form "3,4,1,2" (N optional, must match when given).
  static Involution parse(const std::string& text, int N = 0);

  int size() const { return static_cast<int>(p_.size()) - 1; }
  int operator()(int i) const { return p_[static_cast<size_t>(i)]; }
  bool is_fixed(int i) const { return p_[static_cast<size_t>(i)] == i; }
  bool fixed_point_free() const;

  int arches() const;
  int half_lines() const { return size() - 2 * arches(); }
  std::vector<std::pair<int, int>> chords() const;    // (a,b) with a<b, sorted
  std::vector<int> fixed_points() const;

  std::string cycle_string() const;    // "(1 3)(2 4)", "()" for the identity
  std::string pairing_string() const;  // "3,4,1,2"

  friend bool operator==(const Involution& a, const Involution& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Involution& a, const Involution& b) { return a.p_ != b.p_; }
  friend bool operator<(const Involution& a, const Involution& b) { return a.p_ < b.p_; }

 private:
  std::vector<int> p_;  // size N+1, p_[0] = 0
};

// Lexicographic on the pairing array (the canonical table order).
std::vector<Involution> enumerate_involutions(int N);
std::vector<Involution> enumerate_link_patterns(int N);  // throws on odd N

// Crossing pairs of curves: two arches with interleaved endpoints
// a < c < b < d, or a half-line strictly under an arch. For link patterns
// this count is invariant under rotation.
int crossings(const Involution& pi);
bool chords_cross(std::pair<int, int> ab, std::pair<int, int> cd);

// f_i: conjugation by the transposition (i, i+1 cyclically).
Involution f_act(int i, const Involution& pi);

// r: rotation, (r.pi)(i+1) = pi(i)+1 with indices mod N.
Involution rot_act(const Involution& pi);

// e_i on a general involution. When pi pairs i with i+1 the action is the
// scalar beta (beta flag set, pattern returned unchanged); otherwise the
// result pairs (i, i+1) and reconnects pi(i) with pi(i+1), where a fixed
// endpoint stays a half-line on the other side.
struct EAction {
  Involution pattern;
  bool beta = false;
};
EAction e_act(int i, const Involution& pi);

// Degenerate (beta = 2) actions: the crossing-graded parts.
// fbar_i keeps f_i exactly when it raises the crossing number by one,
// which is the no-crossing-no-tadpole case at (i, i+1). ebar_i keeps e_i
// exactly when the crossing number is preserved. The full degenerate
// relation list closes only with both truncations in place.
std::optional<Involution> fbar_act(int i, const Involution& pi);
std::optional<EAction> ebar_act(int i, const Involution& pi);

// All pi' != pi with e_i.pi' = pi, for a link pattern with pi(i) = i+1
// (cyclically). Exactly 2(n-1) results, in pairs {pi', f_i.pi'}.
std::vector<Involution> e_preimages(int i, const Involution& pi);

// Formal linear combination of involutions. Coeff needs +, unary -, ==,
// and is_zero(); zero coefficients are never stored.
template <class Coeff>
class LinCombo {
 public:
  void add(const Involution& pat, const Coeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(pat);
    if (it == terms_.end()) {
      terms_.emplace(pat, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  LinCombo& operator+=(const LinCombo& o) {
    for (const auto& [pat, c] : o.terms_) add(pat, c);
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Involution, Coeff>& terms() const { return terms_; }

  friend bool operator==(const LinCombo& a, const LinCombo& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinCombo& a, const LinCombo& b) { return !(a == b); }

 private:
  std::map<Involution, Coeff> terms_;
};

// Dense integer polynomials in the single formal variable beta; the scalar
// domain of the generic Brauer relation checker.
class BetaPoly {
 public:
  BetaPoly() = default;
  static BetaPoly constant(Int c);
  static BetaPoly beta();

  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }

  BetaPoly operator-() const;
  BetaPoly operator+(const BetaPoly& o) const;
  BetaPoly operator-(const BetaPoly& o) const;
  BetaPoly operator*(const BetaPoly& o) const;

  friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const BetaPoly& a, const BetaPoly& b) { return a.c_ != b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> c_;  // c_[k] multiplies beta^k; no trailing zeros
};

// g in {'f', 'e', 'F' (fbar), 'r'}; i is ignored for 'r'. The e_i tadpole
// case carries the formal beta coefficient.
LinCombo<BetaPoly> generator_action(char g, int i, const Involution& pi);

}  // namespace brl
