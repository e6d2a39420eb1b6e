#pragma once

// The affine symmetric group as periodic bijections of Z: maps s with
// s(j+N) = s(j)+N, stored by the window of images of 1..N. Elements of the
// group proper have ball sum 0; the rotation j -> j+1 has ball sum N and is
// kept out of group arithmetic by callers.

#include <string>
#include <vector>

#include "brl/linkpat.hpp"

namespace brl {

class AffinePermutation {
 public:
  static AffinePermutation identity(int N);
  // Swaps the residues i and i+1 in every period (i in 1..N, cyclic).
  static AffinePermutation generator(int N, int i);
  // j -> j+1, the one-ball pattern. Not a group element; see ball_sum().
  static AffinePermutation rotation(int N);
  // Validates that the images hit every residue class exactly once.
  static AffinePermutation from_window(std::vector<long long> w);

  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<long long>& window() const { return w_; }
  long long apply(long long j) const;
  long long ball_sum() const;

  AffinePermutation inverse() const;
  // a.then_after(b) = a o b: b acts first.
  friend AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);

  friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
    return a.w_ == b.w_;
  }
  friend bool operator!=(const AffinePermutation& a, const AffinePermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
    return a.w_ < b.w_;
  }

  std::string to_string() const;  // "[w1,w2,...,wN]"
  static AffinePermutation parse(const std::string& text);

 private:
  explicit AffinePermutation(std::vector<long long> w) : w_(std::move(w)) {}
  std::vector<long long> w_;  // images of 1..N
};

// Product f_{i_k}...f_{i_1} for word = [i_1,...,i_k]: word[0] acts first.
AffinePermutation word_element(int N, const std::vector<int>& word);

// The residue permutation p(s): entry i holds p(s)(i), 1-based.
std::vector<int> project(const AffinePermutation& s);

// Conjugation of an involution by p(s).
Involution conj_act(const AffinePermutation& s, const Involution& pi);

// True iff no step acts where the current pattern has a little arch:
// at step l the pattern f_{i_{l-1}}...f_{i_1}.pi must not join i_l, i_l+1.
bool is_tadpole_free(const std::vector<int>& word, const Involution& pi);

// s lies in the groupoid piece from pi to pip: conjugation sends pi to pip
// and s is increasing on every chord-connected pair. Periodicity reduces the
// pair check to the band |i-j| < N: for each i only the nearest partner
// above and the nearest below bind, all shifted pairs follow.
bool groupoid_membership(const AffinePermutation& s, const Involution& pi, const Involution& pip);

// Shortest word moving pi to pip without tadpoles (BFS, lowest index wins
// ties). Existence is guaranteed; the word acts word[0] first.
std::vector<int> tadpole_free_word(const Involution& pi, const Involution& pip);

// The base pattern i <-> i+n for N = 2n.
Involution base_pattern(int N);

// The stabilizer elements U_i and T_i = U_i U_{i+1}^{-1} (indices mod N).
AffinePermutation stab_U(int N, int i);
AffinePermutation stab_T(int N, int i);

struct StabilizerReport {
  struct Item {
    std::string check;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return items.empty() ? false : true;
  }
};

// For the base pattern: (a) each f_i f_{i+n} lies in the stabilizer
// groupoid; (b) over all products of up to max_len generators, groupoid
// membership agrees with expressibility in the subgroup generated by the
// f_i f_{i+n} (bounded-displacement BFS); (c) U_i and T_i stabilize.
StabilizerReport stabilizer_check(int N, int max_len);

}  // namespace brl
