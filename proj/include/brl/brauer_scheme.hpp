#pragma once

// The quotient algebra of N-periodic upper triangular matrices by the ideal
// generated by the N-th power of the shift. A strictly upper triangular
// element is determined by its entries in the window 1 <= i <= N,
// i < j < i+N. Entries at or beyond (i, i+N) die in the quotient, but the
// (i, i+N) entry of the *square* of such an element survives as
// sum_{i<k<i+N} M_{ik} M_{k,i+N}; these N superdiagonal squares pair up and
// read off the link pattern of a generic point.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brl/linkpat.hpp"
#include "brl/poly.hpp"

namespace brl {

// Superdiagonal squares that fail to pair into a link pattern.
struct NonGenericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strictly upper triangular element of the quotient. Only window positions
// are stored; every index pair is normalized periodically, (i, j) being the
// same entry as (i+N, j+N).
class BandMatrix {
 public:
  BandMatrix() = default;
  explicit BandMatrix(int N);

  int N() const { return n_; }
  bool is_zero() const { return entries_.empty(); }

  // Reading at or below the diagonal gives 0; reading at or beyond the
  // (i, i+N) off-band throws (the quotient kills those entries); writing is
  // allowed on window positions only.
  Rat get(long i, long j) const;
  void set(long i, long j, const Rat& value);

  // Normalized window entries (1 <= i <= N, i < j < i+N), zero-free.
  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  bool operator==(const BandMatrix& other) const = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, Rat> entries_;
};

// The square of a band matrix: the in-window part is again a band matrix;
// superdiag[i-1] is the well-defined shadow of the (i, i+N) entry.
struct SquareResult {
  BandMatrix inside;
  std::vector<Rat> superdiag;
};

SquareResult square(const BandMatrix& M);

// The 0/1 matrix of a fixed-point-free involution: a 1 at (i, lift of
// pi(i)) for every i, hence 2n window entries.
BandMatrix underline(const Involution& pi);

// Generic point built from a partially defined permutation rho (1-based
// images, 0 marks an undefined value) and one seed per row: the entry at
// (i, lift of rho(i)) is seeds[i-1]. rho must be injective, self-map-free,
// and compatible (rho(rho(i)) = i whenever both are defined); seeds must be
// nonzero. rho_prime pairs each move of rho that lands inside the upper
// triangle (rho(i) > i) and fixes everything else, so its strict upper
// triangle has entries exactly where the upper triangular part of M does; on
// involutions this is the promotion of each leftward move to a
// transposition. Construction asserts that the superdiagonal square at i is
// nonzero
// exactly when rho(i) and rho(rho(i)) are both defined, and that equal
// nonzero values occur only at {i, rho(i)}; a seed list whose products
// collide fails those assertions with NonGenericError.
struct GenericElement {
  BandMatrix M;
  Involution rho_prime;
};

GenericElement generic_element(const std::vector<int>& rho,
                               const std::vector<Rat>& seeds);

// The pairing of equal superdiagonal squares: every nonzero value must be
// shared by exactly two indices and at most one index may carry zero
// (NonGenericError otherwise), giving an involution with at most one fixed
// point.
Involution link_pattern_of(const BandMatrix& M);

struct CompReport {
  struct Item {
    std::string check;
    bool pass;
    std::string detail;  // first counterexample, or a short note
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

// The three equation families of the component named by the fixed-point-free
// pattern pi (necessary conditions only):
//   "square"        the in-window part of M^2 vanishes
//   "superdiagonal" superdiagonal squares agree at i and pi(i)
//   "rank"          for every window position (i,j) the submatrix of M
//                   southwest of (i,j) has rank at most the one of
//                   underline(pi)
CompReport check_compeqns(const BandMatrix& M, const Involution& pi);

// Rank of the submatrix southwest of (i, j): rows >= i, columns <= j, which
// meets the band in rows i..j-1 and columns i+1..j (periodic lifts for
// j > N). Exact, by fraction-free elimination on cleared denominators.
int southwest_rank(const BandMatrix& M, long i, long j);

// R/L split of the window at column N: embed places a strictly upper
// triangular N x N matrix (dense, 0-based) as the R-part with zero L-part;
// project keeps the R-part. project(embed(U)) = U identically.
BandMatrix embed(const std::vector<std::vector<Rat>>& U);
std::vector<std::vector<Rat>> project(const BandMatrix& M);

std::string band_to_json(const BandMatrix& M, bool pretty = false);
BandMatrix band_from_json(const std::string& text);

}  // namespace brl
