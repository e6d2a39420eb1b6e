#pragma once

// Brauer loop polynomials: the polynomial solution of the exchange system on
// the link-pattern span, with entries in Z[A, B, z_1..z_N].
//
// The base entry is an explicit product over periodic windows; every other
// entry is transported along tadpole-free exchange moves
//
//   Psi_{f_i.pi} = (A+B+z_{i+1}-z_i)(A+z_i-z_{i+1})
//                  * (-dd_i)(Psi_pi / (A+z_i-z_{i+1}))  -  Psi_pi
//
// where dd_i is the divided difference and every division is exact on
// genuine entries. A returned table has passed the full identity battery:
// exchange moves, little-arch contraction, rotation covariance, window
// divisibility, diagonal specialization, degree, alternate-route agreement
// and the symmetric-residue product. The R-matrix lives here too, as
// rational-function matrices in (u, v, A, beta), with its Yang-Baxter,
// unitarity and exchange-residual identities.

#include <map>
#include <string>
#include <vector>

#include "brl/linkpat.hpp"
#include "brl/poly.hpp"
#include "brl/ratfun.hpp"
#include "brl/zring.hpp"

namespace brl {

struct PsiTable {
  int N = 0;
  std::map<Involution, Poly> entries;
  // Word deriving each entry from the base pattern, word[0] applied first.
  // Loaded tables leave this empty; verification recomputes words on demand.
  std::map<Involution, std::vector<int>> derivation;
  std::string normalization = "unit-base-product";
};

// prod_{i=1}^N prod_{j=i+1}^{i+n-1} (A + z_i - z_j), periodically reduced.
// N = 2 gives the empty product 1. Equals the split form
// prod_{j-i<n}(A+z_i-z_j) prod_{j-i>n}(B+z_j-z_i) over 1 <= i < j <= N.
Poly base_psi(const ZRing& ring);

// Psi_{f_i.pi} from Psi_pi. Requires pi(i) != i+1 cyclically
// (invalid_argument otherwise). For i = N the two prefactors wrap to
// (2A+z_1-z_N) and (B+z_N-z_1). DivisionError propagates from the internal
// division and signals a violated divisibility claim.
Poly theta_apply(const ZRing& ring, int i, const Involution& pi, const Poly& psi);

enum class TieBreak { kLowestIndex, kHighestIndex };

// BFS from the base pattern along tadpole-free exchange edges; the tie-break
// rule picks the parent/letter among simultaneous discoveries. Entries within
// a BFS level are derived in parallel (jobs < 2 runs serial); the assignment
// pass is sequential, so the result is scheduling-independent. The finished
// table must pass verify_table; a failed identity raises runtime_error naming
// it. For N > 6 a symmetric-residue mismatch is reported but not fatal, since
// the closed product form is hand-checked only at small sizes.
PsiTable solve(int N, int bound = 8, int jobs = 1,
               TieBreak tie = TieBreak::kLowestIndex);

struct QkzReport {
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

// Identity battery over a complete table. Check names:
//   "exchange"          every admissible move reproduces the stored entry
//   "little-arch"       contraction identity against the preimage sum
//   "rotation"          entry of the rotated pattern = shifted entry
//   "divisibility"      window factors divide (isolated-window criterion)
//   "specialization"    A=B=0, z constant per chord of rho: zero iff pi != rho
//   "degree"            completeness, homogeneity, degree 2n(n-1), base entry
//   "word-independence" re-derivation along an edge-disjoint word agrees
//   "residue-symmetry"  contraction residue is swap-symmetric and matches
//                       its closed product form
// An empty selection runs everything.
QkzReport verify_table(const PsiTable& table,
                       const std::vector<std::string>& checks = {},
                       int jobs = 1);

enum class RMode { kSampled, kSymbolic };

// R-matrix identities on the link-pattern span. Check names:
//   "identity-at-zero"  R_i(0) is the identity operator
//   "ybe"               R_i(u) R_{i+1}(u+v) R_i(v) = mirrored product
//   "unitarity"         R_i(u) R_i(-u) = 1
//   "residual"          R_i(z_i - z_{i+1}) Psi = tau_i Psi with beta
//                       substituted (needs table; sampled points always)
// Sampled mode evaluates at the fixed generic points documented in the
// implementation; symbolic mode compares matrices of rational functions by
// cross-multiplication. Degenerate sample points raise PoleError.
QkzReport rmatrix_checks(int N, RMode mode,
                         const std::vector<std::string>& checks = {},
                         const PsiTable* table = nullptr);

std::string psi_table_to_json(const PsiTable& table, bool pretty = false);
PsiTable psi_table_from_json(const std::string& text);

// cache_dir/psi-N{N}.json: reused when it parses and passes the "degree"
// check, otherwise the table is rebuilt and the file rewritten.
PsiTable load_or_solve(int N, const std::string& cache_dir, int jobs = 1,
                       int bound = 8);

}  // namespace brl
