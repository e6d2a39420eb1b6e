#pragma once

// Joseph-Melnikov polynomials: multidegrees of the B-orbit closures inside
// the upper-triangular slice of {M^2 = 0}, living in Z[A, z_1..z_N] (the B
// slot of the shared ring stays unused).
//
// Two independent constructions must agree on link patterns:
//
//   * the top-B coefficient of the loop polynomial, with B-exponent exactly
//     n^2 - n - c for a pattern with c crossings;
//   * the bottom-up chord recursion
//       J_pi = sum_rho J_rho / (A + z_a - z_b)
//     over orbits rho covered by pi without the chord (a,b), where (a,b) is
//     any minimal chord of pi (none nested strictly inside), seeded with
//     J_id = prod_{i<j} (A + z_i - z_j) at the origin.
//
// Hotta-type divided-difference identities and the double Schubert
// comparison on the permutation sector cross-check the finished tables.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brl/linkpat.hpp"
#include "brl/poly.hpp"
#include "brl/qkz.hpp"
#include "brl/zring.hpp"

namespace brl {

struct JTable {
  int N = 0;
  std::map<Involution, Poly> entries;
  // "melnikov": all involutions; "leading-form": link patterns only.
  std::string method;
};

// Chords (a,b) of pi with no chord nested strictly inside (a..b).
std::vector<std::pair<int, int>> minimal_chords(const Involution& pi);

// Ascends the orbit poset by dimension; every minimal chord of pi must give
// the same entry (runtime_error otherwise), every divisibility claim is
// exact (DivisionError otherwise). The finished table passes verify_jtable
// and hotta_checks.
JTable melnikov_solve(int N, int bound = 8, int jobs = 1);

// Top-B coefficients of a complete loop-polynomial table. The B-exponent of
// each entry must be n^2 - n - c (runtime_error names the first violation).
JTable leading_form_table(const PsiTable& psi);

struct JosephReport {
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

// Check names:
//   "degree"      completeness for the method's domain, B-freeness,
//                 homogeneity, degree N(N-1)/2 - dim_orbit, identity entry
//   "positivity"  entries are nonzero and positive at A=1, z=0
// An empty selection runs everything.
JosephReport verify_jtable(const JTable& table,
                           const std::vector<std::string>& checks = {});

// Divided-difference identities, indices 1..N-1 (no wrap):
//   "contraction"  for every sigma with the little arch (i,i+1):
//                  -(A+z_i-z_{i+1}) dd_i J_sigma = sum of J_tau over the
//                  reconnections of the arch with one other chord or
//                  half-line that preserve the total crossing count
//   "uncrossing"   whenever the chords at i and i+1 cross:
//                  -dd_i((A+z_{i+1}-z_i) J_sigma)
//                      = (A+z_{i+1}-z_i) J_{s_i sigma s_i}
JosephReport hotta_checks(const JTable& table);

// Double Schubert polynomial in x_1..x_n, y_1..y_n (variable slots 0..n-1
// and n..2n-1), computed by the divided-difference recursion down from the
// top class prod_{i+j<=n} (x_i - y_j). Every ascent of the permutation gives
// the same polynomial (asserted internally).
struct SchubertPoly {
  int n = 0;
  std::vector<int> perm;  // one-line images rho(1..n)
  Poly poly;
};

SchubertPoly double_schubert(const std::vector<int>& perm);

// Embeds each rho in S_n as the pattern pi(i) = n + rho(n+1-i) on the first
// half and checks, against a melnikov table of size N = 2n,
//   J_pi = S_rho(A+z_n,...,A+z_1; z_{n+1},...,z_{2n})
//          * prod_{1<=i<j<=n} (A+z_i-z_j) * prod_{n<i<j<=2n} (A+z_i-z_j);
// the alternate substitution (z_n,...,z_1; z_{n+1}-A,...) must agree with
// the displayed one ("substitution" item).
JosephReport doubschub_check(const JTable& table);

std::string jtable_to_json(const JTable& table, bool pretty = false);
JTable jtable_from_json(const std::string& text);

// cache_dir/joseph-N{N}-{method}.json: reused when it parses and passes the
// "degree" check, otherwise rebuilt and rewritten. The leading-form route
// reads (or builds) the loop-polynomial cache in the same directory.
JTable load_or_build_jtable(int N, const std::string& method,
                            const std::string& cache_dir, int jobs = 1,
                            int bound = 8);

}  // namespace brl
