#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brl/brauer_scheme.hpp"
#include "brl/linkpat.hpp"
#include "brl/orbit_poset.hpp"

using brl::BandMatrix;
using brl::Involution;
using brl::NonGenericError;
using brl::Rat;

namespace {

Involution inv(int N, const std::string& text) { return Involution::parse(text, N); }

std::vector<int> rho_of(const Involution& pi) {
  std::vector<int> rho(static_cast<size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) rho[static_cast<size_t>(i - 1)] = pi(i);
  return rho;
}

// Documented generic seed lists: pairwise products of distinct primes (or of
// prime ratios with disjoint prime support) are distinct by factorization.
std::vector<std::vector<Rat>> seed_lists(int N) {
  const std::vector<std::vector<Rat>> full = {
      {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), Rat(17), Rat(19)},
      {Rat(23), Rat(29), Rat(31), Rat(37), Rat(41), Rat(43), Rat(47), Rat(53)},
      {Rat(2, 3), Rat(5, 7), Rat(11, 13), Rat(17, 19), Rat(23, 29), Rat(31, 37),
       Rat(41, 43), Rat(47, 53)}};
  std::vector<std::vector<Rat>> out;
  for (const auto& seeds : full)
    out.emplace_back(seeds.begin(), seeds.begin() + N);
  return out;
}

// Independent oracle: square the honest dense lift on 3N rows and compare
// both parts of square(M) against the middle band of the product.
void check_against_dense(const BandMatrix& M) {
  const int N = M.N();
  const int big = 3 * N;
  std::vector<std::vector<Rat>> lift(static_cast<size_t>(big),
                                     std::vector<Rat>(static_cast<size_t>(big), Rat(0)));
  for (int a = 1; a <= big; ++a)
    for (int b = a + 1; b <= big && b < a + N; ++b)
      lift[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] = M.get(a, b);

  const auto sq = brl::square(M);
  for (int i = N + 1; i <= 2 * N; ++i)
    for (int j = i + 1; j <= i + N && j <= big; ++j) {
      Rat prod(0);
      for (int k = i + 1; k < j; ++k)
        prod += lift[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] *
                lift[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)];
      if (j - i < N)
        CHECK(sq.inside.get(i, j) == prod);
      else
        CHECK(sq.superdiag[static_cast<size_t>(i - N - 1)] == prod);
    }
}

}  // namespace

TEST_CASE("band matrix window and periodicity") {
  BandMatrix M(4);
  CHECK(M.N() == 4);
  CHECK(M.is_zero());

  M.set(1, 3, Rat(5, 2));
  CHECK(M.get(1, 3) == Rat(5, 2));
  CHECK(M.get(5, 7) == Rat(5, 2));
  CHECK(M.get(-3, -1) == Rat(5, 2));
  M.set(6, 9, Rat(-1));  // same entry as (2, 5)
  CHECK(M.get(2, 5) == Rat(-1));
  CHECK(M.entries().size() == 2);
  CHECK(M.entries().begin()->first == std::pair{1, 3});

  CHECK(M.get(2, 2) == 0);
  CHECK(M.get(3, 1) == 0);
  CHECK_THROWS_AS(M.get(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(M.get(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(M.set(1, 1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(M.set(2, 1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(M.set(1, 5, Rat(1)), std::invalid_argument);

  M.set(1, 4, Rat(7));
  M.set(5, 8, Rat(0));  // clearing the periodic copy removes the entry
  CHECK(M.entries().size() == 2);

  BandMatrix other(4);
  other.set(1, 3, Rat(5, 2));
  other.set(2, 5, Rat(-1));
  CHECK(M == other);
  other.set(1, 2, Rat(1));
  CHECK(M != other);

  CHECK_THROWS_AS(BandMatrix(0), std::invalid_argument);
}

TEST_CASE("squares, by hand and against the dense lift") {
  {
    const auto sq = brl::square(BandMatrix(4));
    CHECK(sq.inside.is_zero());
    for (const Rat& v : sq.superdiag) CHECK(v == 0);
  }
  {
    // Two-step path inside the window.
    BandMatrix M(3);
    M.set(1, 2, Rat(1));
    M.set(2, 3, Rat(1));
    const auto sq = brl::square(M);
    CHECK(sq.inside.get(1, 3) == Rat(1));
    CHECK(sq.inside.entries().size() == 1);
    for (const Rat& v : sq.superdiag) CHECK(v == 0);
  }
  {
    const auto sq = brl::square(brl::underline(inv(4, "(1 3)(2 4)")));
    CHECK(sq.inside.is_zero());
    for (const Rat& v : sq.superdiag) CHECK(v == Rat(1));
  }
  {
    // A dense-ish band matrix at N = 5 with wrapping entries.
    BandMatrix M(5);
    M.set(1, 2, Rat(1));
    M.set(1, 5, Rat(2, 3));
    M.set(2, 4, Rat(-3));
    M.set(2, 5, Rat(9));
    M.set(3, 4, Rat(5, 7));
    M.set(4, 7, Rat(-1, 2));
    M.set(5, 7, Rat(4));
    M.set(5, 9, Rat(11));
    check_against_dense(M);
  }
  check_against_dense(
      brl::generic_element(rho_of(inv(6, "(1 4)(2 6)(3 5)")), seed_lists(6)[0]).M);
}

TEST_CASE("pattern matrices occupy the lifted chord positions") {
  {
    const BandMatrix M = brl::underline(inv(4, "(1 2)(3 4)"));
    std::vector<std::pair<int, int>> want{{1, 2}, {2, 5}, {3, 4}, {4, 7}};
    std::vector<std::pair<int, int>> have;
    for (const auto& [pos, v] : M.entries()) {
      CHECK(v == Rat(1));
      have.push_back(pos);
    }
    CHECK(have == want);
  }
  {
    const BandMatrix M = brl::underline(inv(4, "(1 3)(2 4)"));
    std::vector<std::pair<int, int>> have;
    for (const auto& [pos, v] : M.entries()) have.push_back(pos);
    CHECK(have == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 5}, {4, 6}});
  }
  {
    const BandMatrix M = brl::underline(inv(2, "(1 2)"));
    std::vector<std::pair<int, int>> have;
    for (const auto& [pos, v] : M.entries()) have.push_back(pos);
    CHECK(have == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  }
  CHECK_THROWS_AS(brl::underline(inv(3, "(1 3)")), std::invalid_argument);
}

TEST_CASE("generic elements follow the seed products") {
  {
    const auto ge = brl::generic_element({2, 1, 4, 3}, {Rat(2), Rat(3), Rat(5), Rat(7)});
    const auto sq = brl::square(ge.M);
    CHECK(sq.superdiag == std::vector<Rat>{Rat(6), Rat(6), Rat(35), Rat(35)});
    CHECK(sq.inside.is_zero());
    CHECK(ge.rho_prime == inv(4, "(1 2)(3 4)"));
  }
  {
    // A bare rightward move keeps its upper-triangular entry; the
    // superdiagonal square vanishes because the path does not close up.
    const auto ge = brl::generic_element({3, 0, 0, 0}, {Rat(2), Rat(3), Rat(5), Rat(7)});
    CHECK(ge.M.entries().size() == 1);
    CHECK(ge.M.get(1, 3) == Rat(2));
    CHECK(brl::square(ge.M).superdiag == std::vector<Rat>(4, Rat(0)));
    CHECK(ge.rho_prime == inv(4, "(1 3)"));
  }
  {
    // A bare leftward move lives in the wrapped part of the window, so the
    // upper triangular part is zero and the named orbit is the identity.
    const auto ge = brl::generic_element({0, 0, 1, 0}, {Rat(2), Rat(3), Rat(5), Rat(7)});
    CHECK(ge.M.get(3, 5) == Rat(5));
    CHECK(ge.rho_prime == inv(4, "()"));
    CHECK(brl::embed(brl::project(ge.M)).is_zero());
  }
}

TEST_CASE("generic element guards") {
  const std::vector<Rat> s4{Rat(2), Rat(3), Rat(5), Rat(7)};
  CHECK_THROWS_AS(brl::generic_element({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({2, 1, 4, 3}, {Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({2, 1, 4, 3}, {Rat(0), Rat(1), Rat(2), Rat(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({5, 0, 0, 0}, s4), std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({1, 0, 0, 0}, s4), std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({3, 3, 0, 0}, s4), std::invalid_argument);
  CHECK_THROWS_AS(brl::generic_element({3, 0, 4, 0}, s4), std::invalid_argument);

  // Colliding seed products are a genericity failure, not a usage error.
  CHECK_THROWS_AS(brl::generic_element({2, 1, 4, 3}, {Rat(2), Rat(3), Rat(3), Rat(2)}),
                  NonGenericError);
  CHECK_THROWS_AS(brl::generic_element({2, 1, 4, 3}, {Rat(2), Rat(3), Rat(6), Rat(1)}),
                  NonGenericError);
}

TEST_CASE("pattern read-off and its failure modes") {
  for (int N : {4, 6}) {
    for (const auto& seeds : seed_lists(N)) {
      for (const auto& pi : brl::enumerate_link_patterns(N)) {
        const auto ge = brl::generic_element(rho_of(pi), seeds);
        CHECK(brl::link_pattern_of(ge.M) == pi);
        CHECK(ge.rho_prime == pi);
      }
    }
  }
  CHECK_THROWS_AS(brl::link_pattern_of(BandMatrix(4)), NonGenericError);
  CHECK_THROWS_AS(brl::link_pattern_of(brl::underline(inv(4, "(1 3)(2 4)"))),
                  NonGenericError);

  // An odd size leaves a single vanishing superdiagonal square as the one
  // allowed fixed point.
  const auto ge = brl::generic_element({3, 0, 1, 0, 0}, seed_lists(5)[0]);
  (void)ge;  // rho pairing (1,3) leaves 2, 4, 5 undefined: three zeros
  CHECK_THROWS_AS(brl::link_pattern_of(ge.M), NonGenericError);
  const auto full5 = brl::generic_element({3, 4, 1, 2, 0}, seed_lists(5)[0]);
  CHECK(brl::link_pattern_of(full5.M) == inv(5, "(1 3)(2 4)"));
}

TEST_CASE("component equations") {
  const auto patterns4 = brl::enumerate_link_patterns(4);
  for (const auto& pi : patterns4) {
    const auto ge = brl::generic_element(rho_of(pi), seed_lists(4)[0]);
    const auto rep = brl::check_compeqns(ge.M, pi);
    REQUIRE(rep.items.size() == 3);
    CHECK(rep.items[0].check == "square");
    CHECK(rep.items[1].check == "superdiagonal");
    CHECK(rep.items[2].check == "rank");
    CHECK(rep.all_pass());
    for (const auto& other : patterns4)
      if (!(other == pi)) CHECK(!brl::check_compeqns(ge.M, other).all_pass());
  }

  // The 0/1 matrix of a pattern is a degenerate point of its own component.
  const BandMatrix under = brl::underline(inv(4, "(1 3)(2 4)"));
  CHECK(brl::check_compeqns(under, inv(4, "(1 3)(2 4)")).all_pass());
  CHECK(brl::southwest_rank(under, 1, 3) == 1);

  // A generic element of one component breaks the equations of another in
  // both the superdiagonal and the rank family.
  const auto cross =
      brl::generic_element(rho_of(inv(4, "(1 2)(3 4)")), seed_lists(4)[0]);
  const auto rep = brl::check_compeqns(cross.M, inv(4, "(1 3)(2 4)"));
  CHECK(rep.items[0].pass);
  CHECK(!rep.items[1].pass);
  CHECK(rep.items[1].detail.find("differ") != std::string::npos);
  CHECK(!rep.items[2].pass);
  CHECK(rep.items[2].detail.find("bound") != std::string::npos);

  // A matrix that is not square-zero fails the first family.
  BandMatrix path(4);
  path.set(1, 2, Rat(1));
  path.set(2, 3, Rat(1));
  CHECK(!brl::check_compeqns(path, inv(4, "(1 2)(3 4)")).items[0].pass);

  CHECK_THROWS_AS(brl::check_compeqns(under, inv(6, "(1 2)(3 6)(4 5)")),
                  std::invalid_argument);
  CHECK_THROWS_AS(brl::check_compeqns(brl::generic_element({3, 0, 1, 0, 0},
                                                           seed_lists(5)[0]).M,
                                      inv(5, "(1 3)")),
                  std::invalid_argument);
}

TEST_CASE("southwest ranks") {
  const BandMatrix under = brl::underline(inv(4, "(1 3)(2 4)"));
  CHECK(brl::southwest_rank(under, 1, 2) == 0);
  CHECK(brl::southwest_rank(under, 1, 3) == 1);
  CHECK(brl::southwest_rank(under, 1, 4) == 2);
  CHECK(brl::southwest_rank(under, 2, 4) == 1);
  CHECK(brl::southwest_rank(under, 2, 5) == 2);
  CHECK(brl::southwest_rank(under, 5, 7) == 1);  // periodic copy of (1, 3)
  CHECK_THROWS_AS(brl::southwest_rank(under, 1, 5), std::invalid_argument);

  // Rational entries are cleared exactly, not approximately.
  BandMatrix M(3);
  M.set(1, 2, Rat(1, 2));
  M.set(1, 3, Rat(1, 3));
  M.set(2, 3, Rat(2, 3));
  CHECK(brl::southwest_rank(M, 1, 3) == 2);
  M.set(1, 2, Rat(1, 3));  // now row 1 = (1/3, 1/3)... rows stay independent
  CHECK(brl::southwest_rank(M, 1, 3) == 2);
  M.set(1, 3, Rat(1, 3));
  M.set(2, 3, Rat(1));  // rows (1/3, 1/3) and (0, 1): rank 2
  CHECK(brl::southwest_rank(M, 1, 3) == 2);
  M.set(1, 2, Rat(0));
  M.set(1, 3, Rat(1, 5));  // rows (0, 1/5), (0, 1): rank 1
  CHECK(brl::southwest_rank(M, 1, 3) == 1);
}

TEST_CASE("embedding splits the window") {
  const int N = 4;
  std::vector<std::vector<Rat>> U(N, std::vector<Rat>(N, Rat(0)));
  U[0][1] = Rat(3);
  U[0][3] = Rat(-2, 5);
  U[2][3] = Rat(7);
  const BandMatrix M = brl::embed(U);
  CHECK(brl::project(M) == U);
  CHECK(M.get(1, 2) == Rat(3));
  CHECK(M.get(1, 4) == Rat(-2, 5));

  // The projection of a generic element keeps exactly the unwrapped chords.
  const Involution pi = inv(4, "(1 2)(3 4)");
  const auto ge = brl::generic_element(rho_of(pi), seed_lists(4)[0]);
  const auto P = brl::project(ge.M);
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (P[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
        ++nonzero;
        CHECK(pi(i + 1) == j + 1);
        CHECK(i + 1 < j + 1);
      }
  CHECK(nonzero == 2);

  CHECK(brl::embed(std::vector<std::vector<Rat>>(4, std::vector<Rat>(4, Rat(0))))
            .is_zero());
  U[1][0] = Rat(1);
  CHECK_THROWS_AS(brl::embed(U), std::invalid_argument);
  CHECK_THROWS_AS(brl::embed({}), std::invalid_argument);
  CHECK_THROWS_AS(brl::embed({{Rat(0), Rat(1)}, {Rat(0)}}), std::invalid_argument);
}

TEST_CASE("projection ranks name the orbit of the upper part") {
  for (int N : {4, 6}) {
    for (const auto& seeds : seed_lists(N)) {
      for (const auto& pi : brl::enumerate_link_patterns(N)) {
        const auto ge = brl::generic_element(rho_of(pi), seeds);
        const auto U = brl::project(ge.M);
        // project(M) squares to zero inside the plain matrix algebra.
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) {
            Rat prod(0);
            for (int k = 0; k < N; ++k)
              prod += U[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                      U[static_cast<size_t>(k)][static_cast<size_t>(j)];
            CHECK(prod == 0);
          }
        const BandMatrix upper = brl::embed(U);
        for (int i = 1; i <= N; ++i)
          for (int j = i + 1; j <= N; ++j)
            CHECK(brl::southwest_rank(upper, i, j) ==
                  brl::rank_interval(ge.rho_prime, i, j));
      }
    }
  }
}

TEST_CASE("round trip across sizes and seed sets") {
  for (int N : {4, 6, 8}) {
    for (const auto& seeds : seed_lists(N)) {
      for (const auto& pi : brl::enumerate_link_patterns(N)) {
        const auto ge = brl::generic_element(rho_of(pi), seeds);
        CHECK(brl::link_pattern_of(ge.M) == pi);
        CHECK(brl::check_compeqns(ge.M, pi).all_pass());
      }
    }
  }
}

TEST_CASE("json round trip") {
  const auto ge = brl::generic_element(rho_of(inv(4, "(1 3)(2 4)")),
                                       seed_lists(4)[2]);
  const std::string text = brl::band_to_json(ge.M);
  CHECK(text.find("\"v\":1") != std::string::npos);
  CHECK(brl::band_from_json(text) == ge.M);
  CHECK(brl::band_from_json(brl::band_to_json(ge.M, true)) == ge.M);

  CHECK(brl::band_from_json("{\"v\":1,\"N\":3,\"entries\":[]}").is_zero());
  CHECK_THROWS_AS(brl::band_from_json("{\"v\":2}"), std::invalid_argument);
  CHECK_THROWS_AS(brl::band_from_json("{\"v\":1,\"N\":0,\"entries\":[]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(brl::band_from_json("{"), std::exception);
  CHECK_THROWS_AS(
      brl::band_from_json(
          "{\"v\":1,\"N\":3,\"entries\":[{\"i\":1,\"j\":1,\"num\":\"1\",\"den\":\"1\"}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      brl::band_from_json(
          "{\"v\":1,\"N\":3,\"entries\":[{\"i\":1,\"j\":2,\"num\":\"1\",\"den\":\"0\"}]}"),
      std::invalid_argument);
}
