#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brl/joseph.hpp"
#include "brl/linkpat.hpp"
#include "brl/orbit_poset.hpp"
#include "brl/qkz.hpp"

using brl::Involution;
using brl::JosephReport;
using brl::JTable;
using brl::Poly;
using brl::PsiTable;
using brl::ZRing;

namespace {

Involution inv(int N, const std::string& text) { return Involution::parse(text, N); }

Poly weight_product(const ZRing& ring) {
  Poly p = ring.constant(1);
  for (int i = 1; i < ring.N(); ++i)
    for (int j = i + 1; j <= ring.N(); ++j) p = p * ring.weight(i, j);
  return p;
}

// All ten entries at N = 4 in closed form. Each orbit closure except the one
// for (2 3) is a coordinate subspace, whose multidegree is the product of the
// complementary weights; the closure for (2 3) is the rank-one locus in the
// (rows 1,2) x (columns 3,4) block and picks up the determinant's weight.
std::map<Involution, Poly> expected4(const ZRing& ring) {
  const Poly w12 = ring.weight(1, 2), w13 = ring.weight(1, 3),
             w14 = ring.weight(1, 4), w23 = ring.weight(2, 3),
             w24 = ring.weight(2, 4), w34 = ring.weight(3, 4);
  std::map<Involution, Poly> out;
  out[inv(4, "()")] = weight_product(ring);
  out[inv(4, "(1 2)")] = w23 * w24 * w34;
  out[inv(4, "(2 3)")] = w12 * w34 * (w13 + w24);
  out[inv(4, "(3 4)")] = w12 * w13 * w23;
  out[inv(4, "(1 3)")] = w12 * w23 * w24 * w34;
  out[inv(4, "(2 4)")] = w12 * w13 * w23 * w34;
  out[inv(4, "(1 4)")] = w12 * w13 * w23 * w24 * w34;
  out[inv(4, "(1 2)(3 4)")] = w23 * (ring.A() + w14);
  out[inv(4, "(1 4)(2 3)")] = w12 * w34;
  out[inv(4, "(1 3)(2 4)")] = w12 * w23 * w34;
  return out;
}

}  // namespace

TEST_CASE("minimal chords") {
  using Chords = std::vector<std::pair<int, int>>;
  CHECK(brl::minimal_chords(inv(4, "()")) == Chords{});
  CHECK(brl::minimal_chords(inv(4, "(3 4)")) == Chords{{3, 4}});
  CHECK(brl::minimal_chords(inv(4, "(1 2)(3 4)")) == Chords{{1, 2}, {3, 4}});
  CHECK(brl::minimal_chords(inv(4, "(1 4)(2 3)")) == Chords{{2, 3}});
  CHECK(brl::minimal_chords(inv(4, "(1 3)(2 4)")) == Chords{{1, 3}, {2, 4}});
  CHECK(brl::minimal_chords(inv(6, "(1 6)(2 5)(3 4)")) == Chords{{3, 4}});
  CHECK(brl::minimal_chords(inv(6, "(1 4)(2 3)(5 6)")) == Chords{{2, 3}, {5, 6}});
}

TEST_CASE("chord recursion reproduces the closed forms at N = 4") {
  const ZRing ring(4);
  const JTable table = brl::melnikov_solve(4);
  CHECK(table.N == 4);
  CHECK(table.method == "melnikov");
  CHECK(table.entries.size() == 10);
  for (const auto& [pi, expect] : expected4(ring)) {
    CAPTURE(pi.cycle_string());
    CHECK(table.entries.at(pi) == expect);
  }
  CHECK(brl::verify_jtable(table).all_pass());
}

TEST_CASE("small and odd sizes") {
  {
    const JTable t1 = brl::melnikov_solve(1);
    CHECK(t1.entries.size() == 1);
    CHECK(t1.entries.at(inv(1, "()")) == ZRing(1).constant(1));
  }
  {
    const ZRing ring(2);
    const JTable t2 = brl::melnikov_solve(2);
    CHECK(t2.entries.size() == 2);
    CHECK(t2.entries.at(inv(2, "()")) == ring.weight(1, 2));
    CHECK(t2.entries.at(inv(2, "(1 2)")) == ring.constant(1));
  }
  {
    const ZRing ring(3);
    const JTable t3 = brl::melnikov_solve(3);
    CHECK(t3.entries.size() == 4);
    CHECK(t3.entries.at(inv(3, "()")) == weight_product(ring));
    CHECK(t3.entries.at(inv(3, "(1 2)")) == ring.weight(2, 3));
    CHECK(t3.entries.at(inv(3, "(2 3)")) == ring.weight(1, 2));
    CHECK(t3.entries.at(inv(3, "(1 3)")) == ring.weight(1, 2) * ring.weight(2, 3));
  }
  // The solver checks itself; the sizes here just have to be reachable.
  CHECK(brl::melnikov_solve(5).entries.size() == 26);
}

TEST_CASE("leading forms of the loop polynomials match the recursion") {
  const PsiTable psi = brl::solve(4);
  for (const auto& [pi, entry] : psi.entries) {
    CAPTURE(pi.cycle_string());
    CHECK(entry.degree_in(1) == 2 - brl::crossings(pi));
  }

  const JTable lead = brl::leading_form_table(psi);
  CHECK(lead.method == "leading-form");
  CHECK(lead.entries.size() == 3);
  const JTable full = brl::melnikov_solve(4);
  for (const auto& [pi, entry] : lead.entries) {
    CAPTURE(pi.cycle_string());
    CHECK(full.entries.at(pi) == entry);
  }
  CHECK(brl::verify_jtable(lead).all_pass());
  CHECK(brl::hotta_checks(lead).all_pass());
  CHECK(brl::doubschub_check(lead).all_pass());
}

TEST_CASE("cross-method agreement at N = 6") {
  const JTable full = brl::melnikov_solve(6);
  CHECK(full.entries.size() == 76);
  const JTable lead = brl::leading_form_table(brl::solve(6));
  CHECK(lead.entries.size() == 15);
  for (const auto& [pi, entry] : lead.entries) {
    CAPTURE(pi.cycle_string());
    CHECK(full.entries.at(pi) == entry);
  }
  CHECK(brl::doubschub_check(full).all_pass());
}

TEST_CASE("leading form rejects a tampered loop table") {
  PsiTable psi = brl::solve(4);
  const Involution pi = inv(4, "(1 3)(2 4)");
  psi.entries.at(pi) = psi.entries.at(pi) * ZRing(4).B();
  CHECK_THROWS_AS(brl::leading_form_table(psi), std::runtime_error);
}

TEST_CASE("contraction and uncrossing instances") {
  const ZRing ring(4);
  const JTable t = brl::melnikov_solve(4);
  const auto entry = [&](const std::string& s) { return t.entries.at(inv(4, s)); };
  const auto lhs = [&](const std::string& s, int i) {
    return -(ring.weight(i, i + 1) * ring.divided_difference(i, entry(s)));
  };

  // Contracting a little arch against another chord keeps the pairing
  // noncrossing, and against a half-line keeps the crossing count.
  CHECK(lhs("(1 2)(3 4)", 1) == entry("(1 4)(2 3)"));
  CHECK(lhs("(1 2)(3 4)", 3) == entry("(1 4)(2 3)"));
  CHECK(lhs("(3 4)", 3) == entry("(2 3)"));
  CHECK(lhs("(1 2)", 1) == entry("(2 3)"));
  CHECK(lhs("(2 3)", 2) == entry("(1 2)") + entry("(3 4)"));

  // Uncrossing the chords at 1 and 2 of (1 3)(2 4).
  const Poly wb = ring.A() + ring.z(2) - ring.z(1);
  CHECK(-ring.divided_difference(1, wb * entry("(1 3)(2 4)")) ==
        wb * entry("(1 4)(2 3)"));

  CHECK(brl::hotta_checks(t).all_pass());
}

TEST_CASE("verification detects corrupted tables") {
  const ZRing ring(4);
  const JTable good = brl::melnikov_solve(4);
  const Involution arch = inv(4, "(1 2)");

  {
    JTable t = good;
    t.entries.erase(inv(4, "(1 4)"));
    const JosephReport rep = brl::verify_jtable(t, {"degree"});
    REQUIRE(rep.items.size() == 1);
    CHECK(!rep.items[0].pass);
    CHECK(!rep.items[0].detail.empty());
  }
  {
    JTable t = good;
    t.entries.at(arch) = t.entries.at(arch) * ring.weight(1, 2);
    CHECK(!brl::verify_jtable(t, {"degree"}).all_pass());
  }
  {
    // Same degree and still homogeneous, but the B slot leaks in.
    JTable t = good;
    t.entries.at(arch) = t.entries.at(arch).exact_div(ring.weight(2, 3)) * ring.B();
    const JosephReport rep = brl::verify_jtable(t, {"degree"});
    CHECK(!rep.items[0].pass);
    CHECK(rep.items[0].detail.find("involves B") != std::string::npos);
  }
  {
    JTable t = good;
    t.entries.at(arch) = -t.entries.at(arch);
    CHECK(brl::verify_jtable(t, {"degree"}).all_pass());
    CHECK(!brl::verify_jtable(t, {"positivity"}).all_pass());
  }
  {
    // Swapping two entries of equal degree passes the size and degree
    // bookkeeping but breaks the divided-difference identities.
    JTable t = good;
    std::swap(t.entries.at(inv(4, "(1 2)(3 4)")), t.entries.at(inv(4, "(1 4)(2 3)")));
    CHECK(brl::verify_jtable(t, {"degree"}).all_pass());
    const JosephReport rep = brl::hotta_checks(t);
    CHECK(!rep.all_pass());
    CHECK(rep.items[0].check == "contraction");
  }
  CHECK_THROWS_AS(brl::verify_jtable(good, {"nope"}), std::invalid_argument);
}

TEST_CASE("double Schubert polynomials") {
  {
    CHECK(brl::double_schubert({1, 2}).poly == Poly::constant(4, 1));
    CHECK(brl::double_schubert({2, 1}).poly ==
          Poly::variable(4, 0) - Poly::variable(4, 2));
  }
  {
    const Poly x1 = Poly::variable(6, 0), x2 = Poly::variable(6, 1);
    const Poly y1 = Poly::variable(6, 3), y2 = Poly::variable(6, 4);
    CHECK(brl::double_schubert({3, 2, 1}).poly == (x1 - y1) * (x1 - y2) * (x2 - y1));
    CHECK(brl::double_schubert({2, 1, 3}).poly == x1 - y1);
    CHECK(brl::double_schubert({1, 3, 2}).poly == x1 + x2 - y1 - y2);
    CHECK(brl::double_schubert({2, 3, 1}).poly == (x1 - y1) * (x2 - y1));
    CHECK(brl::double_schubert({3, 1, 2}).poly == (x1 - y1) * (x1 - y2));
  }
  {
    // Homogeneous of degree equal to the inversion number.
    std::vector<int> rho{1, 2, 3, 4};
    do {
      int invs = 0;
      for (size_t a = 0; a < rho.size(); ++a)
        for (size_t b = a + 1; b < rho.size(); ++b)
          if (rho[a] > rho[b]) ++invs;
      const Poly s = brl::double_schubert(rho).poly;
      CAPTURE(rho[0] * 1000 + rho[1] * 100 + rho[2] * 10 + rho[3]);
      CHECK(s.homogeneous());
      CHECK(s.degree() == invs);
    } while (std::next_permutation(rho.begin(), rho.end()));
  }
  CHECK_THROWS_AS(brl::double_schubert({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(brl::double_schubert({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(brl::double_schubert({1, 2, 3, 4, 5, 6, 7, 8, 9}),
                  std::invalid_argument);
}

TEST_CASE("permutation sector against the Schubert formula") {
  const JTable t4 = brl::melnikov_solve(4);
  const JosephReport rep = brl::doubschub_check(t4);
  REQUIRE(rep.items.size() == 2);
  CHECK(rep.items[0].check == "double-schubert");
  CHECK(rep.items[0].pass);
  CHECK(rep.items[1].check == "substitution");
  CHECK(rep.items[1].pass);

  // A corrupted permutation-sector entry is caught.
  JTable bad = t4;
  bad.entries.at(inv(4, "(1 4)(2 3)")) = ZRing(4).weight(1, 2) * ZRing(4).weight(1, 2);
  CHECK(!brl::doubschub_check(bad).items[0].pass);

  CHECK_THROWS_AS(brl::doubschub_check(brl::melnikov_solve(3)),
                  std::invalid_argument);
}

TEST_CASE("json round trip") {
  const JTable t4 = brl::melnikov_solve(4);
  const std::string text = brl::jtable_to_json(t4);
  CHECK(text.find("\"v\":1") != std::string::npos);

  const JTable back = brl::jtable_from_json(text);
  CHECK(back.N == t4.N);
  CHECK(back.method == t4.method);
  CHECK(back.entries == t4.entries);

  const JTable pretty = brl::jtable_from_json(brl::jtable_to_json(t4, true));
  CHECK(pretty.entries == t4.entries);

  const JTable lead = brl::leading_form_table(brl::solve(4));
  const JTable lback = brl::jtable_from_json(brl::jtable_to_json(lead));
  CHECK(lback.method == "leading-form");
  CHECK(lback.entries == lead.entries);

  JTable partial = t4;
  partial.entries.erase(inv(4, "(1 4)"));
  CHECK_THROWS_AS(brl::jtable_to_json(partial), std::invalid_argument);

  std::string bogus = text;
  bogus.replace(bogus.find("melnikov"), 8, "mystery8");
  CHECK_THROWS_AS(brl::jtable_from_json(bogus), std::invalid_argument);

  std::string zero = text;
  zero.replace(zero.find("\"N\":4"), 5, "\"N\":0");
  CHECK_THROWS_AS(brl::jtable_from_json(zero), std::invalid_argument);

  CHECK_THROWS_AS(brl::jtable_from_json("{\"v\":2}"), std::invalid_argument);
  CHECK_THROWS_AS(brl::jtable_from_json("{"), std::exception);
}

TEST_CASE("cache reuse and rebuild") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "brl-joseph-cache-test";
  fs::remove_all(dir);

  const JTable first = brl::load_or_build_jtable(4, "melnikov", dir.string());
  const fs::path file = dir / "joseph-N4-melnikov.json";
  REQUIRE(fs::exists(file));
  CHECK(first.entries == brl::melnikov_solve(4).entries);

  // A cached table that still passes the degree check is trusted as-is:
  // negate one entry and observe the cache being served.
  const Involution arch = inv(4, "(1 4)(2 3)");
  JTable tweaked = first;
  tweaked.entries.at(arch) = -tweaked.entries.at(arch);
  std::ofstream(file) << brl::jtable_to_json(tweaked);
  CHECK(brl::load_or_build_jtable(4, "melnikov", dir.string()).entries.at(arch) ==
        -first.entries.at(arch));

  // A wrong-degree entry fails validation and forces a rebuild.
  tweaked.entries.at(arch) = ZRing(4).A();
  std::ofstream(file) << brl::jtable_to_json(tweaked);
  CHECK(brl::load_or_build_jtable(4, "melnikov", dir.string()).entries ==
        first.entries);

  // So does an unparseable file; the rebuild rewrites it.
  std::ofstream(file) << "{";
  CHECK(brl::load_or_build_jtable(4, "melnikov", dir.string()).entries ==
        first.entries);
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(brl::jtable_from_json(text).entries == first.entries);

  // The leading-form route shares the directory with the loop-table cache.
  const JTable lead = brl::load_or_build_jtable(4, "leading-form", dir.string());
  CHECK(lead.method == "leading-form");
  CHECK(lead.entries == brl::leading_form_table(brl::solve(4)).entries);
  CHECK(fs::exists(dir / "joseph-N4-leading-form.json"));
  CHECK(fs::exists(dir / "psi-N4.json"));

  CHECK_THROWS_AS(brl::load_or_build_jtable(4, "mystery", dir.string()),
                  std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("solver guards and determinism") {
  CHECK_THROWS_AS(brl::melnikov_solve(0), std::invalid_argument);
  CHECK_THROWS_AS(brl::melnikov_solve(9), std::invalid_argument);
  CHECK_THROWS_AS(brl::melnikov_solve(5, 4), std::invalid_argument);
  CHECK(brl::melnikov_solve(4, 8, 2).entries == brl::melnikov_solve(4).entries);
}
