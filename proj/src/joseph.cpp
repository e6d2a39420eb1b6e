#include "brl/joseph.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "brl/json_io.hpp"
#include "brl/orbit_poset.hpp"
#include "brl/parallel.hpp"

namespace brl {

namespace {

std::string pat(const Involution& pi) { return pi.cycle_string(); }

Poly identity_entry(const ZRing& ring) {
  Poly p = ring.constant(1);
  for (int i = 1; i < ring.N(); ++i)
    for (int j = i + 1; j <= ring.N(); ++j) p = p * ring.weight(i, j);
  return p;
}

// Contraction preimages of sigma at its little arch (i,i+1): every way of
// re-attaching the arch to one other curve (a chord gets re-paired with the
// arch ends, a half-line absorbs one end and releases the other), kept only
// when the total crossing count is preserved. Crossing preservation is the
// combinatorial form of "replaced by a noncrossing pair" and keeps exactly
// the orbits of the same dimension.
std::vector<Involution> contraction_preimages(const Involution& sigma, int i) {
  const int N = sigma.size();
  const int base = crossings(sigma);
  std::vector<std::pair<int, int>> rest;
  for (auto ch : sigma.chords())
    if (ch != std::pair{i, i + 1}) rest.push_back(ch);

  std::vector<Involution> out;
  auto consider = [&](std::vector<std::pair<int, int>> chords) {
    Involution tau = Involution::from_chords(N, chords);
    if (crossings(tau) == base) out.push_back(std::move(tau));
  };

  for (size_t k = 0; k < rest.size(); ++k) {
    const auto [c, d] = rest[k];
    for (int x : {c, d}) {
      const int y = x == c ? d : c;
      auto chords = rest;
      chords.erase(chords.begin() + static_cast<long>(k));
      chords.emplace_back(std::min(i, x), std::max(i, x));
      chords.emplace_back(std::min(i + 1, y), std::max(i + 1, y));
      consider(std::move(chords));
    }
  }
  for (int h : sigma.fixed_points()) {
    for (int e : {i, i + 1}) {
      auto chords = rest;
      chords.emplace_back(std::min(e, h), std::max(e, h));
      consider(std::move(chords));
    }
  }
  return out;
}

Involution conj_adjacent(const Involution& sigma, int i) {
  const int N = sigma.size();
  auto s = [&](int k) { return k == i ? i + 1 : (k == i + 1 ? i : k); };
  std::vector<int> img(static_cast<size_t>(N));
  for (int k = 1; k <= N; ++k) img[static_cast<size_t>(k - 1)] = s(sigma(s(k)));
  return Involution::from_pairing(img);
}

const char* const kJChecks[] = {"degree", "positivity"};

std::vector<std::string> expand_jchecks(const std::vector<std::string>& checks) {
  if (checks.empty()) return {std::begin(kJChecks), std::end(kJChecks)};
  for (const auto& name : checks)
    if (std::find(std::begin(kJChecks), std::end(kJChecks), name) ==
        std::end(kJChecks))
      throw std::invalid_argument("unknown table check: " + name);
  return checks;
}

std::vector<Involution> jdomain(const JTable& table) {
  return table.method == "leading-form" ? enumerate_link_patterns(table.N)
                                        : enumerate_involutions(table.N);
}

// x_1..x_n sit in slots 0..n-1, y_1..y_n in slots n..2n-1.
Poly schub_x(int n, int i) { return Poly::variable(2 * n, i - 1); }
Poly schub_y(int n, int j) { return Poly::variable(2 * n, n + j - 1); }

Poly schub_dd(int n, int i, const Poly& f) {
  std::vector<Poly> images;
  images.reserve(static_cast<size_t>(2 * n));
  for (int v = 0; v < 2 * n; ++v) {
    int w = v == i - 1 ? i : (v == i ? i - 1 : v);
    images.push_back(Poly::variable(2 * n, w));
  }
  return (f - f.substitute(images)).exact_div(schub_x(n, i) - schub_x(n, i + 1));
}

void check_perm(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

std::string perm_str(const std::vector<int>& perm) {
  std::string s = "[";
  for (size_t k = 0; k < perm.size(); ++k)
    s += (k ? "," : "") + std::to_string(perm[k]);
  return s + "]";
}

}  // namespace

std::vector<std::pair<int, int>> minimal_chords(const Involution& pi) {
  const auto chords = pi.chords();
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : chords) {
    bool minimal = true;
    for (auto [c, d] : chords)
      if (a < c && d < b) minimal = false;
    if (minimal) out.emplace_back(a, b);
  }
  return out;
}

JTable melnikov_solve(int N, int bound, int jobs) {
  if (N < 1) throw std::invalid_argument("table size must be positive");
  if (N > bound) throw std::invalid_argument("table size exceeds the configured bound");

  const PosetRecord rec = build_poset(N, bound);
  const ZRing ring(N);

  int maxdim = 0;
  for (const auto& [pi, d] : rec.dim) maxdim = std::max(maxdim, d);
  std::vector<std::vector<Involution>> levels(static_cast<size_t>(maxdim + 1));
  for (const Involution& pi : rec.elements)
    levels[static_cast<size_t>(rec.dim.at(pi))].push_back(pi);

  JTable table;
  table.N = N;
  table.method = "melnikov";

  if (levels[0].size() != 1 || !levels[0][0].chords().empty())
    throw std::logic_error("orbit poset must have the identity as its unique minimum");
  table.entries[levels[0][0]] = identity_entry(ring);

  for (int d = 1; d <= maxdim; ++d) {
    const auto& level = levels[static_cast<size_t>(d)];
    std::vector<Poly> results(level.size());
    std::vector<std::string> errors(level.size());
    parallel_for(jobs, level.size(), [&](std::size_t k) {
      try {
        const Involution& pi = level[k];
        const auto chords = minimal_chords(pi);
        Poly value;
        for (size_t m = 0; m < chords.size(); ++m) {
          const auto [a, b] = chords[m];
          const Poly w = ring.weight(a, b);
          Poly sum = ring.zero();
          for (const Involution& rho : rec.covers.at(pi))
            if (rho(a) != b) sum = sum + table.entries.at(rho).exact_div(w);
          if (m == 0) {
            value = sum;
          } else if (sum != value) {
            throw std::runtime_error("minimal chords disagree at " + pat(pi));
          }
        }
        results[k] = value;
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    });
    for (const auto& err : errors)
      if (!err.empty()) throw std::runtime_error(err);
    for (size_t k = 0; k < level.size(); ++k)
      table.entries[level[k]] = results[k];
  }

  for (const JosephReport& rep : {verify_jtable(table), hotta_checks(table)})
    for (const auto& item : rep.items)
      if (!item.pass)
        throw std::runtime_error("joseph table failed check '" + item.check +
                                 "': " + item.detail);
  return table;
}

JTable leading_form_table(const PsiTable& psi) {
  const int N = psi.N;
  const int n = N / 2;
  const ZRing ring(N);
  JTable table;
  table.N = N;
  table.method = "leading-form";
  for (const auto& [pi, poly] : psi.entries) {
    const int expo = poly.degree_in(1);
    const int want = n * n - n - crossings(pi);
    if (expo != want)
      throw std::runtime_error("top B-exponent of " + pat(pi) + " is " +
                               std::to_string(expo) + ", expected " +
                               std::to_string(want));
    std::vector<Poly::Term> lead;
    for (const auto& [m, c] : poly.terms())
      if (m[1] == expo) {
        Monomial stripped = m;
        stripped.set(1, 0);
        lead.emplace_back(stripped, c);
      }
    table.entries[pi] = Poly::from_terms(poly.nvars(), std::move(lead));
  }
  const JosephReport rep = verify_jtable(table);
  for (const auto& item : rep.items)
    if (!item.pass)
      throw std::runtime_error("joseph table failed check '" + item.check +
                               "': " + item.detail);
  return table;
}

JosephReport verify_jtable(const JTable& table,
                           const std::vector<std::string>& checks) {
  const auto names = expand_jchecks(checks);
  const ZRing ring(table.N);
  const auto domain = jdomain(table);
  JosephReport rep;

  for (const auto& name : names) {
    std::string detail;
    if (name == "degree") {
      if (table.entries.size() != domain.size())
        detail = "expected " + std::to_string(domain.size()) + " entries, have " +
                 std::to_string(table.entries.size());
      const int total = table.N * (table.N - 1) / 2;
      for (const Involution& pi : domain) {
        if (!detail.empty()) break;
        const auto it = table.entries.find(pi);
        if (it == table.entries.end()) {
          detail = "missing entry " + pat(pi);
          break;
        }
        const Poly& p = it->second;
        const int want = total - dim_orbit(pi);
        if (p.is_zero() || !p.homogeneous() || p.degree() != want)
          detail = "entry " + pat(pi) + " is not homogeneous of degree " +
                   std::to_string(want);
        else if (p.degree_in(1) != 0)
          detail = "entry " + pat(pi) + " involves B";
        else if (pi.chords().empty() && p != identity_entry(ring))
          detail = "identity entry differs from the weight product";
      }
    } else if (name == "positivity") {
      std::vector<Rat> point(static_cast<size_t>(ring.nvars()), Rat(0));
      point[0] = Rat(1);  // A = 1, B and all z at 0
      for (const auto& [pi, p] : table.entries) {
        if (p.is_zero() || p.evaluate(point) <= 0) {
          detail = "entry " + pat(pi) + " is not positive at A=1, z=0";
          break;
        }
      }
    }
    rep.items.push_back({name, detail.empty(), detail});
  }
  return rep;
}

JosephReport hotta_checks(const JTable& table) {
  const ZRing ring(table.N);
  JosephReport rep;

  std::string detail;
  for (const auto& [sigma, J] : table.entries) {
    if (!detail.empty()) break;
    for (int i = 1; i < table.N && detail.empty(); ++i) {
      if (sigma(i) != i + 1) continue;
      const Poly lhs = -(ring.weight(i, i + 1) * ring.divided_difference(i, J));
      Poly rhs = ring.zero();
      for (const auto& tau : contraction_preimages(sigma, i))
        rhs = rhs + table.entries.at(tau);
      if (lhs != rhs)
        detail = "contraction fails at " + pat(sigma) + ", i=" + std::to_string(i);
    }
  }
  rep.items.push_back({"contraction", detail.empty(), detail});

  detail.clear();
  for (const auto& [sigma, J] : table.entries) {
    if (!detail.empty()) break;
    for (int i = 1; i < table.N && detail.empty(); ++i) {
      if (sigma.is_fixed(i) || sigma.is_fixed(i + 1) || sigma(i) == i + 1)
        continue;
      const std::pair<int, int> c1{std::min(i, sigma(i)), std::max(i, sigma(i))};
      const std::pair<int, int> c2{std::min(i + 1, sigma(i + 1)),
                                   std::max(i + 1, sigma(i + 1))};
      if (!chords_cross(c1, c2)) continue;
      const Poly wb = ring.A() + ring.z(i + 1) - ring.z(i);
      const Poly lhs = -ring.divided_difference(i, wb * J);
      const Poly rhs = wb * table.entries.at(conj_adjacent(sigma, i));
      if (lhs != rhs)
        detail = "uncrossing fails at " + pat(sigma) + ", i=" + std::to_string(i);
    }
  }
  rep.items.push_back({"uncrossing", detail.empty(), detail});
  return rep;
}

SchubertPoly double_schubert(const std::vector<int>& perm) {
  check_perm(perm);
  const int n = static_cast<int>(perm.size());
  if (2 * n > Monomial::kMaxVars)
    throw std::invalid_argument("permutation too large for the variable budget");

  std::map<std::vector<int>, Poly> memo;
  std::vector<int> w0(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w0[static_cast<size_t>(i)] = n - i;
  Poly top = Poly::constant(2 * n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) top = top * (schub_x(n, i) - schub_y(n, j));
  memo[w0] = top;

  // Descend from the longest element: every ascent i of rho lifts to the
  // longer rho*s_i, and all lifts must project to the same polynomial.
  auto compute = [&](auto&& self, const std::vector<int>& rho) -> Poly {
    if (auto it = memo.find(rho); it != memo.end()) return it->second;
    Poly value;
    bool have = false;
    for (int i = 1; i < n; ++i) {
      if (rho[static_cast<size_t>(i - 1)] > rho[static_cast<size_t>(i)]) continue;
      std::vector<int> longer = rho;
      std::swap(longer[static_cast<size_t>(i - 1)], longer[static_cast<size_t>(i)]);
      const Poly cand = schub_dd(n, i, self(self, longer));
      if (!have) {
        value = cand;
        have = true;
      } else if (cand != value) {
        throw std::runtime_error("descent recursion disagrees at " + perm_str(rho));
      }
    }
    if (!have) throw std::logic_error("permutation without ascent below the top");
    memo[rho] = value;
    return value;
  };

  SchubertPoly out;
  out.n = n;
  out.perm = perm;
  out.poly = compute(compute, perm);
  return out;
}

JosephReport doubschub_check(const JTable& table) {
  if (table.N % 2 != 0)
    throw std::invalid_argument("permutation sector needs even N");
  const int n = table.N / 2;
  const ZRing ring(table.N);

  Poly triangles = ring.constant(1);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) triangles = triangles * ring.weight(i, j);
  for (int i = n + 1; i < 2 * n; ++i)
    for (int j = i + 1; j <= 2 * n; ++j) triangles = triangles * ring.weight(i, j);

  std::vector<Poly> displayed, alternate;
  for (int i = n; i >= 1; --i) displayed.push_back(ring.A() + ring.z(i));
  for (int j = 1; j <= n; ++j) displayed.push_back(ring.z(n + j));
  for (int i = n; i >= 1; --i) alternate.push_back(ring.z(i));
  for (int j = 1; j <= n; ++j) alternate.push_back(ring.z(n + j) - ring.A());

  JosephReport rep;
  std::string schub_detail, subst_detail;
  std::vector<int> rho(static_cast<size_t>(n));
  std::iota(rho.begin(), rho.end(), 1);
  do {
    const SchubertPoly S = double_schubert(rho);
    const Poly sub1 = S.poly.substitute(displayed);
    if (subst_detail.empty() && sub1 != S.poly.substitute(alternate))
      subst_detail = "substitutions disagree at rho=" + perm_str(rho);
    if (schub_detail.empty()) {
      std::vector<int> img(static_cast<size_t>(table.N));
      for (int i = 1; i <= n; ++i) {
        const int j = n + rho[static_cast<size_t>(n - i)];
        img[static_cast<size_t>(i - 1)] = j;
        img[static_cast<size_t>(j - 1)] = i;
      }
      const Involution pi = Involution::from_pairing(img);
      if (table.entries.at(pi) != sub1 * triangles)
        schub_detail = "mismatch at rho=" + perm_str(rho) + ", pi=" + pat(pi);
    }
  } while (std::next_permutation(rho.begin(), rho.end()));

  rep.items.push_back({"double-schubert", schub_detail.empty(), schub_detail});
  rep.items.push_back({"substitution", subst_detail.empty(), subst_detail});
  return rep;
}

std::string jtable_to_json(const JTable& table, bool pretty) {
  const ZRing ring(table.N);
  nlohmann::ordered_json obj;
  obj["v"] = 1;
  obj["N"] = table.N;
  obj["method"] = table.method;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Involution& pi : jdomain(table)) {
    const auto it = table.entries.find(pi);
    if (it == table.entries.end())
      throw std::invalid_argument("cannot serialize a partial table (missing " +
                                  pat(pi) + ")");
    nlohmann::ordered_json entry;
    entry["pattern"] = pat(pi);
    entry["poly"] = nlohmann::ordered_json::parse(poly_to_json(ring, it->second));
    arr.push_back(std::move(entry));
  }
  obj["entries"] = std::move(arr);
  return pretty ? obj.dump(2) : obj.dump();
}

JTable jtable_from_json(const std::string& text) {
  const auto obj = nlohmann::json::parse(text);
  if (!obj.contains("v") || obj.at("v").get<int>() != 1)
    throw std::invalid_argument("unsupported table schema");
  JTable table;
  table.N = obj.at("N").get<int>();
  if (table.N < 1) throw std::invalid_argument("table size must be positive");
  table.method = obj.at("method").get<std::string>();
  if (table.method != "melnikov" && table.method != "leading-form")
    throw std::invalid_argument("unknown table method: " + table.method);
  const ZRing ring(table.N);
  for (const auto& entry : obj.at("entries")) {
    const Involution pi =
        Involution::parse(entry.at("pattern").get<std::string>(), table.N);
    table.entries[pi] = poly_from_json(ring, entry.at("poly").dump());
  }
  return table;
}

JTable load_or_build_jtable(int N, const std::string& method,
                            const std::string& cache_dir, int jobs, int bound) {
  namespace fs = std::filesystem;
  const fs::path file = fs::path(cache_dir) /
                        ("joseph-N" + std::to_string(N) + "-" + method + ".json");
  try {
    std::ifstream in(file);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      JTable cached = jtable_from_json(buf.str());
      if (cached.N == N && cached.method == method &&
          verify_jtable(cached, {"degree"}).all_pass())
        return cached;
    }
  } catch (const std::exception&) {
    // Fall through to a rebuild on any parse or validation error.
  }

  JTable table;
  if (method == "melnikov") {
    table = melnikov_solve(N, bound, jobs);
  } else if (method == "leading-form") {
    table = leading_form_table(load_or_solve(N, cache_dir, jobs, bound));
  } else {
    throw std::invalid_argument("unknown table method: " + method);
  }

  if (!file.parent_path().empty()) fs::create_directories(file.parent_path());
  std::ofstream out(file);
  out << jtable_to_json(table) << '\n';
  return table;
}

}  // namespace brl
