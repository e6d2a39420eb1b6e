#include "brl/brauer_scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace brl {

namespace {

// Normalizes a row index into 1..N, shifting the column along the period.
void normalize(int N, long& i, long& j) {
  long r = i % N;
  if (r <= 0) r += N;
  j -= i - r;
  i = r;
}

std::string pos_str(long i, long j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Rank by fraction-free elimination; every intermediate entry is a minor of
// the input, so the divisions are exact.
int integer_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  Int prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    for (size_t r = row + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        Int num = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        Int q, rem;
        boost::multiprecision::divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("elimination step is not exact");
        a[r][c] = q;
      }
      a[r][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

BandMatrix::BandMatrix(int N) : n_(N) {
  if (N < 1) throw std::invalid_argument("matrix size must be positive");
}

Rat BandMatrix::get(long i, long j) const {
  normalize(n_, i, j);
  if (j <= i) return Rat(0);
  if (j - i >= n_)
    throw std::invalid_argument("entry " + pos_str(i, j) +
                                " is not well-defined in the quotient");
  const auto it = entries_.find({static_cast<int>(i), static_cast<int>(j)});
  return it == entries_.end() ? Rat(0) : it->second;
}

void BandMatrix::set(long i, long j, const Rat& value) {
  normalize(n_, i, j);
  if (j <= i || j - i >= n_)
    throw std::invalid_argument("entry " + pos_str(i, j) +
                                " is outside the window");
  const std::pair<int, int> pos{static_cast<int>(i), static_cast<int>(j)};
  if (value == 0)
    entries_.erase(pos);
  else
    entries_[pos] = value;
}

SquareResult square(const BandMatrix& M) {
  const int N = M.N();
  SquareResult out{BandMatrix(N), std::vector<Rat>(static_cast<size_t>(N), Rat(0))};
  for (const auto& [ik, u] : M.entries()) {
    const long i = ik.first, k = ik.second;
    const long r = (k - 1) % N + 1;  // row k of the lift reads row r
    for (const auto& [rm, v] : M.entries()) {
      if (rm.first != r) continue;
      const long j = rm.second + (k - r);
      if (j - i < N)
        out.inside.set(i, j, out.inside.get(i, j) + u * v);
      else if (j - i == N)
        out.superdiag[static_cast<size_t>(i - 1)] += u * v;
      // deeper products die in the quotient
    }
  }
  return out;
}

BandMatrix underline(const Involution& pi) {
  if (!pi.fixed_points().empty())
    throw std::invalid_argument("pattern must be fixed point free");
  const int N = pi.size();
  BandMatrix M(N);
  for (int i = 1; i <= N; ++i) {
    const int j = pi(i);
    M.set(i, j > i ? j : j + N, Rat(1));
  }
  return M;
}

GenericElement generic_element(const std::vector<int>& rho,
                               const std::vector<Rat>& seeds) {
  const int N = static_cast<int>(rho.size());
  if (N < 1) throw std::invalid_argument("rho must be nonempty");
  if (seeds.size() != rho.size())
    throw std::invalid_argument("need one seed per row");
  for (const Rat& s : seeds)
    if (s == 0) throw std::invalid_argument("seeds must be nonzero");

  std::vector<int> hits(static_cast<size_t>(N) + 1, 0);
  for (int i = 1; i <= N; ++i) {
    const int j = rho[static_cast<size_t>(i - 1)];
    if (j < 0 || j > N)
      throw std::invalid_argument("rho images must lie in 0..N");
    if (j == i)
      throw std::invalid_argument("rho may not map an index to itself");
    if (j != 0 && ++hits[static_cast<size_t>(j)] > 1)
      throw std::invalid_argument("rho must be injective where defined");
  }
  for (int i = 1; i <= N; ++i) {
    const int j = rho[static_cast<size_t>(i - 1)];
    if (j != 0 && rho[static_cast<size_t>(j - 1)] != 0 &&
        rho[static_cast<size_t>(j - 1)] != i)
      throw std::invalid_argument("rho(rho(i)) must return to i when defined");
  }

  BandMatrix M(N);
  for (int i = 1; i <= N; ++i) {
    const int j = rho[static_cast<size_t>(i - 1)];
    if (j != 0) M.set(i, j > i ? j : j + N, seeds[static_cast<size_t>(i - 1)]);
  }

  // Pair each move that lands inside the upper triangle, fix everything
  // else; the strict upper triangle of the result has entries in the same
  // places as the 1..N submatrix of M. On involutions this is the same as
  // promoting each leftward move to a transposition.
  std::vector<int> img(static_cast<size_t>(N));
  std::iota(img.begin(), img.end(), 1);
  for (int j = 1; j <= N; ++j) {
    const int m = rho[static_cast<size_t>(j - 1)];
    if (m != 0 && m > j) {
      img[static_cast<size_t>(j - 1)] = m;
      img[static_cast<size_t>(m - 1)] = j;
    }
  }

  const auto sq = square(M);
  for (int i = 1; i <= N; ++i) {
    const int j = rho[static_cast<size_t>(i - 1)];
    const bool expect = j != 0 && rho[static_cast<size_t>(j - 1)] != 0;
    if ((sq.superdiag[static_cast<size_t>(i - 1)] != 0) != expect)
      throw NonGenericError("superdiagonal square at " + std::to_string(i) +
                            " is unexpectedly " + (expect ? "zero" : "nonzero"));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      const Rat& a = sq.superdiag[static_cast<size_t>(i - 1)];
      if (a == 0 || a != sq.superdiag[static_cast<size_t>(j - 1)]) continue;
      if (rho[static_cast<size_t>(i - 1)] != j)
        throw NonGenericError("seed products collide at rows " +
                              std::to_string(i) + " and " + std::to_string(j));
    }

  return {std::move(M), Involution::from_pairing(img)};
}

Involution link_pattern_of(const BandMatrix& M) {
  if (M.N() < 1) throw std::invalid_argument("matrix is uninitialized");
  const auto sq = square(M);
  std::map<Rat, std::vector<int>> classes;
  for (int i = 1; i <= M.N(); ++i)
    classes[sq.superdiag[static_cast<size_t>(i - 1)]].push_back(i);

  std::vector<int> img(static_cast<size_t>(M.N()));
  std::iota(img.begin(), img.end(), 1);
  for (const auto& [value, idx] : classes) {
    if (value == 0) {
      if (idx.size() > 1)
        throw NonGenericError(std::to_string(idx.size()) +
                              " superdiagonal squares vanish");
      continue;  // a single zero index stays fixed
    }
    if (idx.size() != 2)
      throw NonGenericError("superdiagonal square " + value.str() +
                            " occurs at " + std::to_string(idx.size()) +
                            " indices");
    img[static_cast<size_t>(idx[0] - 1)] = idx[1];
    img[static_cast<size_t>(idx[1] - 1)] = idx[0];
  }
  return Involution::from_pairing(img);
}

CompReport check_compeqns(const BandMatrix& M, const Involution& pi) {
  if (pi.size() != M.N())
    throw std::invalid_argument("pattern size differs from matrix size");
  const BandMatrix ref = underline(pi);  // rejects fixed points
  const int N = M.N();
  const auto sq = square(M);
  CompReport rep;

  std::string detail;
  if (!sq.inside.is_zero()) {
    const auto& [pos, v] = *sq.inside.entries().begin();
    detail = "square has entry " + v.str() + " at " + pos_str(pos.first, pos.second);
  }
  rep.items.push_back({"square", detail.empty(), detail});

  detail.clear();
  for (int i = 1; i <= N && detail.empty(); ++i)
    if (sq.superdiag[static_cast<size_t>(i - 1)] !=
        sq.superdiag[static_cast<size_t>(pi(i) - 1)])
      detail = "superdiagonal squares differ at " + std::to_string(i) + " and " +
               std::to_string(pi(i));
  rep.items.push_back({"superdiagonal", detail.empty(), detail});

  detail.clear();
  for (int i = 1; i <= N && detail.empty(); ++i)
    for (long j = i + 1; j < i + N && detail.empty(); ++j) {
      const int bound = southwest_rank(ref, i, j);
      const int have = southwest_rank(M, i, j);
      if (have > bound)
        detail = "rank southwest of " + pos_str(i, j) + " is " +
                 std::to_string(have) + ", bound " + std::to_string(bound);
    }
  rep.items.push_back({"rank", detail.empty(), detail});
  return rep;
}

int southwest_rank(const BandMatrix& M, long i, long j) {
  normalize(M.N(), i, j);
  if (j <= i) return 0;
  if (j - i >= M.N())
    throw std::invalid_argument("rank southwest of " + pos_str(i, j) +
                                " is not well-defined in the quotient");
  // Rows >= i and columns <= j meet the band in rows i..j-1, columns i+1..j.
  const size_t m = static_cast<size_t>(j - i);
  std::vector<std::vector<Int>> a(m, std::vector<Int>(m, Int(0)));
  for (size_t r = 0; r < m; ++r) {
    std::vector<Rat> row(m, Rat(0));
    Int scale = 1;
    for (size_t c = 0; c < m; ++c) {
      row[c] = M.get(i + static_cast<long>(r), i + 1 + static_cast<long>(c));
      scale = boost::multiprecision::lcm(scale, Int(denominator(row[c])));
    }
    for (size_t c = 0; c < m; ++c)
      a[r][c] = Int(numerator(row[c])) * (scale / Int(denominator(row[c])));
  }
  return integer_rank(std::move(a));
}

BandMatrix embed(const std::vector<std::vector<Rat>>& U) {
  const int N = static_cast<int>(U.size());
  if (N < 1) throw std::invalid_argument("matrix must be nonempty");
  BandMatrix M(N);
  for (int i = 0; i < N; ++i) {
    if (static_cast<int>(U[static_cast<size_t>(i)].size()) != N)
      throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < N; ++j) {
      const Rat& v = U[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (j <= i) {
        if (v != 0)
          throw std::invalid_argument("matrix must be strictly upper triangular");
      } else {
        M.set(i + 1, j + 1, v);
      }
    }
  }
  return M;
}

std::vector<std::vector<Rat>> project(const BandMatrix& M) {
  const int N = M.N();
  std::vector<std::vector<Rat>> U(static_cast<size_t>(N),
                                  std::vector<Rat>(static_cast<size_t>(N), Rat(0)));
  for (const auto& [pos, v] : M.entries())
    if (pos.second <= N)
      U[static_cast<size_t>(pos.first - 1)][static_cast<size_t>(pos.second - 1)] = v;
  return U;
}

std::string band_to_json(const BandMatrix& M, bool pretty) {
  nlohmann::ordered_json obj;
  obj["v"] = 1;
  obj["N"] = M.N();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [pos, v] : M.entries()) {
    nlohmann::ordered_json entry;
    entry["i"] = pos.first;
    entry["j"] = pos.second;
    entry["num"] = Int(numerator(v)).str();
    entry["den"] = Int(denominator(v)).str();
    arr.push_back(std::move(entry));
  }
  obj["entries"] = std::move(arr);
  return pretty ? obj.dump(2) : obj.dump();
}

BandMatrix band_from_json(const std::string& text) {
  const auto obj = nlohmann::json::parse(text);
  if (!obj.contains("v") || obj.at("v").get<int>() != 1)
    throw std::invalid_argument("unsupported matrix schema");
  const int N = obj.at("N").get<int>();
  if (N < 1) throw std::invalid_argument("matrix size must be positive");
  BandMatrix M(N);
  for (const auto& entry : obj.at("entries")) {
    const Int num(entry.at("num").get<std::string>());
    const Int den(entry.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator");
    M.set(entry.at("i").get<int>(), entry.at("j").get<int>(), Rat(num, den));
  }
  return M;
}

}  // namespace brl
