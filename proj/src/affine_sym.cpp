#include "brl/affine_sym.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brl {

namespace {

// Euclidean residue of j in 1..N.
int residue(long long j, int N) {
  long long r = (j - 1) % N;
  if (r < 0) r += N;
  return static_cast<int>(r) + 1;
}

int cyc(int i, int N) { return (i - 1) % N + (((i - 1) % N) < 0 ? N : 0) + 1; }

}  // namespace

AffinePermutation AffinePermutation::identity(int N) {
  std::vector<long long> w(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) w[static_cast<size_t>(i - 1)] = i;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::generator(int N, int i) {
  if (N < 2 || i < 1 || i > N) throw std::invalid_argument("generator index out of range");
  std::vector<long long> w(static_cast<size_t>(N));
  int ip = cyc(i + 1, N);
  for (int j = 1; j <= N; ++j) {
    long long v = j;
    if (j == i) v = j + 1;
    if (j == ip) v = j - 1;
    w[static_cast<size_t>(j - 1)] = v;
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::rotation(int N) {
  std::vector<long long> w(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) w[static_cast<size_t>(i - 1)] = i + 1;
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_window(std::vector<long long> w) {
  int N = static_cast<int>(w.size());
  if (N < 1) throw std::invalid_argument("empty window");
  std::set<int> seen;
  for (long long v : w) seen.insert(residue(v, N));
  if (static_cast<int>(seen.size()) != N)
    throw std::invalid_argument("window residues must be pairwise distinct");
  return AffinePermutation(std::move(w));
}

long long AffinePermutation::apply(long long j) const {
  int N = size();
  long long shift = j - residue(j, N);  // multiple of N
  return w_[static_cast<size_t>(residue(j, N) - 1)] + shift;
}

long long AffinePermutation::ball_sum() const {
  long long s = 0;
  for (int i = 1; i <= size(); ++i) s += w_[static_cast<size_t>(i - 1)] - i;
  return s;
}

AffinePermutation AffinePermutation::inverse() const {
  int N = size();
  std::vector<long long> inv(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i) {
    long long v = w_[static_cast<size_t>(i - 1)];
    int r = residue(v, N);
    inv[static_cast<size_t>(r - 1)] = i + (r - v);
  }
  return AffinePermutation(std::move(inv));
}

AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("period mismatch");
  std::vector<long long> w(static_cast<size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) w[static_cast<size_t>(i - 1)] = a.apply(b.apply(i));
  return AffinePermutation(std::move(w));
}

std::string AffinePermutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < size(); ++i) out << (i ? "," : "") << w_[static_cast<size_t>(i)];
  out << ']';
  return out.str();
}

AffinePermutation AffinePermutation::parse(const std::string& text) {
  std::vector<long long> w;
  std::string body = text;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    w.push_back(std::stoll(tok));
  }
  if (w.empty()) throw std::invalid_argument("empty window text");
  return from_window(std::move(w));
}

AffinePermutation word_element(int N, const std::vector<int>& word) {
  AffinePermutation e = AffinePermutation::identity(N);
  for (int letter : word) e = compose(AffinePermutation::generator(N, letter), e);
  return e;
}

std::vector<int> project(const AffinePermutation& s) {
  int N = s.size();
  std::vector<int> p(static_cast<size_t>(N) + 1, 0);
  for (int i = 1; i <= N; ++i) p[static_cast<size_t>(i)] = residue(s.apply(i), N);
  return p;
}

Involution conj_act(const AffinePermutation& s, const Involution& pi) {
  int N = pi.size();
  if (s.size() != N) throw std::invalid_argument("period mismatch");
  std::vector<int> p = project(s);
  std::vector<int> q(static_cast<size_t>(N) + 1, 0);
  for (int i = 1; i <= N; ++i) q[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
  std::vector<int> img(static_cast<size_t>(N), 0);
  for (int x = 1; x <= N; ++x)
    img[static_cast<size_t>(x - 1)] = p[static_cast<size_t>(pi(q[static_cast<size_t>(x)]))];
  return Involution::from_pairing(img);
}

bool is_tadpole_free(const std::vector<int>& word, const Involution& pi) {
  int N = pi.size();
  Involution cur = pi;
  for (int letter : word) {
    if (letter < 1 || letter > N) throw std::invalid_argument("letter out of range");
    if (cur(letter) == cyc(letter + 1, N)) return false;
    cur = f_act(letter, cur);
  }
  return true;
}

bool groupoid_membership(const AffinePermutation& s, const Involution& pi, const Involution& pip) {
  int N = pi.size();
  if (s.size() != N || pip.size() != N) throw std::invalid_argument("size mismatch");
  if (!(conj_act(s, pi) == pip)) return false;
  for (int i = 1; i <= N; ++i) {
    int m = pi(i);
    if (m == i) continue;
    long long d = m - i;
    long long up = d > 0 ? d : d + N;    // nearest partner above i
    long long down = up - N;             // nearest partner below
    if (!(s.apply(i) < s.apply(i + up))) return false;
    if (!(s.apply(i + down) < s.apply(i))) return false;
  }
  return true;
}

std::vector<int> tadpole_free_word(const Involution& pi, const Involution& pip) {
  int N = pi.size();
  if (pip.size() != N) throw std::invalid_argument("size mismatch");
  if (pi == pip) return {};
  std::map<Involution, std::pair<Involution, int>> parent;
  std::deque<Involution> queue = {pi};
  parent.emplace(pi, std::make_pair(pi, 0));
  while (!queue.empty()) {
    Involution cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= N; ++i) {
      if (cur(i) == cyc(i + 1, N)) continue;  // would create a tadpole
      Involution next = f_act(i, cur);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, i));
      if (next == pip) {
        std::vector<int> word;
        Involution at = next;
        while (!(at == pi)) {
          auto [prev, letter] = parent.at(at);
          word.push_back(letter);
          at = prev;
        }
        std::reverse(word.begin(), word.end());
        return word;
      }
      queue.push_back(next);
    }
  }
  throw std::logic_error("tadpole-free word search exhausted (unreachable)");
}

Involution base_pattern(int N) {
  if (N < 2 || N % 2) throw std::invalid_argument("base pattern needs even N");
  int n = N / 2;
  std::vector<int> img(static_cast<size_t>(N), 0);
  for (int i = 1; i <= n; ++i) {
    img[static_cast<size_t>(i - 1)] = i + n;
    img[static_cast<size_t>(i + n - 1)] = i;
  }
  return Involution::from_pairing(img);
}

AffinePermutation stab_U(int N, int i) {
  if (N % 2) throw std::invalid_argument("even N required");
  int n = N / 2;
  std::vector<int> word;  // letters in written order, leftmost first
  for (int k = 0; k < n; ++k) {
    word.push_back(cyc(i + n - k, N));
    word.push_back(cyc(i - k, N));
  }
  word.push_back(cyc(i, N));
  word.push_back(cyc(i + n, N));
  // Written order is the reverse of application order.
  std::reverse(word.begin(), word.end());
  return word_element(N, word);
}

AffinePermutation stab_T(int N, int i) {
  return compose(stab_U(N, i), stab_U(N, cyc(i + 1, N)).inverse());
}

StabilizerReport stabilizer_check(int N, int max_len) {
  if (N % 2 || N < 2) throw std::invalid_argument("even N >= 2 required");
  if (max_len < 1) throw std::invalid_argument("max_len must be positive");
  int n = N / 2;
  Involution pi0 = base_pattern(N);
  StabilizerReport rep;
  auto add = [&](const std::string& name, bool pass) { rep.items.push_back({name, pass}); };

  bool gens_ok = true;
  std::set<AffinePermutation> subgens;
  for (int i = 1; i <= N; ++i) {
    AffinePermutation g =
        compose(AffinePermutation::generator(N, i), AffinePermutation::generator(N, cyc(i + n, N)));
    if (!groupoid_membership(g, pi0, pi0)) gens_ok = false;
    subgens.insert(g);
    subgens.insert(g.inverse());
  }
  add("each f_i f_{i+n} stabilizes the base pattern", gens_ok);

  // Ball of all products of at most max_len generators.
  std::set<AffinePermutation> ball = {AffinePermutation::identity(N)};
  std::set<AffinePermutation> frontier = ball;
  long long max_disp = 0;
  for (int len = 0; len < max_len; ++len) {
    std::set<AffinePermutation> next;
    for (const auto& e : frontier)
      for (int i = 1; i <= N; ++i) {
        AffinePermutation f = compose(AffinePermutation::generator(N, i), e);
        if (!ball.count(f)) next.insert(f);
      }
    for (const auto& e : next) ball.insert(e);
    frontier = std::move(next);
  }
  for (const auto& e : ball)
    for (int i = 1; i <= N; ++i)
      max_disp = std::max(max_disp, std::llabs(e.window()[static_cast<size_t>(i - 1)] - i));

  // Subgroup slice: BFS over products of the f_i f_{i+n}, displacement-capped
  // with slack so boundary elements are still reached.
  long long cap = max_disp + 4;
  std::set<AffinePermutation> sub = {AffinePermutation::identity(N)};
  std::deque<AffinePermutation> queue = {AffinePermutation::identity(N)};
  while (!queue.empty()) {
    AffinePermutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : subgens) {
      AffinePermutation f = compose(cur, g);
      bool inside = true;
      for (int i = 1; i <= N; ++i)
        if (std::llabs(f.window()[static_cast<size_t>(i - 1)] - i) > cap) inside = false;
      if (!inside || sub.count(f)) continue;
      sub.insert(f);
      queue.push_back(f);
    }
  }

  bool members_expressible = true, subgroup_members = true;
  for (const auto& e : ball)
    if (groupoid_membership(e, pi0, pi0) && !sub.count(e)) members_expressible = false;
  for (const auto& e : sub)
    if (!groupoid_membership(e, pi0, pi0)) subgroup_members = false;
  add("every stabilizer member is a product of the f_i f_{i+n}", members_expressible);
  add("every subgroup element stabilizes the base pattern", subgroup_members);

  bool ut_ok = true;
  for (int i = 1; i <= N; ++i) {
    if (!groupoid_membership(stab_U(N, i), pi0, pi0)) ut_ok = false;
    if (!groupoid_membership(stab_T(N, i), pi0, pi0)) ut_ok = false;
  }
  add("U_i and T_i stabilize the base pattern", ut_ok);

  return rep;
}

}  // namespace brl
