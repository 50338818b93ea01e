#include "csh/group_algebra.hpp"

#include <algorithm>
#include <numeric>

namespace csh {

permutation::permutation(std::vector<int> v) : img(std::move(v)) {
  std::vector<char> seen(img.size(), 0);
  for (int x : img) {
    if (x < 0 || x >= (int)img.size() || seen[x]) throw domain_error("not a permutation");
    seen[x] = 1;
  }
}

permutation permutation::inverse() const {
  permutation r((int)img.size());
  for (int i = 0; i < (int)img.size(); ++i) r.img[img[i]] = i;
  return r;
}

permutation permutation::operator*(const permutation& b) const {
  if (n() != b.n()) throw domain_error("permutation degree mismatch");
  permutation r(n());
  for (int i = 0; i < n(); ++i) r.img[i] = img[b.img[i]];
  return r;
}

bool permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img[i] != i) return false;
  return true;
}

int permutation::sign() const {
  std::vector<char> seen(img.size(), 0);
  int s = 1;
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::vector<permutation> permutation::all(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<permutation> out;
  do {
    out.push_back(permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

permutation permutation::transposition(int n, int a, int b) {
  permutation p(n);
  std::swap(p.img[a - 1], p.img[b - 1]);
  return p;
}

std::string permutation::to_string() const {
  std::vector<char> seen(img.size(), 0);
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || img[i] == i) continue;
    s += "(";
    bool first = true;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j + 1);
      first = false;
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

numbering act(const permutation& p, const numbering& t) {
  numbering r = t;
  for (auto& row : r.rows)
    for (int& v : row) v = p.apply1(v);
  return r;
}

permutation sigma(const numbering& t, const numbering& s) {
  if (t.shape() != s.shape()) throw domain_error("sigma: shape mismatch");
  permutation p(t.n());
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows[i].size(); ++j) p.img[t.rows[i][j] - 1] = s.rows[i][j] - 1;
  return p;
}

group_algebra_element group_algebra_element::unit(int n) {
  group_algebra_element e{n, {}};
  e.terms[permutation(n)] = 1;
  return e;
}

group_algebra_element group_algebra_element::of(const permutation& p, i64 c) {
  group_algebra_element e{p.n(), {}};
  if (c != 0) e.terms[p] = c;
  return e;
}

void group_algebra_element::add_term(const permutation& p, i64 c) {
  if (c == 0) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, c);
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
  }
}

group_algebra_element group_algebra_element::operator+(const group_algebra_element& o) const {
  if (deg != o.deg) throw domain_error("group algebra degree mismatch");
  group_algebra_element r = *this;
  for (auto& [p, c] : o.terms) r.add_term(p, c);
  return r;
}

group_algebra_element group_algebra_element::operator-(const group_algebra_element& o) const {
  if (deg != o.deg) throw domain_error("group algebra degree mismatch");
  group_algebra_element r = *this;
  for (auto& [p, c] : o.terms) r.add_term(p, -c);
  return r;
}

group_algebra_element group_algebra_element::operator*(const group_algebra_element& o) const {
  if (deg != o.deg) throw domain_error("group algebra degree mismatch");
  group_algebra_element r{deg, {}};
  for (auto& [p, c] : terms)
    for (auto& [q, d] : o.terms) r.add_term(p * q, checked_mul(c, d));
  return r;
}

group_algebra_element group_algebra_element::scaled(i64 c) const {
  group_algebra_element r{deg, {}};
  if (c == 0) return r;
  for (auto& [p, d] : terms) r.terms[p] = checked_mul(c, d);
  return r;
}

std::string group_algebra_element::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto& [p, c] : terms) {
    if (!s.empty()) s += c >= 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    i64 a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += p.to_string();
  }
  return s;
}

namespace {
// Enumerate the row group (or column group) as products of per-block
// permutations of the given index blocks (1-based entries).
void block_group(const std::vector<std::vector<int>>& blocks, int n, size_t bi, permutation cur,
                 std::vector<permutation>& out) {
  if (bi == blocks.size()) {
    out.push_back(cur);
    return;
  }
  std::vector<int> b = blocks[bi];
  std::sort(b.begin(), b.end());
  std::vector<int> target = b;
  do {
    permutation p(n);
    for (size_t i = 0; i < b.size(); ++i) p.img[b[i] - 1] = target[i] - 1;
    block_group(blocks, n, bi + 1, p * cur, out);
  } while (std::next_permutation(target.begin(), target.end()));
}
}  // namespace

group_algebra_element young_a(const numbering& t) {
  std::vector<permutation> g;
  block_group(t.rows, t.n(), 0, permutation(t.n()), g);
  group_algebra_element r{t.n(), {}};
  for (auto& p : g) r.add_term(p, 1);
  return r;
}

group_algebra_element young_b(const numbering& t) {
  std::vector<std::vector<int>> cols;
  for (size_t j = 0; j < t.rows[0].size(); ++j) {
    std::vector<int> col;
    for (size_t i = 0; i < t.rows.size(); ++i)
      if (j < t.rows[i].size()) col.push_back(t.rows[i][j]);
    cols.push_back(std::move(col));
  }
  std::vector<permutation> g;
  block_group(cols, t.n(), 0, permutation(t.n()), g);
  group_algebra_element r{t.n(), {}};
  for (auto& p : g) r.add_term(p, p.sign());
  return r;
}

group_algebra_element young_c(const numbering& t) { return young_b(t) * young_a(t); }

group_algebra_element v_element(const numbering& t, const numbering& s) {
  permutation sg = sigma(t, s);
  group_algebra_element lhs = group_algebra_element::of(sg) * young_c(t);
  group_algebra_element rhs = young_c(s) * group_algebra_element::of(sg);
  if (!(lhs == rhs)) throw consistency_error("v_element: sigma b_T a_T != b_S a_S sigma");
  return lhs;
}

}  // namespace csh
