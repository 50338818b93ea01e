#include "csh/partition.hpp"

#include <algorithm>
#include <numeric>

namespace csh {

partition::partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw domain_error("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw domain_error("partition parts must be weakly decreasing");
  }
}

int partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

partition partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty()) return partition{};
  c.resize(parts[0], 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) c[j]++;
  return partition(std::move(c));
}

bool partition::dominates(const partition& other) const {
  if (n() != other.n()) throw domain_error("dominance needs equal size");
  int a = 0, b = 0;
  size_t len = std::max(parts.size(), other.parts.size());
  for (size_t i = 0; i < len; ++i) {
    a += i < parts.size() ? parts[i] : 0;
    b += i < other.parts.size() ? other.parts[i] : 0;
    if (a < b) return false;
  }
  return true;
}

i64 partition::hook_length_count() const {
  partition conj = conjugate();
  // f^lambda = n! / prod(hooks); compute as an exact iterated quotient.
  std::vector<i64> hooks;
  for (int i = 0; i < length(); ++i)
    for (int j = 0; j < parts[i]; ++j)
      hooks.push_back((parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1);
  i64 num = 1;
  int k = 0;
  // Multiply n! in while dividing hooks greedily to limit growth.
  for (int v = 1; v <= n(); ++v) {
    num = checked_mul(num, v);
    while (k < (int)hooks.size() && num % hooks[k] == 0) num /= hooks[k++];
  }
  for (; k < (int)hooks.size(); ++k) num /= hooks[k];
  return num;
}

std::string partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

static void gen_parts(int n, int maxpart, std::vector<int>& cur, std::vector<partition>& out) {
  if (n == 0) {
    out.push_back(partition(cur));
    return;
  }
  for (int p = std::min(n, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<partition> partitions_of(int n) {
  std::vector<partition> out;
  std::vector<int> cur;
  gen_parts(n, n, cur, out);
  return out;
}

partition two_column_shape(int n, int k) {
  if (k < 0 || 2 * k > n) throw domain_error("two_column_shape: need 0 <= 2k <= n");
  std::vector<int> p(k, 2);
  p.resize(k + (n - 2 * k), 1);
  for (size_t i = k; i < p.size(); ++i) p[i] = 1;
  return partition(std::move(p));
}

}  // namespace csh
