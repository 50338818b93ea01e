#include "csh/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace csh {

partition cycle_type(const permutation& p) {
  std::vector<char> seen(p.n(), 0);
  std::vector<int> lens;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return partition(std::move(lens));
}

namespace {

std::map<std::pair<std::vector<int>, std::vector<int>>, i64> g_char_memo;
std::mutex g_char_mutex;

// Beta-set formulation: removing a border strip of length k from lambda
// corresponds to replacing a beta number b by b-k when b-k is fresh; the
// height sign is (-1)^(number of beta numbers strictly between b-k and b).
i64 mn_rec(std::vector<int> beta, std::vector<int> mu) {
  if (mu.empty()) return 1;
  {
    std::lock_guard<std::mutex> lk(g_char_mutex);
    auto it = g_char_memo.find({beta, mu});
    if (it != g_char_memo.end()) return it->second;
  }
  int k = mu[0];
  std::vector<int> rest(mu.begin() + 1, mu.end());
  i64 total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int nb = b - k;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int crossings = 0;
    for (int x : beta)
      if (x > nb && x < b) ++crossings;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    i64 sub = mn_rec(std::move(nbeta), rest);
    total += (crossings % 2 == 0 ? 1 : -1) * sub;
  }
  std::lock_guard<std::mutex> lk(g_char_mutex);
  g_char_memo[{std::move(beta), std::move(mu)}] = total;
  return total;
}

}  // namespace

i64 mn_character(const partition& lambda, const partition& mu) {
  if (lambda.n() != mu.n()) throw domain_error("mn_character: |lambda| != |mu|");
  int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda.parts[i] + (l - 1 - i);
  // mu sorted descending already; recursion removes largest strips first.
  std::vector<int> mv = mu.parts;
  std::sort(mv.rbegin(), mv.rend());
  return mn_rec(std::move(beta), std::move(mv));
}

std::vector<std::vector<i64>> character_table(int n) {
  std::vector<partition> parts = partitions_of(n);
  std::vector<std::vector<i64>> table(parts.size(), std::vector<i64>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j) table[i][j] = mn_character(parts[i], parts[j]);
  return table;
}

}  // namespace csh
