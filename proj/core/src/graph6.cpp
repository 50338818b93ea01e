#include <algorithm>

#include "csh/graph.hpp"

namespace csh {

// McKay's graph6: short form only (n <= 62). One printable char N(n)=n+63,
// then the upper triangle x(i,j), i<j, in column-major order (j=2..n, i<j),
// packed big-endian six bits per char, zero padded, each + 63.

graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw parse_error("graph6: empty string");
  unsigned char h = (unsigned char)s[0];
  if (h == 126)
    throw parse_error("graph6: extended (n > 62) forms are not supported (byte 0)");
  if (h < 63 || h > 125) throw parse_error("graph6: invalid header byte at offset 0");
  int n = h - 63;
  i64 bits = (i64)n * (n - 1) / 2;
  i64 need = (bits + 5) / 6;
  if ((i64)s.size() - 1 != need)
    throw parse_error("graph6: expected " + std::to_string(need) + " body bytes, got " +
                      std::to_string(s.size() - 1));
  std::vector<int> bitvec;
  bitvec.reserve(need * 6);
  for (i64 k = 0; k < need; ++k) {
    unsigned char c = (unsigned char)s[1 + k];
    if (c < 63 || c > 126)
      throw parse_error("graph6: out-of-range character at byte offset " + std::to_string(1 + k));
    int v = c - 63;
    for (int b = 5; b >= 0; --b) bitvec.push_back(v >> b & 1);
  }
  std::vector<std::pair<int, int>> edges;
  i64 pos = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (bitvec[pos++]) edges.emplace_back(i, j);
  for (; pos < (i64)bitvec.size(); ++pos)
    if (bitvec[pos]) throw parse_error("graph6: nonzero padding bits");
  return graph(n, std::move(edges));
}

std::string encode_graph6(const graph& g) {
  if (g.n > 62) throw size_error("encode_graph6: n <= 62 only (short form)");
  std::string out(1, char(g.n + 63));
  i64 bits = (i64)g.n * (g.n - 1) / 2;
  std::vector<int> bitvec(((bits + 5) / 6) * 6, 0);
  i64 pos = 0;
  for (int j = 2; j <= g.n; ++j)
    for (int i = 1; i < j; ++i) bitvec[pos++] = g.has_edge(i, j) ? 1 : 0;
  for (size_t k = 0; k + 5 < bitvec.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v << 1 | bitvec[k + b];
    out += char(v + 63);
  }
  return out;
}

}  // namespace csh
