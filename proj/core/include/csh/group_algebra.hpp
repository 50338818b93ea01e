#pragma once

#include <map>
#include <string>
#include <vector>

#include "csh/numbering.hpp"

namespace csh {

/// Permutation of {1..n}; img[i] = pi(i+1)-1 on 0-based storage.
/// Composition convention: (a*b)(i) = a(b(i)), i.e. b acts first.
struct permutation {
  std::vector<int> img;

  permutation() = default;
  explicit permutation(int n) : img(n) {
    for (int i = 0; i < n; ++i) img[i] = i;
  }
  explicit permutation(std::vector<int> v);

  int n() const { return (int)img.size(); }
  int apply1(int v) const { return img[v - 1] + 1; }  // action on 1-based values
  permutation inverse() const;
  permutation operator*(const permutation& b) const;
  bool is_identity() const;
  bool operator==(const permutation&) const = default;
  bool operator<(const permutation& o) const { return img < o.img; }

  int sign() const;
  /// All n! permutations of degree n in lexicographic img order.
  static std::vector<permutation> all(int n);
  static permutation transposition(int n, int a, int b);  // 1-based
  /// Cycle notation, "e" for the identity.
  std::string to_string() const;
};

/// Action on numberings by permuting entries.
numbering act(const permutation& p, const numbering& t);

/// sigma_{T,S}: the unique permutation with sigma . T = S (cellwise).
permutation sigma(const numbering& t, const numbering& s);

/// Sparse integer element of Z[S_n].
struct group_algebra_element {
  int deg = 0;
  std::map<permutation, i64> terms;

  static group_algebra_element zero(int n) { return {n, {}}; }
  static group_algebra_element unit(int n);
  static group_algebra_element of(const permutation& p, i64 c = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const permutation& p, i64 c);
  group_algebra_element operator+(const group_algebra_element& o) const;
  group_algebra_element operator-(const group_algebra_element& o) const;
  group_algebra_element operator*(const group_algebra_element& o) const;
  group_algebra_element scaled(i64 c) const;
  bool operator==(const group_algebra_element&) const = default;
  std::string to_string() const;
};

/// Young symmetrizers: row sum a_T, signed column sum b_T, c_T = b_T a_T.
group_algebra_element young_a(const numbering& t);
group_algebra_element young_b(const numbering& t);
group_algebra_element young_c(const numbering& t);

/// v_T^S = sigma_{T,S} b_T a_T = b_S a_S sigma_{T,S} (both computed, asserted equal).
group_algebra_element v_element(const numbering& t, const numbering& s);

}  // namespace csh
