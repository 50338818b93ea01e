#pragma once

#include <compare>
#include <string>
#include <vector>

#include "csh/partition.hpp"

namespace csh {

/// A filling of the Ferrers diagram of some shape with 1..n, each exactly once.
/// Rows are stored top to bottom.
struct numbering {
  std::vector<std::vector<int>> rows;

  numbering() = default;
  explicit numbering(std::vector<std::vector<int>> r) : rows(std::move(r)) {}

  partition shape() const;
  int n() const;
  int entry(int i, int j) const { return rows[i][j]; }  // 0-based
  bool operator==(const numbering&) const = default;
  bool operator<(const numbering& o) const { return rows < o.rows; }

  bool rows_increasing() const;
  bool is_standard() const;
  /// Reading word: rows left to right, top row to bottom row.
  std::vector<int> word() const;
  /// "36|45|1|2" rendering.
  std::string to_string() const;
};

/// The two SYT/generator listing conventions found in the reference data.
/// `bottom_row` is the total order that compares at the bottom-most differing
/// row, rightmost differing column (lists are emitted largest first);
/// `word_lex` lists by ascending reading word. Both put the row-reading
/// filling first.
enum class listing_order { bottom_row, word_lex };

/// Three-way comparison in the bottom-row total order (the default order used
/// for generator listings): negative if T comes before S in the emitted list.
int compare(const numbering& t, const numbering& s);

/// true if `a` is listed before `b` under the given convention.
bool listed_before(listing_order order, const numbering& a, const numbering& b);

/// Sort a generator list into its listing order under the given convention.
void sort_listing(listing_order order, std::vector<numbering>& v);

/// Standard Young tableaux of shape lam in listing order (Y_1 first).
std::vector<numbering> standard_tableaux(const partition& lam,
                                         listing_order order = listing_order::bottom_row);

/// Semistandard tableau stored as rows of values 1..len(mu).
struct semistandard_tableau {
  std::vector<std::vector<int>> rows;
  partition shape() const;
  partition weight() const;
};

/// All SSYT of shape lam and weight mu.
std::vector<semistandard_tableau> semistandard_tableaux(const partition& lam, const partition& mu);

/// Kostka number K_{lam,mu}.
i64 kostka(const partition& lam, const partition& mu);

/// The numbering T(F) for blocks of a set partition of [n]: rows are the
/// blocks in increasing order, blocks ordered by size descending then by
/// minimum element ascending.
numbering numbering_of_blocks(const std::vector<std::vector<int>>& blocks);

/// Standardize an SSYT of shape lam, weight mu against a numbering T of shape
/// mu: the occurrences of value r in the reading word of Y are replaced by the
/// entries of row r of T, in row order.
numbering standardize(const semistandard_tableau& y, const numbering& t);

}  // namespace csh
