#pragma once

#include <map>
#include <optional>

#include "csh/chain_complex.hpp"
#include "csh/snf.hpp"

namespace csh {

/// Finitely generated abelian group: free rank plus invariant factors d1|d2|...
struct homology_group {
  i64 free_rank = 0;
  std::vector<i64> torsion;

  bool operator==(const homology_group&) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

/// Integral homology of the whole complex (d o d = 0 is checked).
std::vector<homology_group> homology(const integer_chain_complex& cc);

/// Homology in a single degree (SNF of d_i and d_{i+1} only).
homology_group homology_at(const integer_chain_complex& cc, int degree);

/// Number of p-torsion invariant factors of H_i, by comparing exact ranks
/// over Q and GF(p). Requires H_{i-1} p-torsion-free, which is verified via
/// rank_GF(p)(d_i) = rank_Q(d_i); falls back to full SNF otherwise.
i64 torsion_signature_fast(const integer_chain_complex& cc, i64 p, int degree);

/// Multiplicity of the Specht module of shape lambda in H_i(G;Q) for
/// i = 0..max_degree, computed on the full tabloid complex via central
/// idempotents (exact rational arithmetic).
std::vector<i64> isotype_multiplicities(const full_complex& fc, const partition& lambda,
                                        int max_degree);

/// Check d2(g) = 2h, d1(h) = 0 and h not in the integer column span of d2.
bool verify_torsion_witness(const integer_chain_complex& cc, const std::vector<i64>& g_chain,
                            const std::vector<i64>& h_chain);

/// Parse chains like "X_2^1-X_7^2-X_9^1" / "W_{18}+2W_{49}" against the
/// complex's labels at the given degree.
std::vector<i64> parse_chain(const integer_chain_complex& cc, int degree, const std::string& text);

}  // namespace csh
