#pragma once

// k-shuffle Markov chains: permutation characters, transition matrices,
// moment certification of their spectra, and the Fulman chain on shapes.

#include "bellmoves/rsk.hpp"
#include "bellmoves/shuffles.hpp"

#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bellmoves {

using ChainSpec = ShuffleFamily;

/// Fixed points of g on the k-subset model.
///
/// A: k-subsets J of {1..n} with Jg = J. B and D: pairs (J, s) with J a fixed
/// k-subset and s in {+1,-1}^J such that u_j s_j = s_{j tau}, where g sends j
/// to u_j (j tau). D is the restriction of the B character.
BigInt perm_char(Family family, int n, int k, const SignedPermutation& g);

/// Number of generators a chain chooses from: C(n,k) or 2^k C(n,k), less one
/// without the identity.
BigInt chain_degree(const ChainSpec& c);

/// Integer walk matrix: entry (g, h) counts generators x with g x = h.
IntMatrix step_matrix(const ChainSpec& c, std::size_t max_group_order = kDefaultMaxGroupOrder);
/// step_matrix / chain_degree.
RatMatrix transition_matrix(const ChainSpec& c, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// pi(g)/N for every g, or (pi(g)-1)/(N-1) without the identity.
std::vector<BigRational> predicted_eigenvalues(const ChainSpec& c,
                                               std::size_t max_group_order = kDefaultMaxGroupOrder);

struct SpectrumReport {
    ChainSpec chain;
    /// Distinct predicted eigenvalues (descending) with multiplicities.
    std::vector<std::pair<BigRational, int>> predicted;
    /// Tr P^t for t = 1..moments_checked.
    std::vector<BigRational> moments;
    std::size_t moments_checked = 0;
    bool pass = false;

    nlohmann::json to_json() const;
};

/// Certifies the predicted multiset by comparing |G| exact power sums with
/// Tr P^t, t = 1..|G|.
SpectrumReport verify_spectrum(const ChainSpec& c, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// (1/|G|) sum_g (pi(g) - shift)^t for t = 0..t_max, with pi the k = 1
/// character of the family: the character-sum side of M_t(n) (shift 0) and
/// M'_t(n) (shift 1). Throws if a value is not an integer.
std::vector<BigInt> character_moments(Family family, int n, int shift, int t_max,
                                      std::size_t max_group_order = kDefaultMaxGroupOrder);

struct FulmanComparison {
    std::map<Partition, BigRational> chain;
    std::map<Partition, BigRational> shuffles;
    bool equal() const { return chain == shuffles; }
    nlohmann::json to_json() const;
};

/// Left: t steps from (n) of the chain with step probability
/// M_1(l,m)/n * dim m / dim l. Right: distribution of the RSK shape of a
/// product of t uniform random-to-top shuffles. n <= 6, t <= 8.
FulmanComparison fulman_vs_rsk(int n, int t);

}  // namespace bellmoves
