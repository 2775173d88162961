#pragma once

// Random-to-top, k-shuffle, oriented and cheating generator sets, the
// group-element walk DP, and the lift-time bijection with set partitions.

#include "bellmoves/structures.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace bellmoves {

inline constexpr std::size_t kDefaultMaxGroupOrder = 10000;

struct ShuffleFamily {
    Family family = Family::A;
    int n = 1;
    int k = 1;
    bool exclude_identity = false;

    /// Throws std::invalid_argument unless 1 <= k <= n.
    void validate() const;
    std::string to_string() const;
};

struct Generator {
    SignedPermutation perm;
    /// "s3", "s1.3", "rho2", "rhobar2", "rhobar1:3", "cheat-rhobar2", ...
    std::string name;
};

/// The generator multiset of a family, identity first.
///
/// A: C(n,k) k-shuffles. B: 2^k C(n,k) oriented k-shuffles. D: the images of
/// the oriented ones under g -> g or g(-n,n), whichever lies in D_n. For D with
/// k = n (and n = 1) that map is not injective, so the list may repeat group
/// elements. exclude_identity drops the leading identity entry only.
std::vector<Generator> generators(const ShuffleFamily& f);

/// Distinct group elements among generators(f), in first-appearance order.
std::vector<SignedPermutation> distinct_generators(const ShuffleFamily& f);

/// Elements of a group with a hash index and right multiplication by a fixed
/// list of elements tabulated.
class GroupTable {
public:
    GroupTable(Family family, int n, std::size_t max_order = kDefaultMaxGroupOrder);

    Family family() const { return family_; }
    int degree() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const SignedPermutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<SignedPermutation>& elements() const { return elements_; }
    std::size_t index_of(const SignedPermutation& g) const;
    std::size_t identity_index() const { return identity_; }

    /// table[i][j] = index_of(element(i) * xs[j]).
    std::vector<std::vector<std::size_t>> right_multiplication(const std::vector<SignedPermutation>& xs) const;

private:
    Family family_;
    int n_;
    std::vector<SignedPermutation> elements_;
    std::unordered_map<SignedPermutation, std::size_t, SignedPermutationHash> index_;
    std::size_t identity_ = 0;
};

/// Number of length-t walks from the identity to each group element, one step
/// per entry of `steps` (repeats count separately).
std::vector<BigInt> walk_counts(const GroupTable& group, const std::vector<SignedPermutation>& steps, int t);

/// Number of sequences of t distinct generators of f whose product is the
/// identity, for every t = 0..t_max. n = 0 gives the empty-deck convention
/// [t = 0].
std::vector<BigInt> identity_sequence_counts(const ShuffleFamily& f, int t_max,
                                             std::size_t max_group_order = kDefaultMaxGroupOrder);
BigInt count_identity_sequences(const ShuffleFamily& f, int t, std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Generator indices into generators(family).
class ShuffleSequence {
public:
    ShuffleSequence(ShuffleFamily family, std::vector<int> indices);

    const ShuffleFamily& family() const { return family_; }
    const std::vector<int>& indices() const { return indices_; }
    std::size_t length() const { return indices_.size(); }

    SignedPermutation product() const;
    std::vector<std::string> names() const;
    nlohmann::json to_json() const { return names(); }
    static ShuffleSequence from_names(const ShuffleFamily& family, const std::vector<std::string>& names);

    bool operator==(const ShuffleSequence& other) const { return indices_ == other.indices_; }

private:
    ShuffleFamily family_;
    std::vector<int> indices_;
};

/// The random-to-top (A) or oriented random-to-top (B) sequence of length t
/// whose lift times are the blocks of p and whose flip times are its marks.
/// Blocks are labelled so that A_c holds the largest time not in A_1..A_{c-1};
/// card c is lifted at the times in A_c.
ShuffleSequence partition_to_sequence(const MarkedSetPartition& p, Family family, int n);

/// Inverse of partition_to_sequence: blocks are the lift times of each card.
/// Requires a k = 1 family of type A or B and an identity product.
MarkedSetPartition sequence_to_partition(const ShuffleSequence& s);

/// p^{-1} satisfies 1p^{-1} < ... < kp^{-1} and (k+1)p^{-1} < ... < np^{-1}.
bool is_k_shuffle(const Permutation& p, int k);
/// Some j cards of the chosen k are flipped as a block: the first k-j images of
/// g^{-1} are positive and increasing, the next j negative and increasing, the
/// remaining n-k positive and increasing.
bool is_oriented_k_shuffle(const SignedPermutation& g, int k);
/// g in D_n and either g or g(-n,n) is an oriented k-shuffle.
bool is_cheating_k_shuffle(const SignedPermutation& g, int k);

}  // namespace bellmoves
