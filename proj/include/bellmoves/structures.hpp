#pragma once

// Partitions, double partitions, (marked) set partitions and signed
// permutations, with exhaustive enumerators for each.

#include "bellmoves/algebra.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellmoves {

// ---------------------------------------------------------------------------
// Integer partitions and Young diagrams

/// A box of a Young diagram; rows and columns are 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class Partition {
public:
    Partition() = default;
    /// Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition one_row(int n) { return n == 0 ? Partition{} : Partition(std::vector<int>{n}); }
    /// "(3,2,1)"; the empty partition is "()".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Length of row r (1-based); zero below the last row.
    int row(int r) const { return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0; }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Cells whose removal leaves a partition, top to bottom.
std::vector<Cell> removable_boxes(const Partition& p);
/// Positions where a box may be added, top to bottom (always includes the row below the last).
std::vector<Cell> addable_positions(const Partition& p);
Partition remove_box(const Partition& p, Cell c);
Partition add_box(const Partition& p, Cell c);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape p, by the hook length formula.
BigInt hook_dimension(const Partition& p);

struct DoublePartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    /// "((2,1),())"
    std::string to_string() const;
    static DoublePartition parse(std::string_view text);

    auto operator<=>(const DoublePartition&) const = default;
};

/// All double partitions of n, ordered by decreasing size of the first component.
std::vector<DoublePartition> double_partitions_of(int n);

// ---------------------------------------------------------------------------
// Set partitions of {1..t}, optionally marked

enum class SetPartitionConstraint {
    none,
    primed,  // no block holds i and i+1, nor 1 and t
    spaced,  // no block holds i and i+1
};

enum class MarkedConstraint {
    none,
    dagger_primed,  // i, i+1 together => i+1 marked; 1, t together => 1 marked
    dagger_star,    // i, i+1 together => i+1 marked
};

/// Blocks of {1..t} with a marked subset holding an even number of elements
/// of every block. Blocks are ordered by their least element.
class MarkedSetPartition {
public:
    MarkedSetPartition() = default;
    MarkedSetPartition(int ground_size, std::vector<std::vector<int>> blocks, std::vector<int> marks = {});

    /// From a restricted growth string (block index of 1..t) and a 0/1 mark per element.
    static MarkedSetPartition from_growth_string(std::span<const int> growth, std::span<const char> marks = {});
    /// "{1*,3|2}"; the empty partition is "{}".
    static MarkedSetPartition parse(std::string_view text);

    int ground_size() const { return ground_size_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// 0-based index of the block containing i.
    int block_of(int i) const { return block_index_.at(static_cast<std::size_t>(i - 1)); }
    bool is_marked(int i) const { return marked_.at(static_cast<std::size_t>(i - 1)) != 0; }
    std::vector<int> marks() const;
    bool has_marks() const;

    std::string to_string() const;

    auto operator<=>(const MarkedSetPartition&) const = default;

private:
    int ground_size_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;
    std::vector<char> marked_;
};

/// Visitor over restricted growth strings: (block index per element, mark per element).
using GrowthVisitor = std::function<void(std::span<const int>, std::span<const char>)>;

/// Unmarked set partitions of {1..t} into between min_blocks and max_blocks blocks.
/// Constraints are enforced while placing each element, not by filtering.
void visit_set_partitions(int t, int min_blocks, int max_blocks, SetPartitionConstraint constraint,
                          const GrowthVisitor& visit);
void visit_marked_set_partitions(int t, int min_blocks, int max_blocks, MarkedConstraint constraint,
                                 const GrowthVisitor& visit);

std::vector<MarkedSetPartition> enumerate_set_partitions(int t, int max_blocks,
                                                         SetPartitionConstraint constraint);
std::vector<MarkedSetPartition> enumerate_marked_set_partitions(int t, int max_blocks,
                                                                MarkedConstraint constraint);

/// Counts without materializing; exact_blocks restricts to exactly max_blocks blocks.
BigInt count_set_partitions(int t, int max_blocks, SetPartitionConstraint constraint, bool exact_blocks = false);
BigInt count_marked_set_partitions(int t, int max_blocks, MarkedConstraint constraint,
                                   bool exact_blocks = false);

// ---------------------------------------------------------------------------
// Permutations. Both act on the right: i(gh) = (ig)h, so g·h means "g, then h".

enum class Family { A, B, D };

std::string to_string(Family f);
Family parse_family(std::string_view text);

class Permutation {
public:
    Permutation() = default;
    /// images[i-1] is the image of i; must be a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    /// The m-cycle (1,2,...,m) in Sym_n.
    static Permutation cycle_to_top(int n, int m);
    static Permutation parse(std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;
    int fixed_points() const;

    std::string to_string() const;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

class SignedPermutation {
public:
    SignedPermutation() = default;
    /// images[i-1] is the image of i in {-n..-1, 1..n}; |images| must permute {1..n}.
    explicit SignedPermutation(std::vector<int> images);
    SignedPermutation(std::initializer_list<int> images) : SignedPermutation(std::vector<int>(images)) {}
    explicit SignedPermutation(const Permutation& p) : SignedPermutation(p.images()) {}

    static SignedPermutation identity(int n);
    /// The transposition (-n, n): flips the bottom card.
    static SignedPermutation flip_bottom(int n);
    /// "[2,-1,3]"
    static SignedPermutation parse(std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    /// Image of i, for i in {-n..-1, 1..n}.
    int operator()(int i) const {
        return i > 0 ? images_.at(static_cast<std::size_t>(i - 1)) : -images_.at(static_cast<std::size_t>(-i - 1));
    }
    const std::vector<int>& images() const { return images_; }

    SignedPermutation operator*(const SignedPermutation& other) const;
    SignedPermutation inverse() const;
    bool is_identity() const;
    int negative_count() const;
    bool in_family(Family f) const;
    /// The underlying permutation of {1..n} (signs dropped).
    Permutation underlying() const;

    std::string to_string() const;
    auto operator<=>(const SignedPermutation&) const = default;

private:
    std::vector<int> images_;
};

struct SignedPermutationHash {
    std::size_t operator()(const SignedPermutation& g) const noexcept;
};

/// Every element of Sym_n (A), the hyperoctahedral group B_n, or its even-sign
/// subgroup D_n, once each. n >= 1.
std::vector<SignedPermutation> enumerate_group(Family family, int n);
/// n!, 2^n n!, 2^{n-1} n!.
BigInt group_order(Family family, int n);

}  // namespace bellmoves
