#pragma once

// Moves on Young diagrams and double partitions, and path counts in the
// resulting move graphs via integer transfer matrices.

#include "bellmoves/structures.hpp"

#include <map>
#include <vector>

#include <json.hpp>

namespace bellmoves {

/// One entry per move: remove a removable box, add it at an addable position.
/// With primed, the self-loop that re-adds the lowest removable box is omitted.
std::vector<Partition> move_targets(const Partition& p, bool primed);

/// Boxes may move between the two diagrams. The exceptional move re-adds the
/// lowest removable box of the first diagram, or of the second when the first
/// is empty.
std::vector<DoublePartition> double_move_targets(const DoublePartition& d, bool primed);

/// Number of moves from p to q.
int move_multiplicity(const Partition& p, const Partition& q, bool primed);
int move_multiplicity(const DoublePartition& p, const DoublePartition& q, bool primed);

enum class MoveVariant { A, A_primed, B, B_primed };

/// States of one size with their transfer matrix: adjacency(i, j) is the
/// number of moves from state i to state j.
template <typename State>
class MoveGraph {
public:
    MoveGraph(int n, bool primed);

    int size_n() const { return n_; }
    bool primed() const { return primed_; }
    const std::vector<State>& states() const { return states_; }
    Eigen::Index index_of(const State& s) const;
    const IntMatrix& adjacency() const { return adjacency_; }

    /// Paths of length t from start to end.
    BigInt count_paths(const State& start, const State& end, int t) const;
    /// Row vector e_start · A^t for t = 0..t_max.
    std::vector<std::vector<BigInt>> path_counts_from(const State& start, int t_max) const;

    /// {"states": [...], "adjacency": {state: [[target, multiplicity], ...]}}.
    nlohmann::json to_json() const;

private:
    int n_;
    bool primed_;
    std::vector<State> states_;
    std::map<State, Eigen::Index> index_;
    IntMatrix adjacency_;
};

using PartitionMoveGraph = MoveGraph<Partition>;
using DoubleMoveGraph = MoveGraph<DoublePartition>;

extern template class MoveGraph<Partition>;
extern template class MoveGraph<DoublePartition>;

/// Move sequences of length t from start to end. A variants take partitions,
/// B variants double partitions; sizes must agree.
BigInt count_move_sequences(const Partition& start, const Partition& end, int t, MoveVariant variant);
BigInt count_move_sequences(const DoublePartition& start, const DoublePartition& end, int t, MoveVariant variant);

/// M_t(n), M'_t(n) (A variants) or their double-partition analogues from
/// ((n),()) back to itself (B variants), for t = 0..t_max.
std::vector<BigInt> move_counts(int n, int t_max, MoveVariant variant);

/// Sequences of t double-moves from ((n),()) ending at ((n),()) or ((),(n)).
BigInt count_d_move_sequences(int n, int t, bool primed);
std::vector<BigInt> d_move_counts(int n, int t_max, bool primed);

}  // namespace bellmoves
