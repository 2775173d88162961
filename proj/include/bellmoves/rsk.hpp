#pragma once

// Schensted shapes of shuffle products and the trajectory search.

#include "bellmoves/moves.hpp"
#include "bellmoves/shuffles.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bellmoves {

using ShapeTrajectory = std::vector<Partition>;

/// Shape of the insertion tableau of the one-line word 1p, 2p, ..., np.
Partition rsk_shape(const Permutation& p);

/// sh(tau sigma_m) is reached from sh(tau) by a move.
bool verify_move_step(const Permutation& tau, int m);

/// "(5),(4,1),(3,2)" -> three partitions.
ShapeTrajectory parse_trajectory(std::string_view text);
std::string to_string(const ShapeTrajectory& traj);

struct TrajectorySearch {
    std::vector<ShuffleSequence> sequences;
    /// Pruned search tree; each node carries the deck order (inverse of the
    /// prefix product), its shape and the generator that reached it.
    nlohmann::json tree;
    /// Move paths along the same trajectory: product of move multiplicities.
    BigInt move_paths;
};

/// All random-to-top sequences tau_1..tau_t with sh(tau_1...tau_i) = traj[i].
/// Depth-first in generator order; branches leave as soon as a shape differs.
TrajectorySearch search_trajectory(int n, const ShapeTrajectory& traj);

struct BijectionCheck {
    int n = 0;
    int t = 0;
    /// Closed trajectories from (n) with their realizing-sequence and move-path counts.
    std::map<ShapeTrajectory, std::pair<BigInt, BigInt>> counts;
    BigInt sequence_total;
    BigInt move_total;
    std::optional<ShapeTrajectory> first_disagreement;

    bool agrees() const { return !first_disagreement.has_value(); }
    nlohmann::json to_json() const;
};

/// Compares, trajectory by trajectory, shuffle sequences with identity
/// product against move paths from (n) to (n). n <= 6, t <= 8.
BijectionCheck rsk_bijection_check(int n, int t);

}  // namespace bellmoves
