#include "bellmoves/rsk.hpp"

#include <doctest.h>

using namespace bellmoves;

TEST_CASE("Schensted shapes") {
    CHECK(rsk_shape(Permutation::identity(4)) == Partition{4});
    CHECK(rsk_shape(Permutation{4, 3, 2, 1}) == Partition{1, 1, 1, 1});
    CHECK(rsk_shape(Permutation{2, 3, 1, 4}) == Partition{3, 1});
    CHECK(rsk_shape(Permutation{3, 1, 4, 2}) == Partition{2, 2});
    // Shape counts are squared dimensions.
    std::map<Partition, BigInt> freq;
    for (const auto& g : enumerate_group(Family::A, 5)) freq[rsk_shape(g.underlying())] += 1;
    for (const auto& [shape, count] : freq) CHECK(count == hook_dimension(shape) * hook_dimension(shape));
}

TEST_CASE("a random-to-top step moves the shape") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_group(Family::A, n)) {
            for (int m = 1; m <= n; ++m) CHECK(verify_move_step(g.underlying(), m));
        }
    }
}

TEST_CASE("trajectory text") {
    const auto traj = parse_trajectory("(3), (2,1),(3)");
    REQUIRE(traj.size() == 3);
    CHECK(traj[1] == Partition{2, 1});
    CHECK(to_string(traj) == "(3),(2,1),(3)");
    CHECK_THROWS(parse_trajectory("(3),(2,1"));
    CHECK_THROWS(parse_trajectory(""));
    CHECK_THROWS(parse_trajectory("(3)x"));
}

TEST_CASE("no shuffle sequence follows the eight-step trajectory") {
    const auto traj = parse_trajectory("(5),(4,1),(3,2),(4,1),(3,2),(2,2,1),(3,2),(4,1),(5)");
    const auto result = search_trajectory(5, traj);
    CHECK(result.sequences.empty());
    CHECK(result.move_paths >= 1);
    CHECK(result.tree["shape"] == "(5)");
    CHECK_THROWS(search_trajectory(4, traj));
}

TEST_CASE("a trajectory that is realized") {
    const auto traj = parse_trajectory("(3),(2,1),(3)");
    const auto result = search_trajectory(3, traj);
    CHECK_FALSE(result.sequences.empty());
    for (const auto& s : result.sequences) {
        Permutation g = Permutation::identity(3);
        for (int idx : s.indices()) g = g * Permutation::cycle_to_top(3, idx + 1);
        CHECK(rsk_shape(g) == Partition{3});
    }
}

TEST_CASE("trajectory-level bijection window") {
    for (int t = 0; t <= 6; ++t) CHECK(rsk_bijection_check(4, t).agrees());
    CHECK(rsk_bijection_check(5, 7).agrees());
    const auto at8 = rsk_bijection_check(5, 8);
    CHECK_FALSE(at8.agrees());
    // Totals still agree: both are B_8(5).
    CHECK(at8.sequence_total == 3845);
    CHECK(at8.move_total == 3845);
    const auto& c = at8.counts.at(*at8.first_disagreement);
    CHECK(c.first != c.second);
    CHECK_THROWS_AS(rsk_bijection_check(7, 2), ResourceError);
}
