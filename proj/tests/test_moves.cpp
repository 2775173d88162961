#include "bellmoves/moves.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bellmoves;

namespace {

std::vector<long> as_longs(const std::vector<BigInt>& xs) {
    std::vector<long> out;
    for (const auto& x : xs) out.push_back(x.convert_to<long>());
    return out;
}

}  // namespace

TEST_CASE("moves from a small diagram") {
    // (2,1): remove (1,2) -> (1,1) then add at rows 1 or 3; remove (2,1) -> (2) then add at rows 1 or 2.
    auto targets = move_targets(Partition{2, 1}, false);
    std::sort(targets.begin(), targets.end());
    const std::vector<Partition> expected = {Partition{1, 1, 1}, Partition{2, 1}, Partition{2, 1}, Partition{3}};
    CHECK(targets == expected);
    CHECK(move_multiplicity(Partition{2, 1}, Partition{2, 1}, false) == 2);
    CHECK(move_multiplicity(Partition{2, 1}, Partition{2, 1}, true) == 1);
    CHECK(move_targets(Partition{1}, true).empty());
    CHECK(move_targets(Partition{}, false).empty());
}

TEST_CASE("move targets match the independent move rule") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : partitions_of(n)) {
            for (bool primed : {false, true}) {
                std::vector<Partition> lib = move_targets(p, primed);
                std::vector<Partition> ref;
                for (const auto& s : oracle::moves(p.parts(), primed)) ref.emplace_back(s);
                std::sort(lib.begin(), lib.end());
                std::sort(ref.begin(), ref.end());
                CHECK(lib == ref);
            }
        }
    }
}

TEST_CASE("type A move counts match the oracle walk") {
    for (int n = 0; n <= 5; ++n) {
        const auto m = move_counts(n, 7, MoveVariant::A);
        const auto mp = move_counts(n, 7, MoveVariant::A_primed);
        for (int t = 0; t <= 7; ++t) {
            CHECK(m[static_cast<std::size_t>(t)] == oracle::move_walks(n, t, false));
            CHECK(mp[static_cast<std::size_t>(t)] == oracle::move_walks(n, t, true));
        }
    }
}

TEST_CASE("adjacency is symmetric for the unprimed graph") {
    const PartitionMoveGraph g(5, false);
    CHECK(g.adjacency() == g.adjacency().transpose().eval());
    CHECK(g.states().size() == 7);
    CHECK(g.count_paths(Partition{5}, Partition{5}, 0) == 1);
    CHECK(g.count_paths(Partition{5}, Partition{4, 1}, 0) == 0);
}

TEST_CASE("double moves (frozen oracle)") {
    CHECK(as_longs(move_counts(3, 6, MoveVariant::B)) == std::vector<long>{1, 1, 3, 11, 48, 236, 1248});
    CHECK(as_longs(move_counts(3, 6, MoveVariant::B_primed)) == std::vector<long>{1, 0, 2, 4, 19, 80, 372});
    CHECK(as_longs(move_counts(2, 6, MoveVariant::B)) == std::vector<long>{1, 1, 3, 10, 36, 136, 528});
    CHECK(as_longs(move_counts(0, 3, MoveVariant::B)) == std::vector<long>{1, 0, 0, 0});
    const DoublePartition start{Partition{2}, Partition{}};
    CHECK(count_move_sequences(start, start, 2, MoveVariant::B) == 3);
    CHECK_THROWS(count_move_sequences(Partition{2}, Partition{3}, 1, MoveVariant::A));
}

TEST_CASE("type D move counts (frozen oracle)") {
    CHECK(as_longs(d_move_counts(1, 6, false)) == std::vector<long>{1, 2, 4, 8, 16, 32, 64});
    CHECK(as_longs(d_move_counts(1, 6, true)) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    CHECK(as_longs(d_move_counts(2, 6, false)) == std::vector<long>{1, 1, 4, 16, 64, 256, 1024});
    CHECK(as_longs(d_move_counts(2, 6, true)) == std::vector<long>{1, 0, 3, 6, 21, 60, 183});
    CHECK(as_longs(d_move_counts(3, 6, false)) == std::vector<long>{1, 1, 3, 12, 60, 336, 1968});
    CHECK(as_longs(d_move_counts(3, 6, true)) == std::vector<long>{1, 0, 2, 5, 27, 130, 652});
    CHECK(count_d_move_sequences(3, 4, false) == 60);
}

TEST_CASE("move graph json lists every state") {
    const DoubleMoveGraph g(2, false);
    const auto j = g.to_json();
    CHECK(j["states"].size() == 5);
}
