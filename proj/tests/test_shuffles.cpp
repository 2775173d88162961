#include "bellmoves/shuffles.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace bellmoves;

TEST_CASE("generator counts and names") {
    CHECK(generators({Family::A, 4, 2, false}).size() == 6);
    CHECK(generators({Family::B, 4, 2, false}).size() == 24);
    CHECK(generators({Family::D, 4, 2, false}).size() == 24);
    CHECK(generators({Family::A, 4, 2, true}).size() == 5);

    const auto a = generators({Family::A, 3, 1, false});
    CHECK(a[0].name == "s1");
    CHECK(a[0].perm.is_identity());
    CHECK(a[2].name == "s3");
    CHECK(a[2].perm == SignedPermutation(Permutation::cycle_to_top(3, 3)));

    const auto b = generators({Family::B, 2, 1, false});
    std::vector<std::string> names;
    for (const auto& g : b) names.push_back(g.name);
    CHECK(names == std::vector<std::string>{"rho1", "rhobar1", "rho2", "rhobar2"});

    const auto d = generators({Family::D, 3, 1, false});
    for (const auto& g : d) CHECK(g.perm.in_family(Family::D));
    CHECK(d[1].name.rfind("cheat-", 0) == 0);

    CHECK_THROWS(ShuffleFamily{Family::A, 3, 4, false}.validate());
    CHECK_THROWS(ShuffleFamily{Family::A, 3, 0, false}.validate());
}

TEST_CASE("every generator is a k-shuffle of its kind") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& g : generators({Family::A, n, k, false})) CHECK(is_k_shuffle(g.perm.underlying(), k));
            std::set<SignedPermutation> distinct;
            for (const auto& g : generators({Family::B, n, k, false})) {
                CHECK(is_oriented_k_shuffle(g.perm, k));
                distinct.insert(g.perm);
            }
            CHECK(distinct.size() == generators({Family::B, n, k, false}).size());
            for (const auto& g : generators({Family::D, n, k, false})) CHECK(is_cheating_k_shuffle(g.perm, k));
        }
    }
}

TEST_CASE("cheating shuffles are distinct below k = n") {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) {
            const ShuffleFamily f{Family::D, n, k, false};
            CHECK(distinct_generators(f).size() == generators(f).size());
        }
    }
    // At k = n two oriented shuffles can share a cheating image.
    const ShuffleFamily full{Family::D, 2, 2, false};
    CHECK(distinct_generators(full).size() < generators(full).size());
}

TEST_CASE("identity sequence counts match deck simulation") {
    for (int m = 1; m <= 4; ++m) {
        const auto a = identity_sequence_counts({Family::A, m, 1, false}, 6);
        const auto ap = identity_sequence_counts({Family::A, m, 1, true}, 6);
        const auto b = identity_sequence_counts({Family::B, m, 1, false}, 5);
        const auto bp = identity_sequence_counts({Family::B, m, 1, true}, 5);
        for (int t = 0; t <= 6; ++t) {
            CAPTURE(m);
            CAPTURE(t);
            CHECK(a[static_cast<std::size_t>(t)] == oracle::shuffle_sequences(m, t, false, false));
            CHECK(ap[static_cast<std::size_t>(t)] == oracle::shuffle_sequences(m, t, false, true));
            if (t <= 5) {
                CHECK(b[static_cast<std::size_t>(t)] == oracle::shuffle_sequences(m, t, true, false));
                CHECK(bp[static_cast<std::size_t>(t)] == oracle::shuffle_sequences(m, t, true, true));
            }
        }
    }
}

TEST_CASE("type D sequence counts (frozen oracle)") {
    auto column = [](int n, bool primed) {
        std::vector<long> out;
        for (const auto& x : identity_sequence_counts({Family::D, n, 1, primed}, 6)) out.push_back(x.convert_to<long>());
        return out;
    };
    CHECK(column(1, false) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    CHECK(column(2, false) == std::vector<long>{1, 1, 4, 16, 64, 256, 1024});
    CHECK(column(3, false) == std::vector<long>{1, 1, 3, 12, 60, 336, 1968});
    CHECK(column(1, true) == std::vector<long>{1, 0, 0, 0, 0, 0, 0});
    CHECK(column(2, true) == std::vector<long>{1, 0, 3, 6, 21, 60, 183});
    CHECK(column(3, true) == std::vector<long>{1, 0, 2, 5, 27, 130, 652});
}

TEST_CASE("lift-time bijection") {
    const auto p = MarkedSetPartition::parse("{1,4|2,3}");
    const auto seq = partition_to_sequence(p, Family::A, 3);
    CHECK(seq.product().is_identity());
    CHECK(sequence_to_partition(seq) == p);

    const auto marked = MarkedSetPartition::parse("{1*,3*|2}");
    const auto bseq = partition_to_sequence(marked, Family::B, 2);
    CHECK(bseq.product().is_identity());
    CHECK(sequence_to_partition(bseq) == marked);

    // Too many blocks for the deck.
    CHECK_THROWS(partition_to_sequence(MarkedSetPartition::parse("{1|2|3}"), Family::A, 2));
}

TEST_CASE("sequence names round trip") {
    const ShuffleFamily f{Family::B, 3, 1, false};
    const auto s = ShuffleSequence::from_names(f, {"rho2", "rhobar3", "rho1"});
    CHECK(s.names() == std::vector<std::string>{"rho2", "rhobar3", "rho1"});
    CHECK_THROWS(ShuffleSequence::from_names(f, {"s2"}));
}

TEST_CASE("group order cap") {
    CHECK_THROWS_AS(GroupTable(Family::B, 6), ResourceError);
    CHECK(GroupTable(Family::B, 6, 50000).size() == 46080);
}
