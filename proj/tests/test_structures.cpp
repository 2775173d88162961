#include "bellmoves/structures.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace bellmoves;

TEST_CASE("partitions of n") {
    const auto ps = partitions_of(5);
    CHECK(ps.size() == 7);
    CHECK(ps.front() == Partition{5});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1});
    CHECK(partitions_of(0).size() == 1);
    CHECK(Partition::parse("(3,2,1)") == Partition{3, 2, 1});
    CHECK(Partition::parse("()").empty());
    CHECK(Partition{4, 1}.to_string() == "(4,1)");
    CHECK_THROWS(Partition{1, 2});
    CHECK_THROWS(Partition::parse("(2,"));
}

TEST_CASE("hook lengths") {
    CHECK(hook_dimension(Partition{3, 2}) == 5);
    CHECK(hook_dimension(Partition{2, 1}) == 2);
    CHECK(hook_dimension(Partition{3, 3, 3}) == 42);
    BigInt sum = 0;
    for (const auto& p : partitions_of(6)) sum += hook_dimension(p) * hook_dimension(p);
    CHECK(sum == 720);
}

TEST_CASE("removable and addable boxes") {
    const Partition p{3, 1, 1};
    CHECK(removable_boxes(p) == std::vector<Cell>{{1, 3}, {3, 1}});
    CHECK(addable_positions(p) == std::vector<Cell>{{1, 4}, {2, 2}, {4, 1}});
    CHECK(remove_box(p, {3, 1}) == Partition{3, 1});
    CHECK(add_box(p, {2, 2}) == Partition{3, 2, 1});
    CHECK_THROWS(remove_box(p, {2, 1}));
    CHECK(addable_positions(Partition{}) == std::vector<Cell>{{1, 1}});
}

TEST_CASE("double partitions") {
    CHECK(double_partitions_of(2).size() == 5);
    CHECK(double_partitions_of(3).size() == 10);
    const auto d = DoublePartition::parse("((2,1),())");
    CHECK(d.first == Partition{2, 1});
    CHECK(d.second.empty());
    CHECK(d.to_string() == "((2,1),())");
}

TEST_CASE("set partition counts match unpruned enumeration") {
    for (int t = 0; t <= 7; ++t) {
        for (int n = 0; n <= 5; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            CHECK(count_set_partitions(t, n, SetPartitionConstraint::none) == oracle::bell(t, n, oracle::Kind::plain));
            CHECK(count_set_partitions(t, n, SetPartitionConstraint::primed) == oracle::bell(t, n, oracle::Kind::primed));
            CHECK(count_set_partitions(t, n, SetPartitionConstraint::spaced, true) ==
                  oracle::stirling(t, n, oracle::Kind::spaced));
        }
    }
}

TEST_CASE("marked set partition counts match unpruned enumeration") {
    for (int t = 0; t <= 6; ++t) {
        for (int n = 0; n <= 4; ++n) {
            CAPTURE(t);
            CAPTURE(n);
            CHECK(count_marked_set_partitions(t, n, MarkedConstraint::none) ==
                  oracle::marked_bell(t, n, oracle::MarkedKind::plain));
            CHECK(count_marked_set_partitions(t, n, MarkedConstraint::dagger_primed) ==
                  oracle::marked_bell(t, n, oracle::MarkedKind::dagger_primed));
            CHECK(count_marked_set_partitions(t, n, MarkedConstraint::dagger_star, true) ==
                  oracle::marked_stirling(t, n, oracle::MarkedKind::dagger_star));
        }
    }
}

TEST_CASE("enumerated set partitions are distinct and well formed") {
    const auto ps = enumerate_marked_set_partitions(5, 3, MarkedConstraint::dagger_primed);
    std::set<MarkedSetPartition> seen(ps.begin(), ps.end());
    CHECK(seen.size() == ps.size());
    for (const auto& p : ps) {
        CHECK(p.num_blocks() <= 3);
        for (const auto& block : p.blocks()) {
            int marked = 0;
            for (int i : block) marked += p.is_marked(i) ? 1 : 0;
            CHECK(marked % 2 == 0);
        }
        CHECK(MarkedSetPartition::parse(p.to_string()) == p);
    }
}

TEST_CASE("marked set partition text") {
    const auto p = MarkedSetPartition::parse("{1*,3*|2}");
    CHECK(p.ground_size() == 3);
    CHECK(p.num_blocks() == 2);
    CHECK(p.block_of(3) == 0);
    CHECK(p.is_marked(1));
    CHECK_FALSE(p.is_marked(2));
    CHECK(p.to_string() == "{1*,3*|2}");
    CHECK(MarkedSetPartition::parse("{}").ground_size() == 0);
    CHECK_THROWS(MarkedSetPartition::parse("{1,1}"));
}

TEST_CASE("permutations act on the right") {
    const auto s3 = Permutation::cycle_to_top(4, 3);
    CHECK(s3 == Permutation{2, 3, 1, 4});
    const Permutation g{2, 1, 3, 4};
    // i(gh) = (ig)h
    for (int i = 1; i <= 4; ++i) CHECK((g * s3)(i) == s3(g(i)));
    CHECK((s3 * s3.inverse()).is_identity());
    CHECK(Permutation::cycle_to_top(4, 1).is_identity());
    CHECK(s3.fixed_points() == 1);
    CHECK(Permutation::parse("[2,3,1,4]") == s3);
}

TEST_CASE("signed permutations and the three families") {
    CHECK(group_order(Family::A, 4) == 24);
    CHECK(group_order(Family::B, 3) == 48);
    CHECK(group_order(Family::D, 4) == 192);
    for (Family f : {Family::A, Family::B, Family::D}) {
        for (int n = 1; n <= 4; ++n) {
            const auto g = enumerate_group(f, n);
            CHECK(BigInt(static_cast<long>(g.size())) == group_order(f, n));
            std::set<SignedPermutation> seen(g.begin(), g.end());
            CHECK(seen.size() == g.size());
        }
    }
    const auto flip = SignedPermutation::flip_bottom(3);
    CHECK(flip == SignedPermutation{1, 2, -3});
    CHECK(flip(-3) == 3);
    CHECK(flip.in_family(Family::B));
    CHECK_FALSE(flip.in_family(Family::D));
    CHECK((flip * flip).is_identity());
    CHECK(SignedPermutation{-2, 1, -3}.underlying() == Permutation{2, 1, 3});
    CHECK(parse_family("D") == Family::D);
    CHECK_THROWS(parse_family("E"));
}
