#include "bellmoves/spectra.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bellmoves;

namespace {

std::vector<std::pair<std::string, int>> printable(const SpectrumReport& r) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [x, m] : r.predicted) out.emplace_back(to_string(x), m);
    return out;
}

}  // namespace

TEST_CASE("random-to-top spectrum on three cards") {
    const auto r = verify_spectrum({Family::A, 3, 1, false});
    CHECK(r.pass);
    CHECK(r.moments_checked == 6);
    CHECK(printable(r) == std::vector<std::pair<std::string, int>>{{"1", 1}, {"1/3", 3}, {"0", 2}});
}

TEST_CASE("transition matrices are stochastic") {
    for (Family f : {Family::A, Family::B, Family::D}) {
        const ChainSpec c{f, 3, 2, false};
        CHECK(is_row_stochastic(transition_matrix(c)));
    }
    CHECK(chain_degree({Family::B, 3, 2, false}) == 12);
    CHECK(chain_degree({Family::B, 3, 2, true}) == 11);
}

TEST_CASE("spectra certified across families") {
    for (Family f : {Family::A, Family::B, Family::D}) {
        for (int n = 2; n <= 3; ++n) {
            for (int k = 1; k <= n; ++k) {
                for (bool no_id : {false, true}) {
                    const ChainSpec c{f, n, k, no_id};
                    if (no_id && chain_degree({f, n, k, false}) < 2) continue;
                    CAPTURE(c.to_string());
                    CHECK(verify_spectrum(c).pass);
                }
            }
        }
    }
}

TEST_CASE("a wrong prediction is rejected") {
    // Same traces, eigenvalues perturbed: the power-sum check must notice.
    const ChainSpec c{Family::A, 3, 1, false};
    auto eig = predicted_eigenvalues(c);
    const IntMatrix a = step_matrix(c);
    std::vector<BigRational> moments;
    BigInt scale = 1;
    for (const auto& tr : trace_moments(a, static_cast<unsigned>(a.rows()))) {
        scale *= 3;
        moments.emplace_back(tr, scale);
    }
    CHECK(power_sums_equal(eig, moments));
    eig[0] = BigRational(1, 2);
    CHECK_FALSE(power_sums_equal(eig, moments));
}

TEST_CASE("no-identity chain needs two generators") {
    CHECK_THROWS(predicted_eigenvalues({Family::A, 3, 3, true}));
}

TEST_CASE("permutation characters") {
    // k = 1 on Sym_n counts fixed points.
    for (const auto& g : enumerate_group(Family::A, 4)) {
        CHECK(perm_char(Family::A, 4, 1, g) == g.underlying().fixed_points());
    }
    // Identity of B_n fixes every signed k-subset.
    CHECK(perm_char(Family::B, 3, 2, SignedPermutation::identity(3)) == 12);
    CHECK(perm_char(Family::B, 3, 1, SignedPermutation{-1, 2, 3}) == 4);
    CHECK_THROWS(perm_char(Family::D, 3, 1, SignedPermutation{-1, 2, 3}));
}

TEST_CASE("character averages match next_permutation sums") {
    for (int n = 1; n <= 6; ++n) {
        for (int shift : {0, 1}) {
            const auto m = character_moments(Family::A, n, shift, 8);
            for (int t = 0; t <= 8; ++t) CHECK(m[static_cast<std::size_t>(t)] == oracle::character_average(n, t, shift));
        }
    }
    CHECK(character_moments(Family::A, 0, 0, 2) == std::vector<BigInt>{1, 0, 0});
}

TEST_CASE("Fulman chain equals the shape distribution") {
    const auto cmp = fulman_vs_rsk(3, 2);
    CHECK(cmp.equal());
    CHECK(cmp.chain.at(Partition{3}) == BigRational(2, 9));
    CHECK(cmp.chain.at(Partition{2, 1}) == BigRational(2, 3));
    CHECK(cmp.chain.at(Partition{1, 1, 1}) == BigRational(1, 9));
    for (int t = 0; t <= 6; ++t) CHECK(fulman_vs_rsk(4, t).equal());
}
