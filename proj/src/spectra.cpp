#include "bellmoves/spectra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bellmoves {

BigInt perm_char(Family family, int n, int k, const SignedPermutation& g) {
    if (g.degree() != n) throw std::invalid_argument("perm_char: degree mismatch");
    if (!g.in_family(family)) throw std::invalid_argument("perm_char: " + g.to_string() + " is not in " + to_string(family));
    if (k < 0 || k > n) return 0;
    if (n > 20) throw ResourceError("perm_char: n too large for subset enumeration");
    long count = 0;
    for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
        if (std::popcount(subset) != k) continue;
        bool fixed = true;
        for (int j = 1; j <= n && fixed; ++j) {
            if (!(subset & (1U << (j - 1)))) continue;
            const int image = std::abs(g(j));
            fixed = (subset & (1U << (image - 1))) != 0;
        }
        if (!fixed) continue;
        if (family == Family::A) {
            ++count;
            continue;
        }
        // Sign vectors on J: bit j-1 of `signs` set means s_j = -1.
        for (std::uint32_t signs = subset;; signs = (signs - 1) & subset) {
            bool ok = true;
            for (int j = 1; j <= n && ok; ++j) {
                if (!(subset & (1U << (j - 1)))) continue;
                const int image = g(j);
                const int u = image < 0 ? -1 : 1;
                const int s_j = (signs & (1U << (j - 1))) ? -1 : 1;
                const int target = std::abs(image);
                const int s_target = (signs & (1U << (target - 1))) ? -1 : 1;
                ok = u * s_j == s_target;
            }
            if (ok) ++count;
            if (signs == 0) break;
        }
    }
    return count;
}

BigInt chain_degree(const ChainSpec& c) { return BigInt(static_cast<long>(generators(c).size())); }

IntMatrix step_matrix(const ChainSpec& c, std::size_t max_group_order) {
    GroupTable group(c.family, c.n, max_group_order);
    std::vector<SignedPermutation> steps;
    for (auto& g : generators(c)) steps.push_back(std::move(g.perm));
    const auto table = group.right_multiplication(steps);
    const auto size = static_cast<Eigen::Index>(group.size());
    IntMatrix a = IntMatrix::Zero(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        for (std::size_t target : table[static_cast<std::size_t>(i)]) a(i, static_cast<Eigen::Index>(target)) += 1;
    }
    return a;
}

RatMatrix transition_matrix(const ChainSpec& c, std::size_t max_group_order) {
    const BigRational degree(chain_degree(c));
    if (degree == 0) throw std::invalid_argument("transition_matrix: " + c.to_string() + " has no generators");
    RatMatrix p = step_matrix(c, max_group_order).unaryExpr([](const BigInt& x) { return BigRational(x); });
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j) {
            if (p(i, j) != 0) p(i, j) /= degree;
        }
    }
    return p;
}

std::vector<BigRational> predicted_eigenvalues(const ChainSpec& c, std::size_t max_group_order) {
    ChainSpec full = c;
    full.exclude_identity = false;
    const BigInt total = chain_degree(full);
    if (c.exclude_identity && total < 2) {
        throw std::invalid_argument("predicted_eigenvalues: " + c.to_string() + " has no non-identity generator");
    }
    GroupTable group(c.family, c.n, max_group_order);
    std::vector<BigRational> out;
    out.reserve(group.size());
    for (const auto& g : group.elements()) {
        const BigInt pi = perm_char(c.family, c.n, c.k, g);
        out.push_back(c.exclude_identity ? BigRational(pi - 1, total - 1) : BigRational(pi, total));
    }
    return out;
}

nlohmann::json SpectrumReport::to_json() const {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& [x, m] : predicted) values.push_back({to_string(x), m});
    return {{"chain", chain.to_string()},
            {"predicted", std::move(values)},
            {"moments_checked", moments_checked},
            {"verdict", pass ? "pass" : "fail"}};
}

SpectrumReport verify_spectrum(const ChainSpec& c, std::size_t max_group_order) {
    SpectrumReport report;
    report.chain = c;
    const auto eigenvalues = predicted_eigenvalues(c, max_group_order);
    std::map<BigRational, int, std::greater<>> multiplicity;
    for (const auto& x : eigenvalues) ++multiplicity[x];
    report.predicted.assign(multiplicity.begin(), multiplicity.end());

    const IntMatrix a = step_matrix(c, max_group_order);
    const BigInt degree = chain_degree(c);
    const auto traces = trace_moments(a, static_cast<unsigned>(a.rows()));
    BigInt scale = 1;
    for (const auto& tr : traces) {
        scale *= degree;
        report.moments.emplace_back(tr, scale);
    }
    report.moments_checked = report.moments.size();
    report.pass = power_sums_equal(eigenvalues, report.moments);
    return report;
}

std::vector<BigInt> character_moments(Family family, int n, int shift, int t_max, std::size_t max_group_order) {
    if (t_max < 0) throw std::invalid_argument("character_moments: negative t");
    std::vector<BigInt> out;
    if (n == 0) {
        for (int t = 0; t <= t_max; ++t) out.push_back(t == 0 ? 1 : 0);
        return out;
    }
    GroupTable group(family, n, max_group_order);
    std::vector<BigInt> values;
    for (const auto& g : group.elements()) values.push_back(perm_char(family, n, 1, g) - shift);
    std::vector<BigInt> powers(values.size(), BigInt(1));
    const BigInt order(static_cast<long>(group.size()));
    for (int t = 0; t <= t_max; ++t) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum += powers[i];
            powers[i] *= values[i];
        }
        if (sum % order != 0) throw std::logic_error("character_moments: non-integral average");
        out.push_back(sum / order);
    }
    return out;
}

nlohmann::json FulmanComparison::to_json() const {
    auto side = [](const std::map<Partition, BigRational>& m) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [shape, p] : m) j[shape.to_string()] = to_string(p);
        return j;
    };
    return {{"chain", side(chain)}, {"shuffles", side(shuffles)}, {"verdict", equal() ? "pass" : "fail"}};
}

FulmanComparison fulman_vs_rsk(int n, int t) {
    if (n < 1 || n > 6 || t < 0 || t > 8) throw ResourceError("fulman_vs_rsk: needs 1 <= n <= 6, 0 <= t <= 8");
    FulmanComparison out;
    const Partition top = Partition::one_row(n);

    std::map<Partition, BigInt> dims;
    for (const auto& p : partitions_of(n)) dims.emplace(p, hook_dimension(p));
    std::map<Partition, BigRational> dist{{top, BigRational(1)}};
    for (int s = 0; s < t; ++s) {
        std::map<Partition, BigRational> next;
        for (const auto& [from, prob] : dist) {
            for (const auto& to : move_targets(from, false)) {
                next[to] += prob * BigRational(dims.at(to), dims.at(from) * n);
            }
        }
        dist = std::move(next);
    }
    out.chain = std::move(dist);

    GroupTable group(Family::A, n);
    std::vector<SignedPermutation> sigma;
    for (int m = 1; m <= n; ++m) sigma.emplace_back(Permutation::cycle_to_top(n, m));
    const auto counts = walk_counts(group, sigma, t);
    const BigInt total = pow_int(n, static_cast<unsigned long>(t));
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (counts[i] == 0) continue;
        out.shuffles[rsk_shape(group.element(i).underlying())] += BigRational(counts[i], total);
    }
    return out;
}

}  // namespace bellmoves
