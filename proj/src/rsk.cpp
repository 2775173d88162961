#include "bellmoves/rsk.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bellmoves {

Partition rsk_shape(const Permutation& p) {
    std::vector<std::vector<int>> rows;
    for (int x : p.images()) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({x});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
            if (it == rows[r].end()) {
                rows[r].push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    std::vector<int> parts;
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

bool verify_move_step(const Permutation& tau, int m) {
    const Partition before = rsk_shape(tau);
    const Partition after = rsk_shape(tau * Permutation::cycle_to_top(tau.degree(), m));
    const auto targets = move_targets(before, false);
    return std::find(targets.begin(), targets.end(), after) != targets.end();
}

ShapeTrajectory parse_trajectory(std::string_view text) {
    ShapeTrajectory out;
    int depth = 0;
    std::size_t start = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') {
            if (depth++ == 0) start = i;
        } else if (text[i] == ')') {
            if (--depth < 0) throw std::invalid_argument("trajectory: unbalanced parentheses");
            if (depth == 0) out.push_back(Partition::parse(text.substr(start, i - start + 1)));
        } else if (depth == 0 && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("trajectory: unexpected '" + std::string(1, text[i]) + "'");
        }
    }
    if (depth != 0) throw std::invalid_argument("trajectory: unbalanced parentheses");
    if (out.empty()) throw std::invalid_argument("trajectory: no shapes");
    return out;
}

std::string to_string(const ShapeTrajectory& traj) {
    std::string s;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (i) s += ',';
        s += traj[i].to_string();
    }
    return s;
}

namespace {

BigInt move_paths_along(const ShapeTrajectory& traj) {
    BigInt product = 1;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) product *= move_multiplicity(traj[i], traj[i + 1], false);
    return product;
}

}  // namespace

TrajectorySearch search_trajectory(int n, const ShapeTrajectory& traj) {
    if (n < 1) throw std::invalid_argument("search_trajectory: n must be at least 1");
    for (const auto& shape : traj) {
        if (shape.size() != n) {
            throw std::invalid_argument("search_trajectory: " + shape.to_string() + " is not a partition of " +
                                        std::to_string(n));
        }
    }
    const ShuffleFamily family{Family::A, n, 1, false};
    std::vector<Permutation> sigma;
    for (int m = 1; m <= n; ++m) sigma.push_back(Permutation::cycle_to_top(n, m));

    TrajectorySearch result;
    result.move_paths = move_paths_along(traj);
    std::vector<int> chosen;
    auto node = [&](const Permutation& g, const std::string& via) {
        nlohmann::json j = {{"deck", g.inverse().to_string()}, {"shape", rsk_shape(g).to_string()},
                            {"children", nlohmann::json::array()}};
        if (!via.empty()) j["generator"] = via;
        return j;
    };
    auto dfs = [&](auto&& self, const Permutation& g, std::size_t depth, nlohmann::json& out) -> void {
        if (depth + 1 == traj.size()) {
            result.sequences.emplace_back(family, chosen);
            return;
        }
        for (int m = 1; m <= n; ++m) {
            Permutation next = g * sigma[static_cast<std::size_t>(m - 1)];
            if (rsk_shape(next) != traj[depth + 1]) continue;
            chosen.push_back(m - 1);
            nlohmann::json child = node(next, "s" + std::to_string(m));
            self(self, next, depth + 1, child);
            out["children"].push_back(std::move(child));
            chosen.pop_back();
        }
    };
    const auto id = Permutation::identity(n);
    result.tree = node(id, "");
    if (rsk_shape(id) == traj.front()) dfs(dfs, id, 0, result.tree);
    return result;
}

nlohmann::json BijectionCheck::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [traj, c] : counts) {
        rows.push_back({{"trajectory", bellmoves::to_string(traj)},
                        {"sequences", bellmoves::to_string(c.first)},
                        {"move_paths", bellmoves::to_string(c.second)}});
    }
    nlohmann::json j = {{"n", n},
                        {"t", t},
                        {"trajectories", std::move(rows)},
                        {"sequence_total", bellmoves::to_string(sequence_total)},
                        {"move_total", bellmoves::to_string(move_total)},
                        {"verdict", agrees() ? "agree" : "disagree"}};
    if (first_disagreement) j["first_disagreement"] = bellmoves::to_string(*first_disagreement);
    return j;
}

BijectionCheck rsk_bijection_check(int n, int t) {
    if (n < 1 || n > 6 || t < 0 || t > 8) throw ResourceError("rsk_bijection_check: needs 1 <= n <= 6, 0 <= t <= 8");
    BijectionCheck check;
    check.n = n;
    check.t = t;
    const Partition top = Partition::one_row(n);

    // Shuffle side: every sequence, bucketed by its shape trajectory.
    std::vector<Permutation> sigma;
    for (int m = 1; m <= n; ++m) sigma.push_back(Permutation::cycle_to_top(n, m));
    ShapeTrajectory path{top};
    auto shuffles = [&](auto&& self, const Permutation& g, int depth) -> void {
        if (depth == t) {
            if (g.is_identity()) check.counts[path].first += 1;
            return;
        }
        for (const auto& s : sigma) {
            Permutation next = g * s;
            path.push_back(rsk_shape(next));
            self(self, next, depth + 1);
            path.pop_back();
        }
    };
    shuffles(shuffles, Permutation::identity(n), 0);

    // Move side: every closed walk in the move graph with its multiplicity.
    PartitionMoveGraph graph(n, false);
    const auto& states = graph.states();
    const auto& adj = graph.adjacency();
    const auto reach = graph.path_counts_from(top, t);  // symmetric graph: walks to (n) = walks from (n)
    const auto home = graph.index_of(top);
    auto moves = [&](auto&& self, Eigen::Index at, int depth, const BigInt& weight) -> void {
        if (depth == t) {
            if (at == home) check.counts[path].second += weight;
            return;
        }
        for (Eigen::Index j = 0; j < adj.cols(); ++j) {
            if (adj(at, j) == 0 || reach[static_cast<std::size_t>(t - depth - 1)][static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            path.push_back(states[static_cast<std::size_t>(j)]);
            self(self, j, depth + 1, weight * adj(at, j));
            path.pop_back();
        }
    };
    moves(moves, home, 0, BigInt(1));

    for (const auto& [traj, c] : check.counts) {
        check.sequence_total += c.first;
        check.move_total += c.second;
        if (c.first != c.second && !check.first_disagreement) check.first_disagreement = traj;
    }
    return check;
}

}  // namespace bellmoves
