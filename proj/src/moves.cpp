#include "bellmoves/moves.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellmoves {

std::vector<Partition> move_targets(const Partition& p, bool primed) {
    std::vector<Partition> out;
    const auto boxes = removable_boxes(p);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
        const Partition removed = remove_box(p, boxes[b]);
        for (const Cell& a : addable_positions(removed)) {
            if (primed && b + 1 == boxes.size() && a == boxes[b]) continue;
            out.push_back(add_box(removed, a));
        }
    }
    return out;
}

std::vector<DoublePartition> double_move_targets(const DoublePartition& d, bool primed) {
    std::vector<DoublePartition> out;
    // Exceptional move: (diagram, box).
    const bool first_has_box = !d.first.empty();
    const auto& home = first_has_box ? d.first : d.second;
    const auto home_boxes = removable_boxes(home);
    const Cell exceptional = home_boxes.empty() ? Cell{} : home_boxes.back();

    for (int from = 0; from < 2; ++from) {
        const Partition& source = from == 0 ? d.first : d.second;
        for (const Cell& box : removable_boxes(source)) {
            DoublePartition removed = d;
            (from == 0 ? removed.first : removed.second) = remove_box(source, box);
            for (int to = 0; to < 2; ++to) {
                const Partition& target = to == 0 ? removed.first : removed.second;
                for (const Cell& a : addable_positions(target)) {
                    const bool is_exceptional = primed && from == to && (from == 0) == first_has_box &&
                                                box == exceptional && a == box;
                    if (is_exceptional) continue;
                    DoublePartition moved = removed;
                    (to == 0 ? moved.first : moved.second) = add_box(target, a);
                    out.push_back(std::move(moved));
                }
            }
        }
    }
    return out;
}

int move_multiplicity(const Partition& p, const Partition& q, bool primed) {
    const auto targets = move_targets(p, primed);
    return static_cast<int>(std::count(targets.begin(), targets.end(), q));
}

int move_multiplicity(const DoublePartition& p, const DoublePartition& q, bool primed) {
    const auto targets = double_move_targets(p, primed);
    return static_cast<int>(std::count(targets.begin(), targets.end(), q));
}

namespace {

std::vector<Partition> states_of(const Partition*, int n) { return partitions_of(n); }
std::vector<DoublePartition> states_of(const DoublePartition*, int n) { return double_partitions_of(n); }
std::vector<Partition> targets_of(const Partition& p, bool primed) { return move_targets(p, primed); }
std::vector<DoublePartition> targets_of(const DoublePartition& d, bool primed) {
    return double_move_targets(d, primed);
}

}  // namespace

template <typename State>
MoveGraph<State>::MoveGraph(int n, bool primed) : n_(n), primed_(primed) {
    if (n < 0) throw std::invalid_argument("MoveGraph: negative size");
    states_ = states_of(static_cast<const State*>(nullptr), n);
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], static_cast<Eigen::Index>(i));
    const auto count = static_cast<Eigen::Index>(states_.size());
    adjacency_ = IntMatrix::Zero(count, count);
    for (Eigen::Index i = 0; i < count; ++i) {
        for (const State& target : targets_of(states_[static_cast<std::size_t>(i)], primed)) {
            adjacency_(i, index_of(target)) += 1;
        }
    }
}

template <typename State>
Eigen::Index MoveGraph<State>::index_of(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        throw std::invalid_argument(s.to_string() + " is not a state of size " + std::to_string(n_));
    }
    return it->second;
}

template <typename State>
BigInt MoveGraph<State>::count_paths(const State& start, const State& end, int t) const {
    if (t < 0) throw std::invalid_argument("count_paths: negative length");
    const Eigen::Index i = index_of(start);
    const Eigen::Index j = index_of(end);
    return mat_pow(adjacency_, static_cast<unsigned long>(t))(i, j);
}

template <typename State>
std::vector<std::vector<BigInt>> MoveGraph<State>::path_counts_from(const State& start, int t_max) const {
    if (t_max < 0) throw std::invalid_argument("path_counts_from: negative length");
    IntMatrix row = IntMatrix::Zero(1, adjacency_.cols());
    row(0, index_of(start)) = 1;
    std::vector<std::vector<BigInt>> out;
    for (int t = 0; t <= t_max; ++t) {
        if (t > 0) row = mat_mul(row, adjacency_);
        out.emplace_back(row.data(), row.data() + row.size());
    }
    return out;
}

template <typename State>
nlohmann::json MoveGraph<State>::to_json() const {
    nlohmann::json states = nlohmann::json::array();
    nlohmann::json adjacency = nlohmann::json::object();
    for (std::size_t i = 0; i < states_.size(); ++i) {
        states.push_back(states_[i].to_string());
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < states_.size(); ++j) {
            const auto& m = adjacency_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (m != 0) row.push_back({states_[j].to_string(), m.template convert_to<long long>()});
        }
        adjacency[states_[i].to_string()] = std::move(row);
    }
    return {{"states", std::move(states)}, {"adjacency", std::move(adjacency)}};
}

template class MoveGraph<Partition>;
template class MoveGraph<DoublePartition>;

namespace {

bool is_primed(MoveVariant v) { return v == MoveVariant::A_primed || v == MoveVariant::B_primed; }
bool is_type_a(MoveVariant v) { return v == MoveVariant::A || v == MoveVariant::A_primed; }

}  // namespace

BigInt count_move_sequences(const Partition& start, const Partition& end, int t, MoveVariant variant) {
    if (!is_type_a(variant)) throw std::invalid_argument("count_move_sequences: B variants take double partitions");
    if (start.size() != end.size()) throw std::invalid_argument("count_move_sequences: sizes differ");
    return PartitionMoveGraph(start.size(), is_primed(variant)).count_paths(start, end, t);
}

BigInt count_move_sequences(const DoublePartition& start, const DoublePartition& end, int t, MoveVariant variant) {
    if (is_type_a(variant)) throw std::invalid_argument("count_move_sequences: A variants take partitions");
    if (start.size() != end.size()) throw std::invalid_argument("count_move_sequences: sizes differ");
    return DoubleMoveGraph(start.size(), is_primed(variant)).count_paths(start, end, t);
}

std::vector<BigInt> move_counts(int n, int t_max, MoveVariant variant) {
    std::vector<BigInt> out;
    if (is_type_a(variant)) {
        PartitionMoveGraph graph(n, is_primed(variant));
        const auto home = graph.index_of(Partition::one_row(n));
        for (const auto& row : graph.path_counts_from(Partition::one_row(n), t_max)) {
            out.push_back(row[static_cast<std::size_t>(home)]);
        }
    } else {
        DoubleMoveGraph graph(n, is_primed(variant));
        const DoublePartition start{Partition::one_row(n), {}};
        const auto home = graph.index_of(start);
        for (const auto& row : graph.path_counts_from(start, t_max)) out.push_back(row[static_cast<std::size_t>(home)]);
    }
    return out;
}

std::vector<BigInt> d_move_counts(int n, int t_max, bool primed) {
    if (n < 1) throw std::invalid_argument("d_move_counts: n must be at least 1");
    DoubleMoveGraph graph(n, primed);
    const DoublePartition start{Partition::one_row(n), {}};
    const auto a = static_cast<std::size_t>(graph.index_of(start));
    const auto b = static_cast<std::size_t>(graph.index_of({{}, Partition::one_row(n)}));
    std::vector<BigInt> out;
    for (const auto& row : graph.path_counts_from(start, t_max)) out.push_back(row[a] + row[b]);
    return out;
}

BigInt count_d_move_sequences(int n, int t, bool primed) {
    if (t < 0) throw std::invalid_argument("count_d_move_sequences: negative length");
    return d_move_counts(n, t, primed).back();
}

}  // namespace bellmoves
