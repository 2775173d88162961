#include "bellmoves/shuffles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bellmoves {

namespace {

/// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int x = next; x <= n - (k - static_cast<int>(current.size())) + 1; ++x) {
            current.push_back(x);
            self(self, x + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::string join_dots(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(xs[i]);
    }
    return s;
}

/// Unflipped cards U go to positions 1..|U| in order, flipped cards F to
/// positions k..|U|+1 (order reversed, signs negated), the rest below.
SignedPermutation oriented_shuffle(int n, const std::vector<int>& unflipped, const std::vector<int>& flipped) {
    const int k = static_cast<int>(unflipped.size() + flipped.size());
    std::vector<int> images(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < unflipped.size(); ++i) {
        images[static_cast<std::size_t>(unflipped[i] - 1)] = static_cast<int>(i + 1);
    }
    for (std::size_t i = 0; i < flipped.size(); ++i) {
        images[static_cast<std::size_t>(flipped[i] - 1)] = -(k - static_cast<int>(i));
    }
    int next = k + 1;
    for (auto& x : images) {
        if (x == 0) x = next++;
    }
    return SignedPermutation(std::move(images));
}

bool increasing(const std::vector<int>& xs, std::size_t from, std::size_t to) {
    for (std::size_t i = from + 1; i < to; ++i) {
        if (xs[i - 1] >= xs[i]) return false;
    }
    return true;
}

}  // namespace

void ShuffleFamily::validate() const {
    if (n < 1) throw std::invalid_argument("shuffle family: n must be at least 1");
    if (k < 1 || k > n) throw std::invalid_argument("shuffle family: need 1 <= k <= n");
}

std::string ShuffleFamily::to_string() const {
    return bellmoves::to_string(family) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
           (exclude_identity ? ",no-identity)" : ")");
}

std::vector<Generator> generators(const ShuffleFamily& f) {
    f.validate();
    std::vector<Generator> out;
    const auto subsets = k_subsets(f.n, f.k);
    if (f.family == Family::A) {
        for (const auto& u : subsets) {
            out.push_back({oriented_shuffle(f.n, u, {}), "s" + join_dots(u)});
        }
    } else {
        const auto flip = SignedPermutation::flip_bottom(f.n);
        for (const auto& chosen : subsets) {
            for (std::uint32_t mask = 0; mask < (1U << f.k); ++mask) {
                std::vector<int> u, fl;
                for (int i = 0; i < f.k; ++i) (mask & (1U << i) ? fl : u).push_back(chosen[static_cast<std::size_t>(i)]);
                std::string name;
                if (fl.empty()) name = "rho" + join_dots(u);
                else if (u.empty()) name = "rhobar" + join_dots(fl);
                else name = "rhobar" + join_dots(u) + ":" + join_dots(fl);
                auto g = oriented_shuffle(f.n, u, fl);
                if (f.family == Family::D && !g.in_family(Family::D)) {
                    g = g * flip;
                    name = "cheat-" + name;
                }
                out.push_back({std::move(g), std::move(name)});
            }
        }
    }
    if (f.exclude_identity) out.erase(out.begin());
    return out;
}

std::vector<SignedPermutation> distinct_generators(const ShuffleFamily& f) {
    ShuffleFamily all = f;
    all.exclude_identity = false;
    std::vector<SignedPermutation> out;
    for (auto& g : generators(all)) {
        if (f.exclude_identity && g.perm.is_identity()) continue;
        if (std::find(out.begin(), out.end(), g.perm) == out.end()) out.push_back(std::move(g.perm));
    }
    return out;
}

// ---------------------------------------------------------------------------

GroupTable::GroupTable(Family family, int n, std::size_t max_order) : family_(family), n_(n) {
    if (n < 1) throw std::invalid_argument("GroupTable: n must be at least 1");
    if (group_order(family, n) > max_order) {
        throw ResourceError("group " + to_string(family) + "_" + std::to_string(n) + " has order " +
                            bellmoves::to_string(group_order(family, n)) + ", above the cap of " +
                            std::to_string(max_order));
    }
    elements_ = enumerate_group(family, n);
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    identity_ = index_of(SignedPermutation::identity(n));
}

std::size_t GroupTable::index_of(const SignedPermutation& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) {
        throw std::invalid_argument(g.to_string() + " is not in " + to_string(family_) + "_" + std::to_string(n_));
    }
    return it->second;
}

std::vector<std::vector<std::size_t>> GroupTable::right_multiplication(const std::vector<SignedPermutation>& xs) const {
    std::vector<std::vector<std::size_t>> table(size(), std::vector<std::size_t>(xs.size()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) table[i][j] = index_of(elements_[i] * xs[j]);
    }
    return table;
}

std::vector<BigInt> walk_counts(const GroupTable& group, const std::vector<SignedPermutation>& steps, int t) {
    if (t < 0) throw std::invalid_argument("walk_counts: negative length");
    const auto table = group.right_multiplication(steps);
    std::vector<BigInt> v(group.size(), BigInt(0));
    v[group.identity_index()] = 1;
    for (int s = 0; s < t; ++s) {
        std::vector<BigInt> next(group.size(), BigInt(0));
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (v[i] == 0) continue;
            for (std::size_t target : table[i]) next[target] += v[i];
        }
        v = std::move(next);
    }
    return v;
}

std::vector<BigInt> identity_sequence_counts(const ShuffleFamily& f, int t_max, std::size_t max_group_order) {
    if (t_max < 0) throw std::invalid_argument("identity_sequence_counts: negative length");
    std::vector<BigInt> out;
    if (f.n == 0) {
        for (int t = 0; t <= t_max; ++t) out.push_back(t == 0 ? 1 : 0);
        return out;
    }
    GroupTable group(f.family, f.n, max_group_order);
    const auto table = group.right_multiplication(distinct_generators(f));
    std::vector<BigInt> v(group.size(), BigInt(0));
    v[group.identity_index()] = 1;
    out.push_back(1);
    for (int t = 1; t <= t_max; ++t) {
        std::vector<BigInt> next(group.size(), BigInt(0));
        for (std::size_t i = 0; i < group.size(); ++i) {
            if (v[i] == 0) continue;
            for (std::size_t target : table[i]) next[target] += v[i];
        }
        v = std::move(next);
        out.push_back(v[group.identity_index()]);
    }
    return out;
}

BigInt count_identity_sequences(const ShuffleFamily& f, int t, std::size_t max_group_order) {
    return identity_sequence_counts(f, t, max_group_order).back();
}

// ---------------------------------------------------------------------------

ShuffleSequence::ShuffleSequence(ShuffleFamily family, std::vector<int> indices)
    : family_(family), indices_(std::move(indices)) {
    family_.validate();
    const auto count = static_cast<int>(generators(family_).size());
    for (int i : indices_) {
        if (i < 0 || i >= count) {
            throw std::invalid_argument("generator index " + std::to_string(i) + " out of range for " +
                                        family_.to_string());
        }
    }
}

SignedPermutation ShuffleSequence::product() const {
    const auto gens = generators(family_);
    auto g = SignedPermutation::identity(family_.n);
    for (int i : indices_) g = g * gens[static_cast<std::size_t>(i)].perm;
    return g;
}

std::vector<std::string> ShuffleSequence::names() const {
    const auto gens = generators(family_);
    std::vector<std::string> out;
    for (int i : indices_) out.push_back(gens[static_cast<std::size_t>(i)].name);
    return out;
}

ShuffleSequence ShuffleSequence::from_names(const ShuffleFamily& family, const std::vector<std::string>& names) {
    const auto gens = generators(family);
    std::vector<int> indices;
    for (const auto& name : names) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == name; });
        if (it == gens.end()) throw std::invalid_argument("unknown generator '" + name + "' for " + family.to_string());
        indices.push_back(static_cast<int>(it - gens.begin()));
    }
    return ShuffleSequence(family, std::move(indices));
}

ShuffleSequence partition_to_sequence(const MarkedSetPartition& p, Family family, int n) {
    if (family == Family::D) throw std::invalid_argument("partition_to_sequence: family must be A or B");
    if (family == Family::A && p.has_marks()) throw std::invalid_argument("partition_to_sequence: marks need type B");
    if (p.num_blocks() > n) {
        throw std::invalid_argument("partition_to_sequence: " + std::to_string(p.num_blocks()) +
                                    " blocks exceed deck size " + std::to_string(n));
    }
    // Card c+1 owns the block with the c-th largest maximum.
    std::vector<int> order(static_cast<std::size_t>(p.num_blocks()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return p.blocks()[static_cast<std::size_t>(a)].back() > p.blocks()[static_cast<std::size_t>(b)].back();
    });
    std::vector<int> card_of_block(order.size());
    for (std::size_t c = 0; c < order.size(); ++c) card_of_block[static_cast<std::size_t>(order[c])] = static_cast<int>(c + 1);

    std::vector<int> deck(static_cast<std::size_t>(n));
    std::iota(deck.begin(), deck.end(), 1);
    std::vector<int> indices;
    for (int s = 1; s <= p.ground_size(); ++s) {
        const int card = card_of_block[static_cast<std::size_t>(p.block_of(s))];
        auto it = std::find(deck.begin(), deck.end(), card);
        const int m = static_cast<int>(it - deck.begin()) + 1;
        std::rotate(deck.begin(), it, it + 1);
        indices.push_back(family == Family::A ? m - 1 : 2 * (m - 1) + (p.is_marked(s) ? 1 : 0));
    }
    ShuffleSequence seq({family, n, 1, false}, std::move(indices));
    if (!seq.product().is_identity()) throw std::logic_error("partition_to_sequence: product is not the identity");
    return seq;
}

MarkedSetPartition sequence_to_partition(const ShuffleSequence& s) {
    const auto& f = s.family();
    if (f.k != 1 || f.family == Family::D) {
        throw std::invalid_argument("sequence_to_partition: needs a type A or B random-to-top family");
    }
    if (!s.product().is_identity()) throw std::invalid_argument("sequence_to_partition: product is not the identity");
    const auto gens = generators(f);
    std::vector<int> deck(static_cast<std::size_t>(f.n));
    std::iota(deck.begin(), deck.end(), 1);
    std::vector<std::vector<int>> times(static_cast<std::size_t>(f.n));
    std::vector<int> marks;
    int time = 0;
    for (int index : s.indices()) {
        ++time;
        const auto& g = gens[static_cast<std::size_t>(index)].perm;
        int m = 1;
        while (g(m) != 1 && g(m) != -1) ++m;
        if (g(m) < 0) marks.push_back(time);
        auto it = deck.begin() + (m - 1);
        times[static_cast<std::size_t>(*it - 1)].push_back(time);
        std::rotate(deck.begin(), it, it + 1);
    }
    std::vector<std::vector<int>> blocks;
    for (auto& ts : times) {
        if (!ts.empty()) blocks.push_back(std::move(ts));
    }
    return MarkedSetPartition(time, std::move(blocks), std::move(marks));
}

bool is_k_shuffle(const Permutation& p, int k) {
    if (k < 0 || k > p.degree()) return false;
    const auto q = p.inverse().images();
    return increasing(q, 0, static_cast<std::size_t>(k)) && increasing(q, static_cast<std::size_t>(k), q.size());
}

bool is_oriented_k_shuffle(const SignedPermutation& g, int k) {
    if (k < 0 || k > g.degree()) return false;
    const auto q = g.inverse().images();
    const auto kk = static_cast<std::size_t>(k);
    std::size_t split = 0;
    while (split < kk && q[split] > 0) ++split;
    for (std::size_t i = split; i < kk; ++i) {
        if (q[i] > 0) return false;
    }
    for (std::size_t i = kk; i < q.size(); ++i) {
        if (q[i] < 0) return false;
    }
    return increasing(q, 0, split) && increasing(q, split, kk) && increasing(q, kk, q.size());
}

bool is_cheating_k_shuffle(const SignedPermutation& g, int k) {
    if (!g.in_family(Family::D)) return false;
    return is_oriented_k_shuffle(g, k) || is_oriented_k_shuffle(g * SignedPermutation::flip_bottom(g.degree()), k);
}

}  // namespace bellmoves
