#pragma once

// Brute-force counters that share no code with the library: plain vectors,
// unpruned enumeration, decks simulated card by card.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Growth = std::vector<int>;

// Every restricted growth string of length t, no pruning.
inline void each_set_partition(int t, const std::function<void(const Growth&)>& f) {
    Growth g(static_cast<std::size_t>(t), 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == t) {
            f(g);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            g[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

inline int block_count(const Growth& g) {
    int m = 0;
    for (int b : g) m = std::max(m, b + 1);
    return m;
}

// Cyclic condition: also 1 and t apart. For t = 1 the single element is both
// 1 and t, so no partition qualifies.
inline bool primed_ok(const Growth& g) {
    const auto t = g.size();
    if (t == 0) return true;
    if (t == 1) return false;
    for (std::size_t i = 0; i + 1 < t; ++i) {
        if (g[i] == g[i + 1]) return false;
    }
    return g.front() != g.back();
}

inline bool spaced_ok(const Growth& g) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        if (g[i] == g[i + 1]) return false;
    }
    return true;
}

enum class Kind { plain, primed, spaced };

// Set partitions of {1..t} into exactly n blocks.
inline std::int64_t stirling(int t, int n, Kind kind) {
    std::int64_t count = 0;
    each_set_partition(t, [&](const Growth& g) {
        if (block_count(g) != n) return;
        if (kind == Kind::primed && !primed_ok(g)) return;
        if (kind == Kind::spaced && !spaced_ok(g)) return;
        ++count;
    });
    return count;
}

inline std::int64_t bell(int t, int n, Kind kind) {
    std::int64_t s = 0;
    for (int k = 0; k <= n; ++k) s += stirling(t, k, kind);
    return s;
}

enum class MarkedKind { plain, dagger_primed, dagger_star };

// Marked set partitions into exactly n blocks: all 2^t mark sets, filtered.
inline std::int64_t marked_stirling(int t, int n, MarkedKind kind) {
    std::int64_t count = 0;
    each_set_partition(t, [&](const Growth& g) {
        if (block_count(g) != n) return;
        for (std::uint32_t marks = 0; marks < (1U << t); ++marks) {
            auto marked = [&](int i) { return (marks >> (i - 1)) & 1U; };
            std::vector<int> per_block(static_cast<std::size_t>(n), 0);
            for (int i = 1; i <= t; ++i) per_block[static_cast<std::size_t>(g[static_cast<std::size_t>(i - 1)])] += static_cast<int>(marked(i));
            if (std::any_of(per_block.begin(), per_block.end(), [](int c) { return c % 2 != 0; })) continue;
            bool ok = true;
            if (kind != MarkedKind::plain) {
                for (int i = 1; i < t && ok; ++i) {
                    if (g[static_cast<std::size_t>(i - 1)] == g[static_cast<std::size_t>(i)] && !marked(i + 1)) ok = false;
                }
            }
            if (kind == MarkedKind::dagger_primed && t >= 1 && g.front() == g.back() && !marked(1)) ok = false;
            if (ok) ++count;
        }
    });
    return count;
}

inline std::int64_t marked_bell(int t, int n, MarkedKind kind) {
    std::int64_t s = 0;
    for (int k = 0; k <= n; ++k) s += marked_stirling(t, k, kind);
    return s;
}

// A deck of n cards, top first; a negative card is face down.
using Deck = std::vector<int>;

inline Deck lift_to_top(Deck d, int m, bool flip) {
    int card = d[static_cast<std::size_t>(m - 1)];
    d.erase(d.begin() + (m - 1));
    d.insert(d.begin(), flip ? -card : card);
    return d;
}

// Sequences of t random-to-top (or oriented) shuffles restoring the deck.
// Without the identity: lifting the top card unflipped is skipped.
inline std::int64_t shuffle_sequences(int n, int t, bool oriented, bool exclude_identity) {
    Deck start(static_cast<std::size_t>(n));
    std::iota(start.begin(), start.end(), 1);
    std::int64_t count = 0;
    std::function<void(const Deck&, int)> rec = [&](const Deck& d, int left) {
        if (left == 0) {
            count += d == start ? 1 : 0;
            return;
        }
        for (int m = 1; m <= n; ++m) {
            for (int flip = 0; flip <= (oriented ? 1 : 0); ++flip) {
                if (exclude_identity && m == 1 && flip == 0) continue;
                rec(lift_to_top(d, m, flip != 0), left - 1);
            }
        }
    };
    if (n == 0) return t == 0 ? 1 : 0;
    rec(start, t);
    return count;
}

// Young diagram moves written from scratch: a partition is a vector of rows.
using Shape = std::vector<int>;

inline std::vector<Shape> moves(const Shape& p, bool primed) {
    std::vector<Shape> out;
    const int rows = static_cast<int>(p.size());
    int lowest_removable = -1;
    for (int r = 0; r < rows; ++r) {
        if (r + 1 == rows || p[static_cast<std::size_t>(r)] > p[static_cast<std::size_t>(r + 1)]) lowest_removable = r;
    }
    for (int r = 0; r < rows; ++r) {
        const bool removable = r + 1 == rows || p[static_cast<std::size_t>(r)] > p[static_cast<std::size_t>(r + 1)];
        if (!removable) continue;
        Shape q = p;
        --q[static_cast<std::size_t>(r)];
        if (q.back() == 0) q.pop_back();
        for (int a = 0; a <= static_cast<int>(q.size()); ++a) {
            const int len = a < static_cast<int>(q.size()) ? q[static_cast<std::size_t>(a)] : 0;
            if (a > 0 && q[static_cast<std::size_t>(a - 1)] == len) continue;
            if (primed && r == lowest_removable && a == r) continue;
            Shape s = q;
            if (a == static_cast<int>(s.size())) s.push_back(1);
            else ++s[static_cast<std::size_t>(a)];
            out.push_back(s);
        }
    }
    return out;
}

inline std::int64_t move_walks(int n, int t, bool primed) {
    if (n == 0) return t == 0 ? 1 : 0;
    const Shape top{n};
    std::map<Shape, std::int64_t> at{{top, 1}};
    for (int s = 0; s < t; ++s) {
        std::map<Shape, std::int64_t> next;
        for (const auto& [p, c] : at) {
            for (const auto& q : moves(p, primed)) next[q] += c;
        }
        at = std::move(next);
    }
    return at.count(top) ? at[top] : 0;
}

// (1/n!) sum over Sym_n of (fix - shift)^t, by next_permutation.
inline std::int64_t character_average(int n, int t, int shift) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::int64_t sum = 0, order = 0;
    do {
        std::int64_t fix = 0;
        for (int i = 0; i < n; ++i) fix += p[static_cast<std::size_t>(i)] == i ? 1 : 0;
        std::int64_t v = 1;
        for (int k = 0; k < t; ++k) v *= fix - shift;
        sum += v;
        ++order;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum / order;
}

}  // namespace oracle
