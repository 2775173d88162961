#include "bellmoves/structures.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bellmoves {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string_view strip_brackets(std::string_view s, char open, char close, std::string_view what) {
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close) {
        throw std::invalid_argument(std::string(what) + ": expected " + open + "..." + close + ", got '" +
                                    std::string(s) + "'");
    }
    return s.substr(1, s.size() - 2);
}

/// Splits on sep at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

int parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty integer field");
    std::size_t used = 0;
    int value = std::stoi(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view body) {
    std::vector<int> out;
    if (trim(body).empty()) return out;
    for (auto field : split_top_level(body, ',')) out.push_back(parse_int(field));
    return out;
}

template <typename Seq>
std::string join_ints(const Seq& xs, char open, char close) {
    std::string s(1, open);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    s += close;
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must weakly decrease");
    }
}

Partition Partition::parse(std::string_view text) {
    return Partition(parse_int_list(strip_brackets(text, '(', ')', "partition")));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return join_ints(parts_, '(', ')'); }

std::vector<Cell> removable_boxes(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 1; r <= p.length(); ++r) {
        if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
    }
    return out;
}

std::vector<Cell> addable_positions(const Partition& p) {
    std::vector<Cell> out;
    out.push_back({1, p.row(1) + 1});
    for (int r = 2; r <= p.length() + 1; ++r) {
        if (p.row(r - 1) > p.row(r)) out.push_back({r, p.row(r) + 1});
    }
    return out;
}

Partition remove_box(const Partition& p, Cell c) {
    if (c.row < 1 || c.row > p.length() || p.row(c.row) != c.col || p.row(c.row + 1) >= c.col) {
        throw std::invalid_argument("remove_box: (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                    ") is not removable from " + p.to_string());
    }
    std::vector<int> parts = p.parts();
    if (--parts[static_cast<std::size_t>(c.row - 1)] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition add_box(const Partition& p, Cell c) {
    bool ok = c.row >= 1 && c.row <= p.length() + 1 && p.row(c.row) + 1 == c.col &&
              (c.row == 1 || p.row(c.row - 1) >= c.col);
    if (!ok) {
        throw std::invalid_argument("add_box: (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                    ") is not addable to " + p.to_string());
    }
    std::vector<int> parts = p.parts();
    if (c.row == p.length() + 1) parts.push_back(1);
    else ++parts[static_cast<std::size_t>(c.row - 1)];
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

BigInt hook_dimension(const Partition& p) {
    BigInt hooks = 1;
    for (int r = 1; r <= p.length(); ++r) {
        for (int c = 1; c <= p.row(r); ++c) {
            int arm = p.row(r) - c;
            int leg = 0;
            while (p.row(r + leg + 1) >= c) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(p.size()) / hooks;
}

std::string DoublePartition::to_string() const { return "(" + first.to_string() + "," + second.to_string() + ")"; }

DoublePartition DoublePartition::parse(std::string_view text) {
    auto fields = split_top_level(strip_brackets(text, '(', ')', "double partition"), ',');
    if (fields.size() != 2) throw std::invalid_argument("double partition needs two components");
    return {Partition::parse(fields[0]), Partition::parse(fields[1])};
}

std::vector<DoublePartition> double_partitions_of(int n) {
    std::vector<DoublePartition> out;
    for (int first = n; first >= 0; --first) {
        for (const auto& a : partitions_of(first)) {
            for (const auto& b : partitions_of(n - first)) out.push_back({a, b});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Marked set partitions

MarkedSetPartition::MarkedSetPartition(int ground_size, std::vector<std::vector<int>> blocks, std::vector<int> marks)
    : ground_size_(ground_size),
      blocks_(std::move(blocks)),
      block_index_(static_cast<std::size_t>(ground_size), -1),
      marked_(static_cast<std::size_t>(ground_size), 0) {
    if (ground_size < 0) throw std::invalid_argument("MarkedSetPartition: negative ground size");
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("MarkedSetPartition: empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            if (x < 1 || x > ground_size) throw std::invalid_argument("MarkedSetPartition: element out of range");
            auto& slot = block_index_[static_cast<std::size_t>(x - 1)];
            if (slot != -1) throw std::invalid_argument("MarkedSetPartition: blocks overlap");
            slot = static_cast<int>(b);
        }
    }
    if (std::find(block_index_.begin(), block_index_.end(), -1) != block_index_.end()) {
        throw std::invalid_argument("MarkedSetPartition: blocks do not cover {1..t}");
    }
    for (int m : marks) {
        if (m < 1 || m > ground_size) throw std::invalid_argument("MarkedSetPartition: mark out of range");
        marked_[static_cast<std::size_t>(m - 1)] = 1;
    }
    for (const auto& block : blocks_) {
        int count = 0;
        for (int x : block) count += marked_[static_cast<std::size_t>(x - 1)];
        if (count % 2 != 0) throw std::invalid_argument("MarkedSetPartition: odd number of marks in a block");
    }
}

MarkedSetPartition MarkedSetPartition::from_growth_string(std::span<const int> growth, std::span<const char> marks) {
    int num_blocks = 0;
    for (int b : growth) num_blocks = std::max(num_blocks, b + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(num_blocks));
    std::vector<int> marked;
    for (std::size_t i = 0; i < growth.size(); ++i) {
        blocks[static_cast<std::size_t>(growth[i])].push_back(static_cast<int>(i + 1));
        if (!marks.empty() && marks[i]) marked.push_back(static_cast<int>(i + 1));
    }
    return MarkedSetPartition(static_cast<int>(growth.size()), std::move(blocks), std::move(marked));
}

MarkedSetPartition MarkedSetPartition::parse(std::string_view text) {
    auto body = trim(strip_brackets(text, '{', '}', "set partition"));
    std::vector<std::vector<int>> blocks;
    std::vector<int> marks;
    int count = 0;
    if (!body.empty()) {
        for (auto block_text : split_top_level(body, '|')) {
            std::vector<int> block;
            for (auto field : split_top_level(block_text, ',')) {
                bool marked = !field.empty() && field.back() == '*';
                if (marked) field.remove_suffix(1);
                int x = parse_int(field);
                block.push_back(x);
                if (marked) marks.push_back(x);
                ++count;
            }
            blocks.push_back(std::move(block));
        }
    }
    return MarkedSetPartition(count, std::move(blocks), std::move(marks));
}

std::vector<int> MarkedSetPartition::marks() const {
    std::vector<int> out;
    for (int i = 1; i <= ground_size_; ++i) {
        if (is_marked(i)) out.push_back(i);
    }
    return out;
}

bool MarkedSetPartition::has_marks() const {
    return std::any_of(marked_.begin(), marked_.end(), [](char c) { return c != 0; });
}

std::string MarkedSetPartition::to_string() const {
    std::string s = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) s += ',';
            s += std::to_string(blocks_[b][i]);
            if (is_marked(blocks_[b][i])) s += '*';
        }
    }
    return s + "}";
}

namespace {

// Depth-first over restricted growth strings. Element i (0-based) joins an
// existing block or opens block `used`; `allowed` prunes a placement, and
// `mark_options` returns which marks (bit 0 = unmarked, bit 1 = marked) are
// legal for it.
template <typename Allowed, typename MarkOptions>
void growth_search(int t, int min_blocks, int max_blocks, bool marked, Allowed&& allowed, MarkOptions&& mark_options,
                   const GrowthVisitor& visit) {
    if (t < 0) throw std::invalid_argument("set partitions: negative ground size");
    if (max_blocks < 0) return;
    std::vector<int> growth(static_cast<std::size_t>(t), 0);
    std::vector<char> marks(static_cast<std::size_t>(t), 0);
    std::vector<int> parity(static_cast<std::size_t>(t) + 1, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (used + (t - i) < min_blocks) return;
        if (i == t) {
            if (marked) {
                for (int b = 0; b < used; ++b) {
                    if (parity[static_cast<std::size_t>(b)] != 0) return;
                }
            }
            visit(growth, marked ? std::span<const char>(marks) : std::span<const char>());
            return;
        }
        const int top = std::min(used, max_blocks - 1);
        for (int b = 0; b <= top; ++b) {
            if (!allowed(growth, i, b)) continue;
            growth[static_cast<std::size_t>(i)] = b;
            const int next_used = std::max(used, b + 1);
            if (!marked) {
                self(self, i + 1, next_used);
                continue;
            }
            const int options = mark_options(growth, marks, i, b);
            for (char m = 0; m <= 1; ++m) {
                if (!(options & (1 << m))) continue;
                marks[static_cast<std::size_t>(i)] = m;
                parity[static_cast<std::size_t>(b)] ^= m;
                self(self, i + 1, next_used);
                parity[static_cast<std::size_t>(b)] ^= m;
            }
            marks[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

void visit_set_partitions(int t, int min_blocks, int max_blocks, SetPartitionConstraint constraint,
                          const GrowthVisitor& visit) {
    auto allowed = [&](const std::vector<int>& g, int i, int b) {
        if (constraint == SetPartitionConstraint::none) return true;
        if (i >= 1 && g[static_cast<std::size_t>(i - 1)] == b) return false;
        if (constraint == SetPartitionConstraint::primed && i == t - 1) {
            // 1 and t share a block; for t = 1 they are the same element.
            if (t == 1 || g[0] == b) return false;
        }
        return true;
    };
    growth_search(t, min_blocks, max_blocks, false, allowed, [](auto&&...) { return 1; }, visit);
}

void visit_marked_set_partitions(int t, int min_blocks, int max_blocks, MarkedConstraint constraint,
                                 const GrowthVisitor& visit) {
    auto allowed = [](const std::vector<int>&, int, int) { return true; };
    auto mark_options = [&](const std::vector<int>& g, const std::vector<char>& marks, int i, int b) {
        if (constraint == MarkedConstraint::none) return 0b11;
        int options = 0b11;
        if (i >= 1 && g[static_cast<std::size_t>(i - 1)] == b) options &= 0b10;
        if (constraint == MarkedConstraint::dagger_primed && i == t - 1) {
            if (t == 1) options &= 0b10;
            else if (g[0] == b && !marks[0]) options = 0;
        }
        return options;
    };
    growth_search(t, min_blocks, max_blocks, true, allowed, mark_options, visit);
}

std::vector<MarkedSetPartition> enumerate_set_partitions(int t, int max_blocks, SetPartitionConstraint constraint) {
    std::vector<MarkedSetPartition> out;
    visit_set_partitions(t, 0, max_blocks, constraint, [&](std::span<const int> g, std::span<const char>) {
        out.push_back(MarkedSetPartition::from_growth_string(g));
    });
    return out;
}

std::vector<MarkedSetPartition> enumerate_marked_set_partitions(int t, int max_blocks, MarkedConstraint constraint) {
    std::vector<MarkedSetPartition> out;
    visit_marked_set_partitions(t, 0, max_blocks, constraint, [&](std::span<const int> g, std::span<const char> m) {
        out.push_back(MarkedSetPartition::from_growth_string(g, m));
    });
    return out;
}

BigInt count_set_partitions(int t, int max_blocks, SetPartitionConstraint constraint, bool exact_blocks) {
    std::uint64_t count = 0;
    visit_set_partitions(t, exact_blocks ? max_blocks : 0, max_blocks, constraint,
                         [&](std::span<const int>, std::span<const char>) { ++count; });
    return BigInt(count);
}

BigInt count_marked_set_partitions(int t, int max_blocks, MarkedConstraint constraint, bool exact_blocks) {
    std::uint64_t count = 0;
    visit_marked_set_partitions(t, exact_blocks ? max_blocks : 0, max_blocks, constraint,
                                [&](std::span<const int>, std::span<const char>) { ++count; });
    return BigInt(count);
}

// ---------------------------------------------------------------------------
// Permutations

std::string to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::D: return "D";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "A") return Family::A;
    if (text == "B") return Family::B;
    if (text == "D") return Family::D;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected A, B or D)");
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x)]) {
            throw std::invalid_argument("Permutation: images are not a bijection of {1..n}");
        }
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::cycle_to_top(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("cycle_to_top: need 1 <= m <= n");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (int i = 1; i < m; ++i) images[static_cast<std::size_t>(i - 1)] = i + 1;
    images[static_cast<std::size_t>(m - 1)] = 1;
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    return Permutation(parse_int_list(strip_brackets(text, '[', ']', "permutation")));
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (other.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[i] = other(images_[i]);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

int Permutation::fixed_points() const {
    int count = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i + 1);
    return count;
}

std::string Permutation::to_string() const { return join_ints(images_, '[', ']'); }

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int x : images_) {
        int a = x < 0 ? -x : x;
        if (a < 1 || a > degree() || seen[static_cast<std::size_t>(a)]) {
            throw std::invalid_argument("SignedPermutation: |images| do not permute {1..n}");
        }
        seen[static_cast<std::size_t>(a)] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) { return SignedPermutation(Permutation::identity(n)); }

SignedPermutation SignedPermutation::flip_bottom(int n) {
    auto images = Permutation::identity(n).images();
    images.back() = -n;
    return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    return SignedPermutation(parse_int_list(strip_brackets(text, '[', ']', "signed permutation")));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const {
    if (other.degree() != degree()) throw std::invalid_argument("SignedPermutation: degree mismatch");
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[i] = other(images_[i]);
    return SignedPermutation(std::move(images));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        int x = images_[i];
        int a = x < 0 ? -x : x;
        images[static_cast<std::size_t>(a - 1)] = x < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
    }
    return SignedPermutation(std::move(images));
}

bool SignedPermutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

int SignedPermutation::negative_count() const {
    return static_cast<int>(std::count_if(images_.begin(), images_.end(), [](int x) { return x < 0; }));
}

bool SignedPermutation::in_family(Family f) const {
    switch (f) {
        case Family::A: return negative_count() == 0;
        case Family::B: return true;
        case Family::D: return negative_count() % 2 == 0;
    }
    return false;
}

Permutation SignedPermutation::underlying() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[i] = images_[i] < 0 ? -images_[i] : images_[i];
    return Permutation(std::move(images));
}

std::string SignedPermutation::to_string() const { return join_ints(images_, '[', ']'); }

std::size_t SignedPermutationHash::operator()(const SignedPermutation& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : g.images()) {
        h ^= static_cast<std::size_t>(x + 64);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<SignedPermutation> enumerate_group(Family family, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_group: n must be at least 1");
    if (n > 20) throw ResourceError("enumerate_group: n too large");
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    const std::uint32_t masks = family == Family::A ? 1U : (1U << n);
    do {
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            if (family == Family::D && std::popcount(mask) % 2 != 0) continue;
            std::vector<int> images = perm;
            for (int i = 0; i < n; ++i) {
                if (mask & (1U << i)) images[static_cast<std::size_t>(i)] = -images[static_cast<std::size_t>(i)];
            }
            out.emplace_back(std::move(images));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

BigInt group_order(Family family, int n) {
    BigInt order = factorial(n);
    if (family == Family::B) order *= pow_int(2, static_cast<unsigned long>(n));
    if (family == Family::D && n >= 1) order *= pow_int(2, static_cast<unsigned long>(n - 1));
    return order;
}

}  // namespace bellmoves
