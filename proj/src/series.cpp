#include "bellmoves/series.hpp"

#include "bellmoves/moves.hpp"
#include "bellmoves/shuffles.hpp"
#include "bellmoves/structures.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace bellmoves {

namespace {

using Grid = std::vector<std::vector<BigInt>>;

constexpr int kEnumerationMaxT = 12;

Grid zero_grid(int t_max, int n_max) {
    return Grid(static_cast<std::size_t>(t_max + 1), std::vector<BigInt>(static_cast<std::size_t>(n_max + 1), BigInt(0)));
}

BigInt& cell(Grid& g, int t, int n) { return g[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)]; }
const BigInt& cell(const Grid& g, int t, int n) { return g[static_cast<std::size_t>(t)][static_cast<std::size_t>(n)]; }

// The four Bell-type families sharing one Stirling triangle each.
enum class Kind { plain, primed, dagger, dagger_primed };

std::optional<Kind> kind_of(Variant v) {
    switch (v) {
        case Variant::B:
        case Variant::stir: return Kind::plain;
        case Variant::Bprime:
        case Variant::stirprime: return Kind::primed;
        case Variant::Bdagger:
        case Variant::stirdagger: return Kind::dagger;
        case Variant::Bdaggerprime:
        case Variant::stirdaggerprime: return Kind::dagger_primed;
        default: return std::nullopt;
    }
}

bool is_bell(Variant v) {
    return v == Variant::B || v == Variant::Bprime || v == Variant::Bdagger || v == Variant::Bdaggerprime;
}

bool is_primed(Kind k) { return k == Kind::primed || k == Kind::dagger_primed; }
bool is_dagger(Kind k) { return k == Kind::dagger || k == Kind::dagger_primed; }

BigInt indicator(bool b) { return b ? 1 : 0; }

/// Stirling triangle from the column recurrences.
Grid stirling_recurrence(Kind kind, int t_max, int n_max) {
    Grid s = zero_grid(t_max, n_max);
    for (int t = 0; t <= t_max; ++t) {
        for (int n = 0; n <= n_max; ++n) {
            BigInt& v = cell(s, t, n);
            if (n == 0) {
                v = indicator(t == 0);
            } else if (t == 0) {
                v = 0;
            } else if (kind == Kind::plain) {
                v = cell(s, t - 1, n - 1) + BigInt(n) * cell(s, t - 1, n);
            } else if (kind == Kind::dagger) {
                v = cell(s, t - 1, n - 1) + BigInt(2 * n) * cell(s, t - 1, n);
            } else if (kind == Kind::primed) {
                if (n == 1) v = 0;
                else if (n == 2) v = indicator(t % 2 == 0);
                else v = cell(s, t - 1, n - 1) + BigInt(n - 1) * cell(s, t - 1, n);
            } else {
                if (n == 1) v = indicator(t % 2 == 0);
                else if (n == 2) v = cell(s, t, 1) + BigInt(3) * cell(s, t - 1, 2);
                else v = cell(s, t - 1, n - 1) + BigInt(2 * n - 1) * cell(s, t - 1, n);
            }
        }
    }
    return s;
}

BigInt closed_form_kind(Kind kind, int t, int n) {
    if (t < 0 || n < 0) throw std::invalid_argument("closed_form: negative argument");
    if (is_primed(kind) && n < 2) throw std::invalid_argument("closed_form: the primed formulas need n >= 2");
    BigRational sum = 0;
    const int top = is_primed(kind) ? n - 1 : n;
    for (int k = 0; k <= top; ++k) {
        BigInt base;
        switch (kind) {
            case Kind::plain: base = n - k; break;
            case Kind::primed: base = n - k - 1; break;
            case Kind::dagger: base = 2 * (n - k); break;
            case Kind::dagger_primed: base = 2 * (n - k) - 1; break;
        }
        BigInt term = binomial(n, k) * pow_int(base, static_cast<unsigned long>(t));
        sum += (k % 2 == 0) ? BigRational(term) : BigRational(-term);
    }
    if (is_primed(kind)) sum += ((n + t) % 2 == 0) ? 1 : -1;
    BigInt denominator = factorial(n);
    if (is_dagger(kind)) denominator *= pow_int(2, static_cast<unsigned long>(n));
    sum /= BigRational(denominator);
    if (boost::multiprecision::denominator(sum) != 1) {
        throw std::logic_error("closed_form: non-integral value at t=" + std::to_string(t) + ", n=" + std::to_string(n));
    }
    return boost::multiprecision::numerator(sum);
}

Grid stirling_closed(Kind kind, int t_max, int n_max) {
    Grid s = zero_grid(t_max, n_max);
    for (int t = 0; t <= t_max; ++t) {
        for (int n = 0; n <= n_max; ++n) {
            if (n == 0) cell(s, t, n) = indicator(t == 0);
            else if (n == 1 && kind == Kind::primed) cell(s, t, n) = 0;
            else if (n == 1 && kind == Kind::dagger_primed) cell(s, t, n) = indicator(t >= 2 && t % 2 == 0);
            else cell(s, t, n) = closed_form_kind(kind, t, n);
        }
    }
    return s;
}

/// Counts with exactly n blocks, by enumeration.
Grid stirling_enumeration(Kind kind, int t_max, int n_max) {
    if (t_max > kEnumerationMaxT) {
        throw ResourceError("enumeration is capped at t <= " + std::to_string(kEnumerationMaxT));
    }
    Grid s = zero_grid(t_max, n_max);
    for (int t = 0; t <= t_max; ++t) {
        std::vector<std::uint64_t> histogram(static_cast<std::size_t>(t + 1), 0);
        auto count = [&](std::span<const int> g, std::span<const char>) {
            int blocks = 0;
            for (int b : g) blocks = std::max(blocks, b + 1);
            ++histogram[static_cast<std::size_t>(blocks)];
        };
        const int max_blocks = std::min(t, n_max);
        switch (kind) {
            case Kind::plain: visit_set_partitions(t, 0, max_blocks, SetPartitionConstraint::none, count); break;
            case Kind::primed: visit_set_partitions(t, 0, max_blocks, SetPartitionConstraint::primed, count); break;
            case Kind::dagger: visit_marked_set_partitions(t, 0, max_blocks, MarkedConstraint::none, count); break;
            case Kind::dagger_primed:
                visit_marked_set_partitions(t, 0, max_blocks, MarkedConstraint::dagger_primed, count);
                break;
        }
        for (int n = 0; n <= std::min(t, n_max); ++n) cell(s, t, n) = histogram[static_cast<std::size_t>(n)];
    }
    return s;
}

/// Star counts (no i, i+1 together / i+1 marked when together), exactly n blocks.
Grid star_enumeration(bool dagger, int t_max, int n_max) {
    if (t_max > kEnumerationMaxT) {
        throw ResourceError("enumeration is capped at t <= " + std::to_string(kEnumerationMaxT));
    }
    Grid s = zero_grid(t_max, n_max);
    for (int t = 0; t <= t_max; ++t) {
        std::vector<std::uint64_t> histogram(static_cast<std::size_t>(t + 1), 0);
        auto count = [&](std::span<const int> g, std::span<const char>) {
            int blocks = 0;
            for (int b : g) blocks = std::max(blocks, b + 1);
            ++histogram[static_cast<std::size_t>(blocks)];
        };
        const int max_blocks = std::min(t, n_max);
        if (dagger) visit_marked_set_partitions(t, 0, max_blocks, MarkedConstraint::dagger_star, count);
        else visit_set_partitions(t, 0, max_blocks, SetPartitionConstraint::spaced, count);
        for (int n = 0; n <= std::min(t, n_max); ++n) cell(s, t, n) = histogram[static_cast<std::size_t>(n)];
    }
    return s;
}

Grid cumulative(const Grid& s) {
    Grid b = s;
    for (auto& row : b) {
        for (std::size_t n = 1; n < row.size(); ++n) row[n] += row[n - 1];
    }
    return b;
}

Grid differences(const Grid& b) {
    Grid s = b;
    for (std::size_t t = 0; t < b.size(); ++t) {
        for (std::size_t n = 1; n < b[t].size(); ++n) s[t][n] = b[t][n] - b[t][n - 1];
    }
    return s;
}

/// Columns X_t(n), t = 0..t_max, from move graphs or group walks.
Grid bell_from_columns(int t_max, int n_max, const std::function<std::vector<BigInt>(int)>& column) {
    Grid b = zero_grid(t_max, n_max);
    for (int n = 0; n <= n_max; ++n) {
        const auto values = column(n);
        for (int t = 0; t <= t_max; ++t) cell(b, t, n) = values[static_cast<std::size_t>(t)];
    }
    return b;
}

std::vector<BigInt> empty_deck_column(int t_max) {
    std::vector<BigInt> out;
    for (int t = 0; t <= t_max; ++t) out.push_back(indicator(t == 0));
    return out;
}

Grid bell_grid(Kind kind, int t_max, int n_max, Method method,
               std::size_t max_group_order = kDefaultMaxGroupOrder) {
    switch (method) {
        case Method::enumeration: return cumulative(stirling_enumeration(kind, t_max, n_max));
        case Method::recurrence: return cumulative(stirling_recurrence(kind, t_max, n_max));
        case Method::closed_form: return cumulative(stirling_closed(kind, t_max, n_max));
        case Method::transfer_matrix: {
            const MoveVariant mv = kind == Kind::plain    ? MoveVariant::A
                                   : kind == Kind::primed ? MoveVariant::A_primed
                                   : kind == Kind::dagger ? MoveVariant::B
                                                          : MoveVariant::B_primed;
            return bell_from_columns(t_max, n_max, [&](int n) { return move_counts(n, t_max, mv); });
        }
        case Method::shuffle_dp: {
            const Family family = is_dagger(kind) ? Family::B : Family::A;
            return bell_from_columns(t_max, n_max, [&](int n) {
                if (n == 0) return empty_deck_column(t_max);
                return identity_sequence_counts({family, n, 1, is_primed(kind)}, t_max, max_group_order);
            });
        }
    }
    throw std::invalid_argument("bell_grid: unknown method");
}

Grid type_d_grid(bool primed, bool sequences, int t_max, int n_max,
                 std::size_t max_group_order = kDefaultMaxGroupOrder) {
    return bell_from_columns(t_max, n_max, [&](int n) {
        if (n == 0) return empty_deck_column(t_max);
        if (sequences) return identity_sequence_counts({Family::D, n, 1, primed}, t_max, max_group_order);
        return d_move_counts(n, t_max, primed);
    });
}

void require_method(Variant v, Method m) {
    const auto allowed = methods_for(v);
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
        throw std::invalid_argument("method " + to_string(m) + " does not apply to variant " + to_string(v));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Variant v) {
    switch (v) {
        case Variant::B: return "B";
        case Variant::Bprime: return "Bprime";
        case Variant::Bdagger: return "Bdagger";
        case Variant::Bdaggerprime: return "Bdaggerprime";
        case Variant::stir: return "stir";
        case Variant::stirprime: return "stirprime";
        case Variant::stirdagger: return "stirdagger";
        case Variant::stirdaggerprime: return "stirdaggerprime";
        case Variant::stirstar: return "stirstar";
        case Variant::stirdaggerstar: return "stirdaggerstar";
        case Variant::stirddagger: return "stirddagger";
        case Variant::stirddaggerprime: return "stirddaggerprime";
        case Variant::Mddagger: return "Mddagger";
        case Variant::Mddaggerprime: return "Mddaggerprime";
        case Variant::Sddagger: return "Sddagger";
        case Variant::Sddaggerprime: return "Sddaggerprime";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::enumeration: return "enumeration";
        case Method::recurrence: return "recurrence";
        case Method::closed_form: return "closed-form";
        case Method::transfer_matrix: return "transfer-matrix";
        case Method::shuffle_dp: return "shuffle-dp";
    }
    return "?";
}

Variant parse_variant(std::string_view text) {
    for (int i = 0; i <= static_cast<int>(Variant::Sddaggerprime); ++i) {
        if (to_string(static_cast<Variant>(i)) == text) return static_cast<Variant>(i);
    }
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
    for (int i = 0; i <= static_cast<int>(Method::shuffle_dp); ++i) {
        if (to_string(static_cast<Method>(i)) == text) return static_cast<Method>(i);
    }
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::vector<Method> methods_for(Variant v) {
    if (kind_of(v)) {
        return {Method::enumeration, Method::recurrence, Method::closed_form, Method::transfer_matrix,
                Method::shuffle_dp};
    }
    switch (v) {
        case Variant::stirstar:
        case Variant::stirdaggerstar: return {Method::enumeration, Method::recurrence, Method::closed_form};
        case Variant::stirddagger:
        case Variant::stirddaggerprime:
        case Variant::Mddagger:
        case Variant::Mddaggerprime: return {Method::transfer_matrix};
        case Variant::Sddagger:
        case Variant::Sddaggerprime: return {Method::shuffle_dp};
        default: return {};
    }
}

CountTable::CountTable(Variant variant, Method method, int t_max, int n_max)
    : variant_(variant), method_(method), t_max_(t_max), n_max_(n_max) {
    if (t_max < 0 || n_max < 0) throw std::invalid_argument("CountTable: negative bounds");
    values_ = zero_grid(t_max, n_max);
}

const BigInt& CountTable::at(int t, int n) const {
    if (t < 0 || t > t_max_ || n < 0 || n > n_max_) throw std::out_of_range("CountTable: cell out of range");
    return cell(values_, t, n);
}

BigInt& CountTable::at(int t, int n) {
    if (t < 0 || t > t_max_ || n < 0 || n > n_max_) throw std::out_of_range("CountTable: cell out of range");
    return cell(values_, t, n);
}

std::string CountTable::to_csv() const {
    std::string out = "t,n,value\n";
    for (int t = 0; t <= t_max_; ++t) {
        for (int n = 0; n <= n_max_; ++n) {
            out += std::to_string(t) + "," + std::to_string(n) + "," + bellmoves::to_string(at(t, n)) + "\n";
        }
    }
    return out;
}

nlohmann::json CountTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int t = 0; t <= t_max_; ++t) {
        nlohmann::json row = nlohmann::json::array();
        for (int n = 0; n <= n_max_; ++n) row.push_back(bellmoves::to_string(at(t, n)));
        rows.push_back(std::move(row));
    }
    return {{"variant", to_string(variant_)},
            {"method", to_string(method_)},
            {"t_max", t_max_},
            {"n_max", n_max_},
            {"values", std::move(rows)}};
}

CountTable table(Variant variant, int t_max, int n_max, Method method, std::size_t max_group_order) {
    require_method(variant, method);
    CountTable out(variant, method, t_max, n_max);
    Grid grid;
    if (auto kind = kind_of(variant)) {
        grid = bell_grid(*kind, t_max, n_max, method, max_group_order);
        if (!is_bell(variant)) grid = differences(grid);
    } else if (variant == Variant::stirstar || variant == Variant::stirdaggerstar) {
        const bool dagger = variant == Variant::stirdaggerstar;
        if (method == Method::enumeration) {
            grid = star_enumeration(dagger, t_max, n_max);
        } else {
            const Kind kind = dagger ? Kind::dagger_primed : Kind::primed;
            const Grid s = method == Method::recurrence ? stirling_recurrence(kind, t_max, n_max)
                                                        : stirling_closed(kind, t_max, n_max);
            grid = zero_grid(t_max, n_max);
            for (int t = 0; t <= t_max; ++t) {
                for (int n = 0; n <= n_max; ++n) {
                    cell(grid, t, n) = t == 0 ? indicator(n == 0) : cell(s, t, n) + cell(s, t - 1, n);
                }
            }
        }
    } else {
        const bool primed = variant == Variant::Mddaggerprime || variant == Variant::Sddaggerprime ||
                            variant == Variant::stirddaggerprime;
        const bool sequences = variant == Variant::Sddagger || variant == Variant::Sddaggerprime;
        grid = type_d_grid(primed, sequences, t_max, n_max, max_group_order);
        if (variant == Variant::stirddagger || variant == Variant::stirddaggerprime) grid = differences(grid);
    }
    for (int t = 0; t <= t_max; ++t) {
        for (int n = 0; n <= n_max; ++n) out.at(t, n) = cell(grid, t, n);
    }
    return out;
}

BigInt closed_form(Variant variant, int t, int n) {
    auto kind = kind_of(variant);
    if (!kind || is_bell(variant)) {
        throw std::invalid_argument("closed_form: no closed form for variant " + to_string(variant));
    }
    return closed_form_kind(*kind, t, n);
}

// ---------------------------------------------------------------------------
// Generating functions

namespace {

BigInt integral(const BigRational& x, const char* what) {
    if (denominator(x) != 1) throw std::logic_error(std::string(what) + ": non-integral coefficient");
    return numerator(x);
}

}  // namespace

std::vector<BigInt> egf_coefficients(Variant variant, int order) {
    if (order < 0 || order > 40) throw std::invalid_argument("egf_coefficients: order must be in 0..40");
    const auto N = static_cast<std::size_t>(order);
    const RatSeries one = RatSeries::constant(N, 1);
    const RatSeries x = RatSeries::variable(N);
    RatSeries f(N);
    switch (variant) {
        case Variant::B: f = RatSeries::exp_linear(N, 1) - one; break;
        case Variant::Bprime: f = RatSeries::exp_linear(N, 1) - one - x; break;
        case Variant::Bdagger: f = (RatSeries::exp_linear(N, 2) - one) * BigRational(1, 2); break;
        case Variant::Bdaggerprime:
            f = (RatSeries::exp_linear(N, 2) - one - x * BigRational(2)) * BigRational(1, 2);
            break;
        default: throw std::invalid_argument("egf_coefficients: no exponential generating function for " + to_string(variant));
    }
    const RatSeries g = series_exp(f);
    std::vector<BigInt> out;
    for (std::size_t t = 0; t <= N; ++t) {
        out.push_back(integral(g[t] * BigRational(factorial(static_cast<long>(t))), "egf"));
    }
    return out;
}

std::vector<BigInt> ogf_coefficients(Variant variant, int n, int order) {
    if (order < 0 || n < 0) throw std::invalid_argument("ogf_coefficients: negative argument");
    const auto N = static_cast<std::size_t>(order);
    const bool primed = variant == Variant::stirprime || variant == Variant::stirdaggerprime;
    if (primed && n < 2) throw std::invalid_argument("ogf_coefficients: the primed series need n >= 2");
    RatSeries den = RatSeries::constant(N, 1);
    const RatSeries x = RatSeries::variable(N);
    auto factor = [&](long a) { den = den * (RatSeries::constant(N, 1) - x * BigRational(a)); };
    switch (variant) {
        case Variant::stir:
            for (int j = 1; j <= n; ++j) factor(j);
            break;
        case Variant::stirprime:
            factor(-1);
            for (int j = 1; j <= n - 1; ++j) factor(j);
            break;
        case Variant::stirdagger:
            for (int j = 1; j <= n; ++j) factor(2 * j);
            break;
        case Variant::stirdaggerprime:
            factor(-1);
            for (int j = 1; j <= n; ++j) factor(2 * j - 1);
            break;
        default: throw std::invalid_argument("ogf_coefficients: no column generating function for " + to_string(variant));
    }
    const RatSeries g = series_div(RatSeries::constant(N, 1).shifted(static_cast<std::size_t>(n)), den);
    std::vector<BigInt> out;
    for (std::size_t t = 0; t <= N; ++t) out.push_back(integral(g[t], "ogf"));
    return out;
}

IdentityReport egf_check(Variant variant, int order) {
    IdentityReport report;
    report.name = "egf-" + to_string(variant);
    report.range = {0, order, 0, order};
    const auto kind = kind_of(variant);
    if (!kind || !is_bell(variant)) throw std::invalid_argument("egf_check: needs a Bell-type variant");
    const auto coeffs = egf_coefficients(variant, order);
    const Grid b = bell_grid(*kind, order, order, Method::recurrence);
    for (int t = 0; t <= order; ++t) {
        ++report.instances;
        if (coeffs[static_cast<std::size_t>(t)] != cell(b, t, t)) {
            report.failures.push_back({t, t, to_string(coeffs[static_cast<std::size_t>(t)]), to_string(cell(b, t, t))});
        }
    }
    return report;
}

IdentityReport ogf_check(Variant variant, int n, int order) {
    IdentityReport report;
    report.name = "ogf-" + to_string(variant);
    report.range = {0, order, n, n};
    const auto kind = kind_of(variant);
    if (!kind || is_bell(variant)) throw std::invalid_argument("ogf_check: needs a Stirling-type variant");
    const auto coeffs = ogf_coefficients(variant, n, order);
    const Grid s = stirling_recurrence(*kind, order, n);
    for (int t = 0; t <= order; ++t) {
        ++report.instances;
        if (coeffs[static_cast<std::size_t>(t)] != cell(s, t, n)) {
            report.failures.push_back({t, n, to_string(coeffs[static_cast<std::size_t>(t)]), to_string(cell(s, t, n))});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Identities

nlohmann::json IdentityReport::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) fails.push_back({{"t", f.t}, {"n", f.n}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return {{"name", name},
            {"range", {{"t", {range.t_min, range.t_max}}, {"n", {range.n_min, range.n_max}}}},
            {"instances", instances},
            {"failures", std::move(fails)}};
}

std::vector<std::string> identity_names() {
    return {"bernhart",        "spaced-star",     "inversion-a", "blocks-min-two", "dagger-sum",
            "dagger-star",     "inversion-b",     "closed-forms", "recurrences",   "stir-dagger-power",
            "egf",             "ogf",             "type-d-sum",  "dagger-ddagger", "alternating-sum"};
}

IdentityRange default_range(std::string_view name) {
    if (name == "bernhart" || name == "dagger-sum") return {1, 10, 1, 6};
    // At t = 1 the definition gives 1 at n = 0 and 0 at n = 1, the reverse of
    // the count ({1} is spaced but not cyclically spaced), so both star
    // identities start at t = 2.
    if (name == "spaced-star" || name == "dagger-star") return {2, 10, 0, 6};
    if (name == "inversion-a" || name == "inversion-b" || name == "blocks-min-two") return {0, 10, 0, 0};
    if (name == "egf" || name == "ogf") return {0, 12, 0, 6};
    if (name == "type-d-sum" || name == "type-d-sum-literal") return {1, 6, 2, 3};
    if (name == "dagger-ddagger") return {0, 6, 2, 4};
    return {0, 10, 0, 6};
}

IdentityReport verify_identity(std::string_view name, std::optional<IdentityRange> range_opt) {
    const IdentityRange r = range_opt.value_or(default_range(name));
    if (r.t_min < 0 || r.n_min < 0 || r.t_max < r.t_min || r.n_max < r.n_min) {
        throw std::invalid_argument("verify_identity: empty or negative range");
    }
    IdentityReport report;
    report.name = std::string(name);
    report.range = r;
    auto check = [&](int t, int n, const BigInt& lhs, const BigInt& rhs) {
        ++report.instances;
        if (lhs != rhs) report.failures.push_back({t, n, to_string(lhs), to_string(rhs)});
    };
    auto check_rat = [&](int t, int n, const BigRational& lhs, const BigRational& rhs) {
        ++report.instances;
        if (lhs != rhs) report.failures.push_back({t, n, to_string(lhs), to_string(rhs)});
    };
    auto merge = [&](const IdentityReport& sub) {
        report.instances += sub.instances;
        report.failures.insert(report.failures.end(), sub.failures.begin(), sub.failures.end());
    };

    if (name == "bernhart" || name == "dagger-sum") {
        const bool dagger = name == "dagger-sum";
        const Grid primed = bell_grid(dagger ? Kind::dagger_primed : Kind::primed, r.t_max, r.n_max, Method::recurrence);
        const Grid full = bell_grid(dagger ? Kind::dagger : Kind::plain, r.t_max, r.n_max, Method::recurrence);
        for (int t = std::max(1, r.t_min); t <= r.t_max; ++t) {
            for (int n = std::max(1, r.n_min); n <= r.n_max; ++n) {
                BigInt rhs = 0;
                if (dagger) {
                    for (int s = 0; s <= t - 1; ++s) rhs += binomial(t - 1, s) * cell(full, s, n - 1);
                } else {
                    rhs = cell(full, t - 1, n - 1);
                }
                check(t, n, cell(primed, t, n) + cell(primed, t - 1, n), rhs);
            }
        }
    } else if (name == "spaced-star" || name == "dagger-star") {
        const bool dagger = name == "dagger-star";
        const Grid s = stirling_recurrence(dagger ? Kind::dagger_primed : Kind::primed, r.t_max, r.n_max);
        const Grid star = star_enumeration(dagger, r.t_max, r.n_max);
        for (int t = std::max(1, r.t_min); t <= r.t_max; ++t) {
            for (int n = r.n_min; n <= r.n_max; ++n) check(t, n, cell(s, t, n) + cell(s, t - 1, n), cell(star, t, n));
        }
    } else if (name == "inversion-a" || name == "inversion-b") {
        const bool dagger = name == "inversion-b";
        const Grid full = bell_grid(dagger ? Kind::dagger : Kind::plain, r.t_max, r.t_max, Method::recurrence);
        const Grid primed =
            bell_grid(dagger ? Kind::dagger_primed : Kind::primed, r.t_max, r.t_max, Method::recurrence);
        for (int t = r.t_min; t <= r.t_max; ++t) {
            BigInt forward = 0;
            BigInt inverse = 0;
            for (int s = 0; s <= t; ++s) {
                forward += binomial(t, s) * cell(primed, s, s);
                const BigInt term = binomial(t, s) * cell(full, s, s);
                inverse += ((t - s) % 2 == 0) ? term : BigInt(-term);
            }
            check(t, t, forward, cell(full, t, t));
            check(t, t, inverse, cell(primed, t, t));
        }
    } else if (name == "blocks-min-two") {
        if (r.t_max > kEnumerationMaxT) throw ResourceError("blocks-min-two enumerates set partitions; t <= 12");
        const Grid primed = bell_grid(Kind::primed, r.t_max, r.t_max, Method::recurrence);
        for (int t = r.t_min; t <= r.t_max; ++t) {
            std::uint64_t count = 0;
            std::vector<int> sizes;
            visit_set_partitions(t, 0, t, SetPartitionConstraint::none, [&](std::span<const int> g, std::span<const char>) {
                sizes.assign(static_cast<std::size_t>(t), 0);
                for (int b : g) ++sizes[static_cast<std::size_t>(b)];
                for (int b : g) {
                    if (sizes[static_cast<std::size_t>(b)] < 2) return;
                }
                ++count;
            });
            check(t, t, cell(primed, t, t), BigInt(count));
        }
    } else if (name == "closed-forms") {
        for (Kind kind : {Kind::plain, Kind::primed, Kind::dagger, Kind::dagger_primed}) {
            const Grid s = stirling_recurrence(kind, r.t_max, r.n_max);
            for (int t = r.t_min; t <= r.t_max; ++t) {
                for (int n = std::max(r.n_min, is_primed(kind) ? 2 : 0); n <= r.n_max; ++n) {
                    check(t, n, closed_form_kind(kind, t, n), cell(s, t, n));
                }
            }
        }
    } else if (name == "recurrences") {
        if (r.t_max > kEnumerationMaxT) throw ResourceError("recurrences are checked against enumeration; t <= 12");
        for (Kind kind : {Kind::plain, Kind::primed, Kind::dagger, Kind::dagger_primed}) {
            const Grid rec = stirling_recurrence(kind, r.t_max, r.n_max);
            const Grid enumerated = stirling_enumeration(kind, r.t_max, r.n_max);
            for (int t = r.t_min; t <= r.t_max; ++t) {
                for (int n = r.n_min; n <= r.n_max; ++n) check(t, n, cell(rec, t, n), cell(enumerated, t, n));
            }
        }
    } else if (name == "stir-dagger-power") {
        if (r.t_max > kEnumerationMaxT) throw ResourceError("stir-dagger-power enumerates set partitions; t <= 12");
        const Grid dagger = stirling_recurrence(Kind::dagger, r.t_max, r.n_max);
        const Grid plain = stirling_enumeration(Kind::plain, r.t_max, r.n_max);
        for (int t = r.t_min; t <= r.t_max; ++t) {
            for (int n = r.n_min; n <= r.n_max; ++n) {
                check(t, n, cell(dagger, t, n) * pow_int(2, static_cast<unsigned long>(n)),
                      cell(plain, t, n) * pow_int(2, static_cast<unsigned long>(t)));
            }
        }
    } else if (name == "egf") {
        for (Variant v : {Variant::B, Variant::Bprime, Variant::Bdagger, Variant::Bdaggerprime}) {
            merge(egf_check(v, r.t_max));
        }
    } else if (name == "ogf") {
        for (Variant v : {Variant::stir, Variant::stirprime, Variant::stirdagger, Variant::stirdaggerprime}) {
            const bool primed = v == Variant::stirprime || v == Variant::stirdaggerprime;
            for (int n = std::max(r.n_min, primed ? 2 : 0); n <= r.n_max; ++n) merge(ogf_check(v, n, r.t_max));
        }
    } else if (name == "type-d-sum" || name == "type-d-sum-literal") {
        const bool literal = name == "type-d-sum-literal";
        const Grid plain = type_d_grid(false, false, r.t_max, r.n_max);
        const Grid primed = type_d_grid(true, false, r.t_max, r.n_max);
        for (int t = std::max(1, r.t_min); t <= r.t_max; ++t) {
            for (int n = std::max(1, r.n_min); n <= r.n_max; ++n) {
                BigInt rhs = 0;
                for (int s = 0; s <= t - 1; ++s) rhs += binomial(t - 1, s) * cell(plain, s, literal ? n : n - 1);
                check(t, n, cell(primed, t, n) + cell(primed, t - 1, n), rhs);
            }
        }
    } else if (name == "dagger-ddagger") {
        for (int n = std::max(1, r.n_min); n <= r.n_max; ++n) {
            const int t_top = std::min(r.t_max, n);
            if (t_top < r.t_min) continue;
            const auto b = identity_sequence_counts({Family::B, n, 1, false}, t_top);
            const auto d = identity_sequence_counts({Family::D, n, 1, false}, t_top);
            for (int t = r.t_min; t <= t_top; ++t) {
                const BigInt lhs = b[static_cast<std::size_t>(t)] + (t == n ? 1 : 0);
                check(t, n, lhs, d[static_cast<std::size_t>(t)]);
            }
        }
    } else if (name == "alternating-sum") {
        // Truncations of sum_{m>=j} (-1)^m C(m,j)/(2^m m!) = e^{-1/2} (-1)^j/(2^j j!):
        // t is the number of extra terms, n plays the role of j.
        for (int j = r.n_min; j <= r.n_max; ++j) {
            const BigRational scale(j % 2 == 0 ? BigInt(1) : BigInt(-1),
                                    pow_int(2, static_cast<unsigned long>(j)) * factorial(j));
            for (int extra = r.t_min; extra <= r.t_max; ++extra) {
                BigRational lhs = 0;
                BigRational exp_part = 0;
                for (int m = j; m <= j + extra; ++m) {
                    const BigRational term(binomial(m, j), pow_int(2, static_cast<unsigned long>(m)) * factorial(m));
                    lhs += (m % 2 == 0) ? term : BigRational(-term);
                }
                for (int i = 0; i <= extra; ++i) {
                    const BigRational term(1, pow_int(2, static_cast<unsigned long>(i)) * factorial(i));
                    exp_part += (i % 2 == 0) ? term : BigRational(-term);
                }
                check_rat(extra, j, lhs, scale * exp_part);
            }
        }
    } else {
        throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Dobinski-type sums

nlohmann::json DobinskiResult::to_json() const {
    return {{"variant", to_string(variant)},
            {"t", t},
            {"terms", terms},
            {"approximation", static_cast<double>(approximation.convert_to<double>())},
            {"bound", to_string(bound)},
            {"rounded", to_string(rounded)},
            {"exact", to_string(exact)},
            {"verdict", ok ? "pass" : "fail"}};
}

DobinskiResult dobinski(Variant variant, int t, int terms) {
    if (!is_bell(variant)) throw std::invalid_argument("dobinski: needs B, Bprime, Bdagger or Bdaggerprime");
    if (t < 0) throw std::invalid_argument("dobinski: negative t");
    if (terms < t + 10) throw std::invalid_argument("dobinski: need at least t + 10 terms");
    const bool dagger = variant == Variant::Bdagger || variant == Variant::Bdaggerprime;
    const bool primed = variant == Variant::Bprime || variant == Variant::Bdaggerprime;
    auto term = [&](int j) {
        const BigInt base = dagger ? BigInt(2 * j - (primed ? 1 : 0)) : BigInt(j - (primed ? 1 : 0));
        BigInt den = factorial(j);
        if (dagger) den *= pow_int(2, static_cast<unsigned long>(j));
        return BigRational(pow_int(base, static_cast<unsigned long>(t)), den);
    };

    BigRational partial = 0;
    for (int j = 0; j < terms; ++j) partial += term(j);

    // Past j = terms every term is positive and the ratio of consecutive terms
    // decreases in j, so a ratio <= 1/2 at the cut bounds the tail by 2 a_J.
    const BigRational first_tail = term(terms);
    const BigRational ratio = term(terms + 1) / first_tail;
    if (first_tail <= 0 || ratio > BigRational(1, 2)) {
        throw std::invalid_argument("dobinski: " + std::to_string(terms) + " terms do not reach the geometric tail");
    }
    const BigRational tail = first_tail * 2;

    // e^{-x} by its alternating series: consecutive partial sums bracket it
    // once the terms decrease.
    const BigRational x = dagger ? BigRational(1, 2) : BigRational(1);
    BigRational lo = 0, hi = 0, running = 0, power = 1;
    for (int m = 0; m <= 40; ++m) {
        const BigRational step = power / BigRational(factorial(m));
        running += (m % 2 == 0) ? step : BigRational(-step);
        if (m == 39) lo = running;
        if (m == 40) hi = running;
        power *= x;
    }
    if (lo > hi) std::swap(lo, hi);
    const BigRational mid = (lo + hi) / 2;

    DobinskiResult result{variant, t, terms, mid * partial, 0, 0, 0, false};
    const BigRational abs_partial = partial < 0 ? BigRational(-partial) : partial;
    result.bound = (hi - lo) / 2 * abs_partial + hi * tail;

    // Nearest integer to the approximation.
    const BigRational shifted = result.approximation + BigRational(1, 2);
    BigInt floor_value = numerator(shifted) / denominator(shifted);
    if (shifted < 0 && BigRational(floor_value) != shifted) floor_value -= 1;
    result.rounded = floor_value;

    const auto kind = *kind_of(variant);
    result.exact = cell(bell_grid(kind, t, t, Method::recurrence), t, t);
    const BigRational diff = result.approximation - BigRational(result.exact);
    const BigRational abs_diff = diff < 0 ? BigRational(-diff) : diff;
    result.ok = result.bound < BigRational(1, 2) && abs_diff <= result.bound && result.rounded == result.exact;
    return result;
}

// ---------------------------------------------------------------------------
// Lambert W and asymptotics

double lambert_w(double x) {
    if (!(x >= 0)) throw std::domain_error("lambert_w: needs x >= 0");
    if (x == 0) return 0;
    if (std::isinf(x)) return x;
    double w = x < 1 ? x / (1 + x) : std::log(x) - (x > std::exp(1.0) ? std::log(std::log(x)) : 0.0);
    if (w <= 0) w = 0.5;
    for (int i = 0; i < 100; ++i) {
        const double e = std::exp(w);
        const double f = w * e - x;
        const double fp = e * (w + 1);
        const double step = f / (fp - (w + 2) * f / (2 * (w + 1)));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1 + std::abs(w))) break;
    }
    return w;
}

std::string to_string(Asymptotic a) {
    switch (a) {
        case Asymptotic::stirprime3: return "stirprime3";
        case Asymptotic::stirdaggerprime2: return "stirdaggerprime2";
        case Asymptotic::bell_lambert: return "bell-lambert";
    }
    return "?";
}

Asymptotic parse_asymptotic(std::string_view text) {
    for (auto a : {Asymptotic::stirprime3, Asymptotic::stirdaggerprime2, Asymptotic::bell_lambert}) {
        if (to_string(a) == text) return a;
    }
    throw std::invalid_argument("unknown asymptotic '" + std::string(text) + "'");
}

bool AsymptoticReport::monotone() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
    }
    return !rows.empty();
}

nlohmann::json AsymptoticReport::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) out.push_back({{"t", row.t}, {"ratio", row.ratio}, {"deviation", row.deviation}});
    return {{"kind", to_string(kind)}, {"rows", std::move(out)}, {"monotone", monotone()}};
}

AsymptoticReport asymptotic_report(Asymptotic kind, const std::vector<int>& t_list) {
    AsymptoticReport report{kind, {}};
    int t_top = 0;
    for (int t : t_list) {
        if (t < 1) throw std::invalid_argument("asymptotic_report: t must be positive");
        t_top = std::max(t_top, t);
    }
    if (t_top > 400) throw ResourceError("asymptotic_report: t <= 400");
    for (int t : t_list) {
        // The deviation of the exact ratios is taken in exact arithmetic: it
        // falls below double epsilon long before t = 100.
        auto exact_row = [&](const BigRational& ratio) {
            const BigRational dev = ratio - 1;
            report.rows.push_back({t, ratio.convert_to<double>(), (dev < 0 ? BigRational(-dev) : dev).convert_to<double>()});
        };
        if (kind == Asymptotic::stirprime3) {
            const Grid s = stirling_recurrence(Kind::primed, t, 3);
            exact_row(BigRational(cell(s, t, 3) * 6, pow_int(2, static_cast<unsigned long>(t))));
        } else if (kind == Asymptotic::stirdaggerprime2) {
            const Grid s = stirling_recurrence(Kind::dagger_primed, t, 2);
            exact_row(BigRational(cell(s, t, 2) * 8, pow_int(3, static_cast<unsigned long>(t))));
        } else {
            const BigInt primed = cell(bell_grid(Kind::primed, t, t, Method::recurrence), t, t);
            const BigInt full = cell(bell_grid(Kind::plain, t, t, Method::recurrence), t, t);
            const double ratio = BigRational(primed * t, full).convert_to<double>() / lambert_w(static_cast<double>(t));
            report.rows.push_back({t, ratio, std::abs(ratio - 1)});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Q-colourings

BigInt q_colourings(int t, int n) {
    if (t < 1 || n < 1) throw std::invalid_argument("q_colourings: needs t, n >= 1");
    const int colours = 2 * n;
    double total = std::pow(static_cast<double>(colours), t);
    if (total > 5e7) throw ResourceError("q_colourings: (2n)^t exceeds the brute-force cap");
    std::set<std::vector<int>> classes;
    std::vector<int> word(static_cast<std::size_t>(t), 0);
    std::vector<int> canon(static_cast<std::size_t>(t));
    for (;;) {
        bool proper = true;
        for (int i = 1; i < t && proper; ++i) proper = word[static_cast<std::size_t>(i)] / 2 != word[static_cast<std::size_t>(i - 1)] / 2;
        if (proper) {
            // Pairs labelled by first appearance; within a pair, the colour
            // seen first is 0.
            std::vector<int> pair_label(static_cast<std::size_t>(n), -1);
            std::vector<int> first_colour(static_cast<std::size_t>(n), -1);
            int next = 0;
            for (int i = 0; i < t; ++i) {
                const int c = word[static_cast<std::size_t>(i)];
                const auto p = static_cast<std::size_t>(c / 2);
                if (pair_label[p] < 0) {
                    pair_label[p] = next++;
                    first_colour[p] = c % 2;
                }
                canon[static_cast<std::size_t>(i)] = 2 * pair_label[p] + (c % 2 == first_colour[p] ? 0 : 1);
            }
            classes.insert(canon);
        }
        int i = t - 1;
        while (i >= 0 && ++word[static_cast<std::size_t>(i)] == colours) word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return BigInt(static_cast<long>(classes.size()));
}

// ---------------------------------------------------------------------------
// OEIS prefixes

std::vector<OeisEntry> oeis_check() {
    auto ints = [](std::initializer_list<long long> xs) {
        std::vector<BigInt> out;
        for (long long x : xs) out.emplace_back(x);
        return out;
    };
    std::vector<OeisEntry> out;

    // A000296, offset 0: set partitions without singletons.
    {
        OeisEntry e{"A000296", "B'_t(t), t = 0..15",
                    ints({1, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722, 98253, 580317, 3633280, 24011157, 166888165}),
                    {}};
        const Grid b = bell_grid(Kind::primed, 15, 15, Method::recurrence);
        for (int t = 0; t <= 15; ++t) e.computed.push_back(cell(b, t, t));
        out.push_back(std::move(e));
    }
    // A075497, rows t = 1..5 of the triangle, columns n = 1..t.
    {
        OeisEntry e{"A075497", "stir-dagger(t,n), 1 <= n <= t <= 5",
                    ints({1, 2, 1, 4, 6, 1, 8, 28, 12, 1, 16, 120, 100, 20, 1}), {}};
        const Grid s = stirling_recurrence(Kind::dagger, 5, 5);
        for (int t = 1; t <= 5; ++t) {
            for (int n = 1; n <= t; ++n) e.computed.push_back(cell(s, t, n));
        }
        out.push_back(std::move(e));
    }
    // A000079, offset 0: powers of 2; stir-dagger(t,1) = 2^{t-1} for t >= 1.
    {
        OeisEntry e{"A000079", "stir-dagger(t,1), t = 1..12",
                    ints({1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048}), {}};
        const Grid s = stirling_recurrence(Kind::dagger, 12, 1);
        for (int t = 1; t <= 12; ++t) e.computed.push_back(cell(s, t, 1));
        out.push_back(std::move(e));
    }
    // A007582, offset 0: 2^{m-1}(2^m+1); term m equals B-dagger_{m+1}(2).
    {
        OeisEntry e{"A007582", "B-dagger_t(2) = stir-dagger(t,1) + stir-dagger(t,2), t = 1..12",
                    ints({1, 3, 10, 36, 136, 528, 2080, 8256, 32896, 131328, 524800, 2098176}), {}};
        const Grid b = bell_grid(Kind::dagger, 12, 2, Method::recurrence);
        for (int t = 1; t <= 12; ++t) e.computed.push_back(cell(b, t, 2));
        out.push_back(std::move(e));
    }
    // A233162, offset 1: term t is B-dagger_{t-1}(3).
    {
        OeisEntry e{"A233162", "B-dagger_{t-1}(3), t = 1..13",
                    ints({1, 1, 3, 11, 48, 236, 1248, 6896, 39168, 226496, 1325568, 7821056, 46399488}), {}};
        const Grid b = bell_grid(Kind::dagger, 12, 3, Method::recurrence);
        for (int t = 1; t <= 13; ++t) e.computed.push_back(cell(b, t - 1, 3));
        out.push_back(std::move(e));
    }
    // A243869, first term at t = 4: stir'(t,4).
    {
        OeisEntry e{"A243869", "stir'(t,4), t = 4..15",
                    ints({1, 5, 20, 70, 231, 735, 2290, 7040, 21461, 65065, 196560, 592410}), {}};
        const Grid s = stirling_recurrence(Kind::primed, 15, 4);
        for (int t = 4; t <= 15; ++t) e.computed.push_back(cell(s, t, 4));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace bellmoves
