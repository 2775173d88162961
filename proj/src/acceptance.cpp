#include "bellmoves/acceptance.hpp"

#include "bellmoves/moves.hpp"
#include "bellmoves/rsk.hpp"
#include "bellmoves/series.hpp"
#include "bellmoves/shuffles.hpp"
#include "bellmoves/spectra.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace bellmoves {

namespace {

/// Counts checked instances and remembers the first mismatch.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked_;
        if (!ok && first_failure_.empty()) first_failure_ = what();
        failures_ += ok ? 0 : 1;
    }
    bool pass() const { return failures_ == 0 && checked_ > 0; }
    std::string summary(const std::string& noun = "checks") const {
        std::string s = std::to_string(checked_) + " " + noun;
        if (failures_ > 0) s += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
        return s;
    }

private:
    long checked_ = 0;
    long failures_ = 0;
    std::string first_failure_;
};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string cell_label(const char* what, int t, int n) {
    return std::string(what) + " at t=" + std::to_string(t) + ", n=" + std::to_string(n);
}

void compare_columns(Tally& tally, const CountTable& a, const CountTable& b, const char* what) {
    for (int t = 0; t <= a.t_max(); ++t) {
        for (int n = 0; n <= a.n_max(); ++n) {
            tally.expect(a.at(t, n) == b.at(t, n), [&] {
                return cell_label(what, t, n) + ": " + to_string(a.at(t, n)) + " vs " + to_string(b.at(t, n));
            });
        }
    }
}

Outcome three_way(Variant plain, Variant primed, int t_max, int n_max) {
    Tally tally;
    for (Variant v : {plain, primed}) {
        const auto enumerated = table(v, t_max, n_max, Method::enumeration);
        const auto dp = table(v, t_max, n_max, Method::shuffle_dp);
        const auto transfer = table(v, t_max, n_max, Method::transfer_matrix);
        compare_columns(tally, enumerated, dp, "enumeration vs shuffle DP");
        compare_columns(tally, enumerated, transfer, "enumeration vs moves");
    }
    return {tally.pass(), tally.summary("cell comparisons")};
}

Outcome criterion_type_a() { return three_way(Variant::B, Variant::Bprime, 7, 5); }
Outcome criterion_type_b() { return three_way(Variant::Bdagger, Variant::Bdaggerprime, 6, 3); }

Outcome criterion_type_d() {
    Tally tally;
    for (bool primed : {false, true}) {
        for (int n : {2, 3}) {
            const auto s = identity_sequence_counts({Family::D, n, 1, primed}, 6);
            const auto m = d_move_counts(n, 6, primed);
            for (int t = 0; t <= 6; ++t) {
                tally.expect(s[static_cast<std::size_t>(t)] == m[static_cast<std::size_t>(t)],
                             [&] { return cell_label(primed ? "S'/M' D" : "S/M D", t, n); });
            }
        }
    }
    // The stated failure at one card.
    const auto s1 = identity_sequence_counts({Family::D, 1, 1, false}, 10);
    const auto m1 = d_move_counts(1, 10, false);
    for (int t = 0; t <= 10; ++t) {
        tally.expect(s1[static_cast<std::size_t>(t)] == 1, [&] { return cell_label("S(1) != 1", t, 1); });
        tally.expect(m1[static_cast<std::size_t>(t)] == pow_int(2, static_cast<unsigned long>(t)),
                     [&] { return cell_label("M(1) != 2^t", t, 1); });
    }
    return {tally.pass(), tally.summary()};
}

Outcome criterion_bijection() {
    Tally tally;
    for (Family family : {Family::A, Family::B}) {
        for (int t = 0; t <= 6; ++t) {
            for (int n = 1; n <= 4; ++n) {
                const auto partitions = family == Family::A
                                            ? enumerate_set_partitions(t, n, SetPartitionConstraint::none)
                                            : enumerate_marked_set_partitions(t, n, MarkedConstraint::none);
                for (const auto& p : partitions) {
                    const auto seq = partition_to_sequence(p, family, n);
                    tally.expect(seq.product().is_identity() && sequence_to_partition(seq) == p, [&] {
                        return to_string(family) + " round trip of " + p.to_string() + " with n=" + std::to_string(n);
                    });
                }
                const BigInt sequences = count_identity_sequences({family, n, 1, false}, t);
                tally.expect(sequences == BigInt(static_cast<long>(partitions.size())),
                             [&] { return cell_label("partition count vs sequence count", t, n); });
            }
        }
    }
    return {tally.pass(), tally.summary("round trips and counts")};
}

Outcome criterion_spectra() {
    Tally tally;
    std::vector<ChainSpec> chains;
    auto add = [&](Family f, int n, int k) {
        if (k < 1 || k > n) return;
        for (const auto& c : chains) {
            if (c.family == f && c.n == n && c.k == k) return;
        }
        chains.push_back({f, n, k, false});
        ChainSpec without{f, n, k, true};
        if (chain_degree(ChainSpec{f, n, k, false}) >= 2) chains.push_back(without);
    };
    for (int n = 1; n <= 5; ++n) {
        for (int k : {1, 2, n}) add(Family::A, n, k);
    }
    for (int n = 1; n <= 3; ++n) {
        for (int k : {1, n}) add(Family::B, n, k);
    }
    for (int n = 2; n <= 4; ++n) {
        for (int k : {1, n}) add(Family::D, n, k);
    }
    for (const auto& c : chains) {
        const auto report = verify_spectrum(c);
        tally.expect(report.pass, [&] { return c.to_string(); });
    }
    return {tally.pass(), tally.summary("chains")};
}

Outcome criterion_characters() {
    Tally tally;
    auto compare = [&](Family family, int n, bool primed, const std::vector<BigInt>& moves) {
        const auto chars = character_moments(family, n, primed ? 1 : 0, 8);
        for (int t = 0; t <= 8; ++t) {
            tally.expect(chars[static_cast<std::size_t>(t)] == moves[static_cast<std::size_t>(t)], [&] {
                return to_string(family) + (primed ? " primed " : " ") + cell_label("character sum", t, n);
            });
        }
    };
    for (bool primed : {false, true}) {
        for (int n = 0; n <= 6; ++n) compare(Family::A, n, primed, move_counts(n, 8, primed ? MoveVariant::A_primed : MoveVariant::A));
        for (int n = 0; n <= 4; ++n) compare(Family::B, n, primed, move_counts(n, 8, primed ? MoveVariant::B_primed : MoveVariant::B));
        for (int n = 1; n <= 4; ++n) compare(Family::D, n, primed, d_move_counts(n, 8, primed));
    }
    return {tally.pass(), tally.summary()};
}

Outcome criterion_identities() {
    Tally tally;
    for (const auto& name : identity_names()) {
        IdentityRange range = default_range(name);
        if (name == "egf" || name == "ogf") range.t_max = 12;
        const auto report = verify_identity(name, range);
        tally.expect(report.pass(), [&] { return name; });
    }
    // The tables themselves, by every method, to t = 12. Marked enumeration
    // stops at t = 10 and the B_6 group exceeds the default order cap.
    for (Variant v : {Variant::B, Variant::Bprime, Variant::Bdagger, Variant::Bdaggerprime}) {
        const bool dagger = v == Variant::Bdagger || v == Variant::Bdaggerprime;
        for (Method m : {Method::enumeration, Method::closed_form, Method::transfer_matrix, Method::shuffle_dp}) {
            const int t_max = dagger && m == Method::enumeration ? 10 : 12;
            const int n_max = dagger && m == Method::shuffle_dp ? 5 : 6;
            tally.expect(table(v, t_max, n_max, m) == table(v, t_max, n_max, Method::recurrence),
                         [&] { return to_string(v) + " by " + to_string(m); });
        }
    }
    return {tally.pass(), tally.summary("identities and table agreements")};
}

Outcome criterion_dobinski() {
    Tally tally;
    for (Variant v : {Variant::B, Variant::Bprime, Variant::Bdagger, Variant::Bdaggerprime}) {
        for (int t = 0; t <= 12; ++t) {
            const auto r = dobinski(v, t, 60);
            tally.expect(r.ok, [&] { return to_string(v) + " at t=" + std::to_string(t); });
        }
    }
    return {tally.pass(), tally.summary("sums")};
}

Outcome criterion_rsk() {
    Tally tally;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_group(Family::A, n)) {
            const Permutation tau = g.underlying();
            for (int m = 1; m <= n; ++m) {
                tally.expect(verify_move_step(tau, m), [&] { return tau.to_string() + " with m=" + std::to_string(m); });
            }
        }
    }
    const auto traj = parse_trajectory("(5),(4,1),(3,2),(4,1),(3,2),(2,2,1),(3,2),(4,1),(5)");
    const auto search = search_trajectory(5, traj);
    tally.expect(search.sequences.empty(), [] { return std::string("trajectory search found sequences"); });
    tally.expect(search.move_paths >= 1, [] { return std::string("no move path along the trajectory"); });
    for (int t = 0; t <= 7; ++t) {
        tally.expect(rsk_bijection_check(5, t).agrees(), [&] { return "n=5 disagrees at t=" + std::to_string(t); });
    }
    tally.expect(!rsk_bijection_check(5, 8).agrees(), [] { return std::string("n=5, t=8 agrees"); });
    return {tally.pass(), tally.summary()};
}

Outcome criterion_fulman() {
    Tally tally;
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t <= 6; ++t) {
            tally.expect(fulman_vs_rsk(n, t).equal(), [&] { return cell_label("distributions differ", t, n); });
        }
    }
    return {tally.pass(), tally.summary("distribution pairs")};
}

Outcome criterion_colourings_oeis() {
    Tally tally;
    const auto dagger = table(Variant::Bdagger, 5, 3, Method::recurrence);
    for (int t = 1; t <= 6; ++t) {
        for (int n = 1; n <= 4; ++n) {
            tally.expect(q_colourings(t, n) == dagger.at(t - 1, n - 1), [&] { return cell_label("Q-colourings", t, n); });
        }
    }
    for (const auto& e : oeis_check()) {
        tally.expect(e.match() && e.expected.size() >= 10, [&] { return e.id; });
    }
    return {tally.pass(), tally.summary()};
}

Outcome criterion_asymptotic() {
    Tally tally;
    const std::pair<Asymptotic, std::vector<int>> runs[] = {{Asymptotic::stirprime3, {10, 20, 30}},
                                                            {Asymptotic::stirdaggerprime2, {10, 20, 30}},
                                                            {Asymptotic::bell_lambert, {20, 40, 60}}};
    for (const auto& [kind, ts] : runs) {
        const auto report = asymptotic_report(kind, ts);
        tally.expect(report.monotone(), [&] { return to_string(kind); });
    }
    return {tally.pass(), tally.summary("trends")};
}

struct Criterion {
    const char* title;
    double budget;
    Outcome (*run)();
};

// Budgets not stated for a criterion are set at 120 s.
const Criterion kCriteria[] = {
    {"Type A: B = S = M and primed, t <= 7, n <= 5", 30, criterion_type_a},
    {"Type B: B-dagger = S-dagger = M-dagger and primed, t <= 6, n <= 3", 60, criterion_type_b},
    {"Type D: S = M for n = 2, 3 and the n = 1 exception", 120, criterion_type_d},
    {"Partition/shuffle bijection round trip, types A and B", 120, criterion_bijection},
    {"k-shuffle spectra certified by exact moments", 300, criterion_spectra},
    {"Move counts equal character sums", 120, criterion_characters},
    {"Bell/Stirling identity suite", 120, criterion_identities},
    {"Dobinski rounding with rigorous tail bound", 120, criterion_dobinski},
    {"RSK move step, trajectory search, bijection window", 120, criterion_rsk},
    {"Fulman chain vs RSK shape distribution", 120, criterion_fulman},
    {"Q-colourings and OEIS prefixes", 120, criterion_colourings_oeis},
    {"Asymptotic ratios approach 1 monotonically", 120, criterion_asymptotic},
};

}  // namespace

std::string CriterionResult::line() const {
    char time[32];
    std::snprintf(time, sizeof time, "%.2f", seconds);
    return std::string(pass ? "[PASS] " : "[FAIL] ") + std::to_string(id) + " " + title + " (" + time + " s): " + detail;
}

nlohmann::json CriterionResult::to_json() const {
    return {{"id", id},
            {"title", title},
            {"verdict", pass ? "pass" : "fail"},
            {"detail", detail},
            {"budget_seconds", budget_seconds}};
}

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

std::string criterion_title(int id) {
    if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
    return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id) {
    if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
    const Criterion& c = kCriteria[id - 1];
    CriterionResult result;
    result.id = id;
    result.title = c.title;
    result.budget_seconds = c.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome outcome = c.run();
        result.pass = outcome.pass;
        result.detail = outcome.detail;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("error: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > c.budget) {
        result.pass = false;
        result.detail += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    return result;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned threads) {
    std::vector<CriterionResult> results(ids.size());
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < ids.size();) results[i] = run_criterion(ids[i]);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
    }
    return results;
}

unsigned default_threads() {
    if (const char* env = std::getenv("BELLMOVES_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace bellmoves
