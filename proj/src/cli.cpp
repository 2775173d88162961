#include "bellmoves/cli.hpp"

#include "bellmoves/acceptance.hpp"
#include "bellmoves/rsk.hpp"
#include "bellmoves/series.hpp"
#include "bellmoves/spectra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

namespace bellmoves::cli {

namespace {

enum class Format { human, json, csv };

struct Options {
    std::size_t max_group_order = kDefaultMaxGroupOrder;
    bool json = false;
    bool csv = false;

    // count / table
    std::string variant;
    std::string method;
    int t = -1;
    int n = -1;
    int t_max = -1;
    int n_max = -1;

    // verify
    std::vector<std::string> identities;
    bool all = false;
    bool list = false;
    std::optional<int> range_t_min, range_t_max, range_n_min, range_n_max;

    // spectrum
    std::string family;
    int k = 1;
    bool no_identity = false;

    // rsk
    std::string trajectory;

    // series
    int order = 12;
    int terms = 60;
    std::string kind;
    std::vector<int> t_list;

    // suite
    std::vector<int> criteria;

    Format format() const { return json ? Format::json : csv ? Format::csv : Format::human; }
};

Method default_method(Variant v) {
    const auto methods = methods_for(v);
    if (std::find(methods.begin(), methods.end(), Method::recurrence) != methods.end()) return Method::recurrence;
    return methods.front();
}

Method resolve_method(const Options& o, Variant v) { return o.method.empty() ? default_method(v) : parse_method(o.method); }

int cmd_count(const Options& o, std::ostream& out, std::ostream&) {
    const Variant v = parse_variant(o.variant);
    const Method m = resolve_method(o, v);
    const auto tb = table(v, o.t, o.n, m, o.max_group_order);
    const BigInt& value = tb.at(o.t, o.n);
    if (o.json) {
        out << nlohmann::json{{"variant", to_string(v)},
                              {"method", to_string(m)},
                              {"t", o.t},
                              {"n", o.n},
                              {"value", to_string(value)}}
                   .dump(2)
            << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream&) {
    const Variant v = parse_variant(o.variant);
    const Method m = resolve_method(o, v);
    const auto tb = table(v, o.t_max, o.n_max, m, o.max_group_order);
    switch (o.format()) {
        case Format::json: out << tb.to_json().dump(2) << '\n'; break;
        case Format::csv: out << tb.to_csv(); break;
        case Format::human: {
            std::vector<std::vector<std::string>> cells;
            std::size_t width = 3;
            for (int t = 0; t <= tb.t_max(); ++t) {
                auto& row = cells.emplace_back();
                for (int n = 0; n <= tb.n_max(); ++n) {
                    row.push_back(to_string(tb.at(t, n)));
                    width = std::max(width, row.back().size());
                }
            }
            out << to_string(v) << " by " << to_string(m) << " (rows t, columns n)\n";
            out << std::setw(4) << "t\\n";
            for (int n = 0; n <= tb.n_max(); ++n) out << ' ' << std::setw(static_cast<int>(width)) << n;
            out << '\n';
            for (int t = 0; t <= tb.t_max(); ++t) {
                out << std::setw(4) << t;
                for (const auto& c : cells[static_cast<std::size_t>(t)]) out << ' ' << std::setw(static_cast<int>(width)) << c;
                out << '\n';
            }
        }
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.list) {
        for (const auto& name : identity_names()) out << name << '\n';
        out << "type-d-sum-literal\n";
        return kExitOk;
    }
    std::vector<std::string> names = o.all ? identity_names() : o.identities;
    if (names.empty()) {
        err << "verify: give --identity NAME, --all or --list\n";
        return kExitUsage;
    }
    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& name : names) {
        IdentityRange range = default_range(name);
        if (o.range_t_min) range.t_min = *o.range_t_min;
        if (o.range_t_max) range.t_max = *o.range_t_max;
        if (o.range_n_min) range.n_min = *o.range_n_min;
        if (o.range_n_max) range.n_max = *o.range_n_max;
        const auto report = verify_identity(name, range);
        all_pass = all_pass && report.pass();
        if (o.json) {
            auto j = report.to_json();
            j["verdict"] = report.pass() ? "pass" : "fail";
            reports.push_back(std::move(j));
            continue;
        }
        out << name << ": " << report.instances << " instances, " << (report.pass() ? "pass" : "FAIL") << '\n';
        for (std::size_t i = 0; i < std::min<std::size_t>(report.failures.size(), 5); ++i) {
            const auto& f = report.failures[i];
            out << "  t=" << f.t << " n=" << f.n << ": " << f.lhs << " != " << f.rhs << '\n';
        }
        if (report.failures.size() > 5) out << "  ... " << report.failures.size() - 5 << " more\n";
    }
    if (o.json) out << reports.dump(2) << '\n';
    return all_pass ? kExitOk : kExitFailed;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream&) {
    ChainSpec chain{parse_family(o.family), o.n, o.k, o.no_identity};
    chain.validate();
    const auto report = verify_spectrum(chain, o.max_group_order);
    if (o.json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << "chain " << chain.to_string() << '\n';
        out << "eigenvalue multiplicity\n";
        for (const auto& [value, mult] : report.predicted) out << std::setw(10) << to_string(value) << ' ' << mult << '\n';
        out << "moments checked " << report.moments_checked << '\n';
        out << (report.pass ? "pass" : "FAIL") << '\n';
    }
    return report.pass ? kExitOk : kExitFailed;
}

int cmd_rsk_search(const Options& o, std::ostream& out, std::ostream&) {
    const auto traj = parse_trajectory(o.trajectory);
    const auto result = search_trajectory(o.n, traj);
    if (o.json) {
        nlohmann::json seqs = nlohmann::json::array();
        for (const auto& s : result.sequences) seqs.push_back(s.to_json());
        out << nlohmann::json{{"trajectory", to_string(traj)},
                              {"sequences", std::move(seqs)},
                              {"move_paths", to_string(result.move_paths)},
                              {"tree", result.tree}}
                   .dump(2)
            << '\n';
    } else {
        out << result.sequences.size() << " sequences\n";
        for (const auto& s : result.sequences) {
            const auto names = s.names();
            for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "  ") << names[i];
            out << '\n';
        }
        out << to_string(result.move_paths) << " move paths\n";
    }
    return kExitOk;
}

int cmd_rsk_check(const Options& o, std::ostream& out, std::ostream&) {
    const auto check = rsk_bijection_check(o.n, o.t);
    if (o.json) {
        out << check.to_json().dump(2) << '\n';
    } else {
        out << "n=" << o.n << " t=" << o.t << ": " << to_string(check.sequence_total) << " sequences, "
            << to_string(check.move_total) << " move paths, " << check.counts.size() << " trajectories\n";
        if (check.first_disagreement) {
            const auto& c = check.counts.at(*check.first_disagreement);
            out << "disagree at " << to_string(*check.first_disagreement) << ": " << to_string(c.first)
                << " sequences vs " << to_string(c.second) << " move paths\n";
        } else {
            out << "agree\n";
        }
    }
    return check.agrees() ? kExitOk : kExitFailed;
}

int cmd_rsk_fulman(const Options& o, std::ostream& out, std::ostream&) {
    const auto cmp = fulman_vs_rsk(o.n, o.t);
    if (o.json) {
        out << cmp.to_json().dump(2) << '\n';
    } else {
        out << "shape chain shuffles\n";
        std::set<Partition> shapes;
        for (const auto& [p, _] : cmp.chain) shapes.insert(p);
        for (const auto& [p, _] : cmp.shuffles) shapes.insert(p);
        for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
            auto get = [&](const std::map<Partition, BigRational>& m) {
                auto f = m.find(*it);
                return f == m.end() ? std::string("0") : to_string(f->second);
            };
            out << it->to_string() << ' ' << get(cmp.chain) << ' ' << get(cmp.shuffles) << '\n';
        }
        out << (cmp.equal() ? "equal" : "DIFFER") << '\n';
    }
    return cmp.equal() ? kExitOk : kExitFailed;
}

int emit_report(const Options& o, const IdentityReport& report, std::ostream& out) {
    if (o.json) {
        auto j = report.to_json();
        j["verdict"] = report.pass() ? "pass" : "fail";
        out << j.dump(2) << '\n';
    } else {
        out << report.name << ": " << report.instances << " coefficients, " << (report.pass() ? "pass" : "FAIL") << '\n';
        for (const auto& f : report.failures) out << "  t=" << f.t << ": " << f.lhs << " != " << f.rhs << '\n';
    }
    return report.pass() ? kExitOk : kExitFailed;
}

int cmd_series_egf(const Options& o, std::ostream& out, std::ostream&) {
    return emit_report(o, egf_check(parse_variant(o.variant), o.order), out);
}

int cmd_series_ogf(const Options& o, std::ostream& out, std::ostream&) {
    return emit_report(o, ogf_check(parse_variant(o.variant), o.n, o.order), out);
}

int cmd_series_dobinski(const Options& o, std::ostream& out, std::ostream&) {
    const auto r = dobinski(parse_variant(o.variant), o.t, o.terms);
    if (o.json) {
        out << r.to_json().dump(2) << '\n';
    } else {
        out << to_string(r.variant) << " t=" << r.t << " terms=" << r.terms << ": rounded " << to_string(r.rounded)
            << ", exact " << to_string(r.exact) << ", error bound " << std::setprecision(3)
            << r.bound.convert_to<double>() << '\n'
            << (r.ok ? "pass" : "FAIL") << '\n';
    }
    return r.ok ? kExitOk : kExitFailed;
}

int cmd_series_asymptotic(const Options& o, std::ostream& out, std::ostream&) {
    const auto report = asymptotic_report(parse_asymptotic(o.kind), o.t_list);
    if (o.json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << to_string(report.kind) << "\n   t ratio deviation\n";
        for (const auto& row : report.rows) {
            out << std::setw(4) << row.t << ' ' << std::setprecision(12) << row.ratio << ' ' << std::setprecision(3)
                << row.deviation << '\n';
        }
        out << (report.monotone() ? "monotone" : "not monotone") << '\n';
    }
    return report.monotone() ? kExitOk : kExitFailed;
}

int cmd_series_oeis(const Options& o, std::ostream& out, std::ostream&) {
    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : oeis_check()) {
        all = all && e.match();
        if (o.json) {
            nlohmann::json expected = nlohmann::json::array();
            for (const auto& x : e.expected) expected.push_back(to_string(x));
            rows.push_back({{"id", e.id},
                            {"description", e.description},
                            {"terms", e.expected.size()},
                            {"expected", std::move(expected)},
                            {"verdict", e.match() ? "pass" : "fail"}});
        } else {
            out << e.id << ' ' << (e.match() ? "pass" : "FAIL") << " (" << e.expected.size() << " terms) "
                << e.description << '\n';
        }
    }
    if (o.json) out << rows.dump(2) << '\n';
    return all ? kExitOk : kExitFailed;
}

int cmd_series_colourings(const Options& o, std::ostream& out, std::ostream&) {
    const BigInt q = q_colourings(o.t, o.n);
    const BigInt b = table(Variant::Bdagger, o.t - 1, o.n - 1, Method::recurrence).at(o.t - 1, o.n - 1);
    if (o.json) {
        out << nlohmann::json{{"t", o.t},
                              {"n", o.n},
                              {"colourings", to_string(q)},
                              {"Bdagger", to_string(b)},
                              {"verdict", q == b ? "pass" : "fail"}}
                   .dump(2)
            << '\n';
    } else {
        out << to_string(q) << " colourings, B-dagger_" << o.t - 1 << '(' << o.n - 1 << ") = " << to_string(b) << '\n'
            << (q == b ? "pass" : "FAIL") << '\n';
    }
    return q == b ? kExitOk : kExitFailed;
}

int cmd_suite(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<int> ids = o.criteria;
    if (o.all) {
        ids.resize(static_cast<std::size_t>(criterion_count()));
        std::iota(ids.begin(), ids.end(), 1);
    }
    if (ids.empty()) {
        err << "suite: give --all or --criterion N\n";
        return kExitUsage;
    }
    for (int id : ids) {
        if (id < 1 || id > criterion_count()) {
            err << "suite: no criterion " << id << " (1.." << criterion_count() << ")\n";
            return kExitUsage;
        }
    }
    const auto results = run_criteria(ids, default_threads());
    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        if (o.json) rows.push_back(r.to_json());
        else out << r.line() << '\n';
    }
    if (o.json) out << rows.dump(2) << '\n';
    return all ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts and identity checks for Bell numbers, shuffles and partition moves", "bellmoves"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-group-order", o.max_group_order, "Largest group to tabulate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto formats = [&](CLI::App* sub, bool csv) {
        auto* json = sub->add_flag("--json", o.json, "JSON output");
        if (csv) sub->add_flag("--csv", o.csv, "CSV output")->excludes(json);
    };
    const std::vector<std::string> variant_names = [] {
        std::vector<std::string> v;
        for (int i = 0; i <= static_cast<int>(Variant::Sddaggerprime); ++i) v.push_back(to_string(static_cast<Variant>(i)));
        return v;
    }();
    const std::vector<std::string> method_names = {"enumeration", "recurrence", "closed-form", "transfer-matrix",
                                                   "shuffle-dp"};

    std::function<int()> action;

    auto* count = app.add_subcommand("count", "One value X_t(n)");
    count->add_option("--variant", o.variant)->required()->check(CLI::IsMember(variant_names));
    count->add_option("--t", o.t)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--method", o.method)->check(CLI::IsMember(method_names));
    formats(count, false);
    count->callback([&] { action = [&] { return cmd_count(o, out, err); }; });

    auto* tbl = app.add_subcommand("table", "Grid of X_t(n), 0 <= t <= t-max, 0 <= n <= n-max");
    tbl->add_option("--variant", o.variant)->required()->check(CLI::IsMember(variant_names));
    tbl->add_option("--t-max", o.t_max)->required()->check(CLI::NonNegativeNumber);
    tbl->add_option("--n-max", o.n_max)->required()->check(CLI::NonNegativeNumber);
    tbl->add_option("--method", o.method)->check(CLI::IsMember(method_names));
    formats(tbl, true);
    tbl->callback([&] { action = [&] { return cmd_table(o, out, err); }; });

    auto* verify = app.add_subcommand("verify", "Check identities over a range");
    auto* id_opt = verify->add_option("--identity", o.identities, "Identity name (repeatable)");
    verify->add_flag("--all", o.all, "Every identity in the suite")->excludes(id_opt);
    verify->add_flag("--list", o.list, "List identity names");
    verify->add_option("--t-min", o.range_t_min)->check(CLI::NonNegativeNumber);
    verify->add_option("--t-max", o.range_t_max)->check(CLI::NonNegativeNumber);
    verify->add_option("--n-min", o.range_n_min)->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", o.range_n_max)->check(CLI::NonNegativeNumber);
    formats(verify, false);
    verify->callback([&] { action = [&] { return cmd_verify(o, out, err); }; });

    auto* spectrum = app.add_subcommand("spectrum", "Certify the eigenvalues of a k-shuffle chain");
    spectrum->add_option("--family", o.family)->required()->check(CLI::IsMember({"A", "B", "D"}));
    spectrum->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--k", o.k)->capture_default_str()->check(CLI::PositiveNumber);
    spectrum->add_flag("--no-identity", o.no_identity, "Drop the identity generator");
    formats(spectrum, false);
    spectrum->callback([&] { action = [&] { return cmd_spectrum(o, out, err); }; });

    auto* rsk = app.add_subcommand("rsk", "RSK shapes of random-to-top products");
    rsk->require_subcommand(1);
    auto* search = rsk->add_subcommand("search", "Shuffle sequences along a shape trajectory");
    search->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    search->add_option("--trajectory", o.trajectory, "\"(5),(4,1),...\"")->required();
    formats(search, false);
    search->callback([&] { action = [&] { return cmd_rsk_search(o, out, err); }; });
    auto* check = rsk->add_subcommand("check", "Sequences vs move paths, trajectory by trajectory");
    check->add_option("--n", o.n)->required()->check(CLI::Range(1, 6));
    check->add_option("--t", o.t)->required()->check(CLI::Range(0, 8));
    formats(check, false);
    check->callback([&] { action = [&] { return cmd_rsk_check(o, out, err); }; });
    auto* fulman = rsk->add_subcommand("fulman", "Shape chain vs RSK shape distribution");
    fulman->add_option("--n", o.n)->required()->check(CLI::Range(1, 6));
    fulman->add_option("--t", o.t)->required()->check(CLI::Range(0, 8));
    formats(fulman, false);
    fulman->callback([&] { action = [&] { return cmd_rsk_fulman(o, out, err); }; });

    auto* series = app.add_subcommand("series", "Generating functions, Dobinski sums, asymptotics, OEIS");
    series->require_subcommand(1);
    const std::vector<std::string> bell_names = {"B", "Bprime", "Bdagger", "Bdaggerprime"};
    const std::vector<std::string> stir_names = {"stir", "stirprime", "stirdagger", "stirdaggerprime"};
    auto* egf = series->add_subcommand("egf", "Exponential generating function vs X_t(t)");
    egf->add_option("--variant", o.variant)->required()->check(CLI::IsMember(bell_names));
    egf->add_option("--order", o.order)->capture_default_str()->check(CLI::Range(0, 40));
    formats(egf, false);
    egf->callback([&] { action = [&] { return cmd_series_egf(o, out, err); }; });
    auto* ogf = series->add_subcommand("ogf", "Column generating function vs the Stirling column");
    ogf->add_option("--variant", o.variant)->required()->check(CLI::IsMember(stir_names));
    ogf->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    ogf->add_option("--order", o.order)->capture_default_str()->check(CLI::Range(0, 60));
    formats(ogf, false);
    ogf->callback([&] { action = [&] { return cmd_series_ogf(o, out, err); }; });
    auto* dob = series->add_subcommand("dobinski", "Rounded Dobinski-type sum vs X_t(t)");
    dob->add_option("--variant", o.variant)->required()->check(CLI::IsMember(bell_names));
    dob->add_option("--t", o.t)->required()->check(CLI::Range(0, 200));
    dob->add_option("--terms", o.terms)->capture_default_str()->check(CLI::Range(1, 2000));
    formats(dob, false);
    dob->callback([&] { action = [&] { return cmd_series_dobinski(o, out, err); }; });
    auto* asym = series->add_subcommand("asymptotic", "Exact ratios against their leading terms");
    asym->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"stirprime3", "stirdaggerprime2", "bell-lambert"}));
    asym->add_option("--t", o.t_list, "Sample points")->required()->check(CLI::Range(1, 400));
    formats(asym, false);
    asym->callback([&] { action = [&] { return cmd_series_asymptotic(o, out, err); }; });
    auto* oeis = series->add_subcommand("oeis", "Embedded OEIS prefixes vs computed values");
    formats(oeis, false);
    oeis->callback([&] { action = [&] { return cmd_series_oeis(o, out, err); }; });
    auto* qcol = series->add_subcommand("colourings", "Brute-force pair colourings vs B-dagger");
    qcol->add_option("--t", o.t)->required()->check(CLI::Range(1, 12));
    qcol->add_option("--n", o.n)->required()->check(CLI::Range(1, 8));
    formats(qcol, false);
    qcol->callback([&] { action = [&] { return cmd_series_colourings(o, out, err); }; });

    auto* suite = app.add_subcommand("suite", "Run acceptance criteria");
    auto* all_flag = suite->add_flag("--all", o.all, "All criteria");
    suite->add_option("--criterion", o.criteria, "Criterion number (repeatable)")->excludes(all_flag);
    formats(suite, false);
    suite->callback([&] { action = [&] { return cmd_suite(o, out, err); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        // Help for the innermost subcommand that was named.
        const CLI::App* scope = &app;
        for (const CLI::App* sub = scope; !sub->get_subcommands().empty();) {
            sub = sub->get_subcommands().front();
            scope = sub;
        }
        err << scope->help();
        return kExitUsage;
    }

    if (!action) {
        err << app.help();
        return kExitUsage;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource cap: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailed;
    }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace bellmoves::cli
