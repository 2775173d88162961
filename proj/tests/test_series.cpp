#include "bellmoves/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace bellmoves;

namespace {

std::vector<long> row(const CountTable& tb, int t) {
    std::vector<long> out;
    for (int n = 0; n <= tb.n_max(); ++n) out.push_back(tb.at(t, n).convert_to<long>());
    return out;
}

}  // namespace

TEST_CASE("frozen Bell tables") {
    const auto b = table(Variant::B, 7, 5, Method::recurrence);
    CHECK(row(b, 7) == std::vector<long>{0, 1, 64, 365, 715, 855});
    const auto bp = table(Variant::Bprime, 7, 5, Method::recurrence);
    CHECK(row(bp, 6) == std::vector<long>{0, 0, 1, 11, 31, 40});
    CHECK(row(bp, 7) == std::vector<long>{0, 0, 0, 21, 91, 147});
    const auto bd = table(Variant::Bdagger, 6, 4, Method::recurrence);
    CHECK(row(bd, 6) == std::vector<long>{0, 32, 528, 1248, 1508});
    const auto bdp = table(Variant::Bdaggerprime, 6, 4, Method::recurrence);
    CHECK(row(bdp, 5) == std::vector<long>{0, 0, 30, 80, 95});
    CHECK(row(bdp, 6) == std::vector<long>{0, 1, 92, 372, 527});
}

TEST_CASE("every method gives the same table") {
    for (Variant v : {Variant::B, Variant::Bprime, Variant::Bdagger, Variant::Bdaggerprime, Variant::stir,
                      Variant::stirprime, Variant::stirdagger, Variant::stirdaggerprime}) {
        const auto reference = table(v, 7, 4, Method::recurrence);
        for (Method m : methods_for(v)) {
            CAPTURE(to_string(v));
            CAPTURE(to_string(m));
            CHECK(table(v, 7, 4, m) == reference);
        }
    }
}

TEST_CASE("tables agree with unpruned enumeration") {
    const auto stir = table(Variant::stir, 7, 5, Method::closed_form);
    const auto stirp = table(Variant::stirprime, 7, 5, Method::closed_form);
    const auto stard = table(Variant::stirdaggerstar, 6, 4, Method::recurrence);
    for (int t = 0; t <= 7; ++t) {
        for (int n = 0; n <= 5; ++n) {
            CHECK(stir.at(t, n) == oracle::stirling(t, n, oracle::Kind::plain));
            CHECK(stirp.at(t, n) == oracle::stirling(t, n, oracle::Kind::primed));
        }
    }
    for (int t = 2; t <= 6; ++t) {
        for (int n = 0; n <= 4; ++n) CHECK(stard.at(t, n) == oracle::marked_stirling(t, n, oracle::MarkedKind::dagger_star));
    }
}

TEST_CASE("star numbers at t = 1") {
    // The definition and the spaced count disagree only in the first row.
    const auto def = table(Variant::stirstar, 6, 4, Method::recurrence);
    const auto count = table(Variant::stirstar, 6, 4, Method::enumeration);
    CHECK(def.at(1, 0) == 1);
    CHECK(count.at(1, 0) == 0);
    CHECK(def.at(1, 1) == 0);
    CHECK(count.at(1, 1) == 1);
    for (int t = 2; t <= 6; ++t) {
        for (int n = 0; n <= 4; ++n) CHECK(def.at(t, n) == count.at(t, n));
    }
    const auto r = verify_identity("spaced-star", IdentityRange{1, 4, 0, 4});
    CHECK(r.failures.size() == 2);
}

TEST_CASE("closed forms") {
    CHECK(closed_form(Variant::stir, 5, 3) == 25);
    CHECK(closed_form(Variant::stirprime, 7, 3) == 21);
    CHECK(closed_form(Variant::stirdagger, 4, 2) == 28);
    CHECK(closed_form(Variant::stirdaggerprime, 5, 2) == 30);
    // stir-dagger(t,2) = 2^{t-2}(2^{t-1} - 1)
    for (int t = 2; t <= 12; ++t) {
        CHECK(closed_form(Variant::stirdagger, t, 2) ==
              pow_int(2, static_cast<unsigned long>(t - 2)) * (pow_int(2, static_cast<unsigned long>(t - 1)) - 1));
    }
    CHECK_THROWS(closed_form(Variant::stirprime, 3, 1));
    CHECK_THROWS(closed_form(Variant::B, 3, 1));
}

TEST_CASE("methods and caps") {
    CHECK_THROWS_AS(table(Variant::Mddagger, 3, 3, Method::recurrence), std::invalid_argument);
    CHECK_THROWS_AS(table(Variant::B, 13, 3, Method::enumeration), ResourceError);
    CHECK(parse_variant("stirdaggerstar") == Variant::stirdaggerstar);
    CHECK(parse_method("closed-form") == Method::closed_form);
    CHECK_THROWS(parse_variant("C"));
}

TEST_CASE("type D Stirling numbers can be negative") {
    const auto s = table(Variant::stirddagger, 5, 4, Method::transfer_matrix);
    CHECK(s.at(1, 2) == -1);
    CHECK(s.at(3, 3) == -4);
    CHECK(s.at(5, 4) == -60);
    const auto m = table(Variant::Mddagger, 6, 3, Method::transfer_matrix);
    const auto sd = table(Variant::Sddagger, 6, 3, Method::shuffle_dp);
    for (int t = 0; t <= 6; ++t) {
        for (int n = 2; n <= 3; ++n) CHECK(m.at(t, n) == sd.at(t, n));
        CHECK(m.at(t, 1) == pow_int(2, static_cast<unsigned long>(t)));
        CHECK(sd.at(t, 1) == 1);
    }
}

TEST_CASE("csv and json output") {
    const auto tb = table(Variant::B, 1, 1, Method::recurrence);
    CHECK(tb.to_csv() == "t,n,value\n0,0,1\n0,1,1\n1,0,0\n1,1,1\n");
    const auto j = tb.to_json();
    CHECK(j["values"][1][1] == "1");
    CHECK(j["method"] == "recurrence");
}

TEST_CASE("identity suite") {
    for (const auto& name : identity_names()) {
        CAPTURE(name);
        const auto r = verify_identity(name);
        CHECK(r.instances > 0);
        CHECK(r.pass());
    }
    CHECK_THROWS(verify_identity("no-such-identity"));
}

TEST_CASE("the literal type D sum fails") {
    const auto r = verify_identity("type-d-sum-literal");
    REQUIRE_FALSE(r.pass());
    CHECK(r.failures.front().t == 2);
    CHECK(r.failures.front().n == 2);
    CHECK(r.failures.front().lhs == "3");
    CHECK(r.failures.front().rhs == "2");
}

TEST_CASE("generating functions") {
    const auto bp = egf_coefficients(Variant::Bprime, 8);
    CHECK(bp[8] == 715);
    CHECK(egf_check(Variant::Bdaggerprime, 12).pass());
    const auto col = ogf_coefficients(Variant::stirdaggerprime, 2, 6);
    CHECK(col == std::vector<BigInt>{0, 0, 1, 3, 10, 30, 91});
    CHECK(ogf_check(Variant::stirprime, 4, 12).pass());
    CHECK_THROWS(ogf_coefficients(Variant::stirprime, 1, 5));
    CHECK_THROWS(egf_coefficients(Variant::stir, 5));
}

TEST_CASE("Dobinski sums round to the exact value") {
    for (Variant v : {Variant::B, Variant::Bprime, Variant::Bdagger, Variant::Bdaggerprime}) {
        for (int t = 0; t <= 12; ++t) {
            const auto r = dobinski(v, t, 60);
            CAPTURE(to_string(v));
            CAPTURE(t);
            CHECK(r.ok);
            CHECK(r.bound < BigRational(1, 2));
        }
    }
    CHECK(dobinski(Variant::B, 10, 60).rounded == 115975);
    CHECK_THROWS(dobinski(Variant::B, 10, 15));
    CHECK_THROWS(dobinski(Variant::stir, 3, 60));
}

TEST_CASE("Lambert W") {
    CHECK(lambert_w(0) == 0);
    CHECK(std::abs(lambert_w(1) - 0.5671432904097838) < 1e-14);
    for (double x : {0.01, 0.5, 2.0, 10.0, 1e3, 1e8}) {
        const double w = lambert_w(x);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * x);
    }
    CHECK_THROWS(lambert_w(-0.1));
}

TEST_CASE("asymptotic trends") {
    CHECK(asymptotic_report(Asymptotic::stirprime3, {10, 20, 30}).monotone());
    CHECK(asymptotic_report(Asymptotic::stirdaggerprime2, {10, 20, 30}).monotone());
    CHECK(asymptotic_report(Asymptotic::bell_lambert, {20, 40, 60}).monotone());
    CHECK_FALSE(asymptotic_report(Asymptotic::bell_lambert, {60, 20}).monotone());
}

TEST_CASE("pair colourings equal shifted B-dagger") {
    const auto bd = table(Variant::Bdagger, 5, 3, Method::recurrence);
    for (int t = 1; t <= 6; ++t) {
        for (int n = 1; n <= 4; ++n) CHECK(q_colourings(t, n) == bd.at(t - 1, n - 1));
    }
}

TEST_CASE("OEIS prefixes") {
    for (const auto& e : oeis_check()) {
        CAPTURE(e.id);
        CHECK(e.expected.size() >= 10);
        CHECK(e.match());
    }
}
