#pragma once

// Bell and Stirling tables in every variant, closed forms, recurrences,
// generating-function and Dobinski checks, asymptotic ratios, the Q-colouring
// count, and embedded OEIS prefixes.

#include "bellmoves/algebra.hpp"
#include "bellmoves/shuffles.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace bellmoves {

enum class Variant {
    B,
    Bprime,
    Bdagger,
    Bdaggerprime,
    stir,
    stirprime,
    stirdagger,
    stirdaggerprime,
    stirstar,
    stirdaggerstar,
    stirddagger,
    stirddaggerprime,
    Mddagger,
    Mddaggerprime,
    Sddagger,
    Sddaggerprime,
};

enum class Method { enumeration, recurrence, closed_form, transfer_matrix, shuffle_dp };

std::string to_string(Variant v);
std::string to_string(Method m);
Variant parse_variant(std::string_view text);
Method parse_method(std::string_view text);

/// Methods that can produce the variant.
std::vector<Method> methods_for(Variant v);

class CountTable {
public:
    CountTable(Variant variant, Method method, int t_max, int n_max);

    Variant variant() const { return variant_; }
    Method method() const { return method_; }
    int t_max() const { return t_max_; }
    int n_max() const { return n_max_; }
    const BigInt& at(int t, int n) const;
    BigInt& at(int t, int n);

    /// Header "t,n,value", rows in (t, n) order.
    std::string to_csv() const;
    nlohmann::json to_json() const;

    bool operator==(const CountTable& other) const { return values_ == other.values_; }

private:
    Variant variant_;
    Method method_;
    int t_max_;
    int n_max_;
    std::vector<std::vector<BigInt>> values_;
};

/// Every cell (t, n) with 0 <= t <= t_max, 0 <= n <= n_max. Throws
/// std::invalid_argument if the method does not apply to the variant, and
/// ResourceError past group or enumeration caps (enumeration: t <= 12).
CountTable table(Variant variant, int t_max, int n_max, Method method,
                 std::size_t max_group_order = kDefaultMaxGroupOrder);

/// Explicit alternating sums for stir, stir', stir-dagger, stir-dagger-prime.
/// The primed forms need n >= 2. A non-integral result is a logic_error.
BigInt closed_form(Variant variant, int t, int n);

struct IdentityRange {
    int t_min = 0;
    int t_max = 10;
    int n_min = 0;
    int n_max = 6;
};

struct IdentityFailure {
    int t;
    int n;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string name;
    IdentityRange range;
    int instances = 0;
    std::vector<IdentityFailure> failures;

    bool pass() const { return failures.empty() && instances > 0; }
    nlohmann::json to_json() const;
};

/// Names accepted by verify_identity, in suite order.
std::vector<std::string> identity_names();
IdentityRange default_range(std::string_view name);
/// Throws std::invalid_argument for an unknown name.
IdentityReport verify_identity(std::string_view name, std::optional<IdentityRange> range = std::nullopt);

/// Coefficients t! [x^t] of the exponential generating function, t = 0..order.
std::vector<BigInt> egf_coefficients(Variant variant, int order);
/// Compares egf_coefficients with the diagonal X_t(t) of the recurrence table.
IdentityReport egf_check(Variant variant, int order);

/// Coefficients [x^t] of the column generating function, t = 0..order.
std::vector<BigInt> ogf_coefficients(Variant variant, int n, int order);
IdentityReport ogf_check(Variant variant, int n, int order);

struct DobinskiResult {
    Variant variant;
    int t;
    int terms;
    BigRational approximation;
    BigRational bound;
    BigInt rounded;
    BigInt exact;
    bool ok = false;
    nlohmann::json to_json() const;
};

/// Partial sum of the Dobinski-type series for X_t(t), X in {B, B', B-dagger,
/// B-dagger-prime}, times an enclosure of e^{-1} or e^{-1/2}. The tail past
/// `terms` is at most twice its first term once the ratio of consecutive
/// terms is at most 1/2, which is checked exactly.
DobinskiResult dobinski(Variant variant, int t, int terms);

/// Principal branch of W on [0, inf): w e^w = x.
double lambert_w(double x);

enum class Asymptotic { stirprime3, stirdaggerprime2, bell_lambert };
std::string to_string(Asymptotic a);
Asymptotic parse_asymptotic(std::string_view text);

struct AsymptoticRow {
    int t;
    double ratio;
    double deviation;  // |ratio - 1|
};

struct AsymptoticReport {
    Asymptotic kind;
    std::vector<AsymptoticRow> rows;
    bool monotone() const;
    nlohmann::json to_json() const;
};

/// stir'(t,3) 3!/2^t, stir-dagger-prime(t,2) 2^2 2!/3^t, or
/// B'_t(t) t / (B_t(t) W(t)) at each t.
AsymptoticReport asymptotic_report(Asymptotic kind, const std::vector<int>& t_list);

/// 1 x t colourings from n pairs of colours, adjacent boxes from different
/// pairs, up to permuting pairs and swapping within a pair.
BigInt q_colourings(int t, int n);

struct OeisEntry {
    std::string id;
    std::string description;
    std::vector<BigInt> expected;
    std::vector<BigInt> computed;
    bool match() const { return expected == computed; }
};

std::vector<OeisEntry> oeis_check();

}  // namespace bellmoves
