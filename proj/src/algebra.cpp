#include "bellmoves/algebra.hpp"

#include <cctype>

namespace bellmoves {

BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt result;
    mpz_fac_ui(result.backend().data(), static_cast<unsigned long>(n));
    return result;
}

BigInt pow_int(const BigInt& base, unsigned long exponent) {
    BigInt result;
    mpz_pow_ui(result.backend().data(), base.backend().data(), exponent);
    return result;
}

BigRational pow_rat(const BigRational& base, unsigned long exponent) {
    BigInt num = pow_int(numerator(base), exponent);
    BigInt den = pow_int(denominator(base), exponent);
    return BigRational(num, den);
}

bool power_sums_equal(std::span<const BigRational> xs, std::span<const BigRational> moments) {
    if (moments.size() < xs.size()) {
        throw std::invalid_argument("power_sums_equal: " + std::to_string(moments.size()) +
                                    " moments supplied for a multiset of size " + std::to_string(xs.size()));
    }
    std::vector<BigRational> powers(xs.begin(), xs.end());
    for (std::size_t t = 1; t <= xs.size(); ++t) {
        BigRational sum = 0;
        for (const auto& p : powers) sum += p;
        if (sum != moments[t - 1]) return false;
        for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= xs[i];
    }
    return true;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    if (!is_integer_literal(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits);
}

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return BigRational(num, den);
}

namespace {

template <typename Scalar>
nlohmann::json matrix_json(const Matrix<Scalar>& m) {
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json to_json(const RatMatrix& m) { return matrix_json(m); }
nlohmann::json to_json(const IntMatrix& m) { return matrix_json(m); }

RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
    RatMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw DimensionError("matrix JSON rows have unequal lengths");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& cell = row.at(static_cast<std::size_t>(c));
            m(i, c) = cell.is_string() ? parse_rational(cell.get<std::string>())
                                       : BigRational(cell.get<long long>());
        }
    }
    return m;
}

}  // namespace bellmoves
