#pragma once

// Exact scalars, dense matrices over them, and truncated power series.
//
// Everything here is templated on the scalar so the same kernels run over
// BigInt (path counts) and BigRational (transition matrices, series).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bellmoves {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed a configured size cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Matrices

template <typename Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index size) {
    return Matrix<Scalar>::Identity(size, size);
}

/// Exact product a·b.
///
/// The right operand is scanned once for its nonzero pattern; the inner loop
/// touches only those entries. Transfer and transition matrices have a handful
/// of nonzeros per row, so powers A^{t-1}·A cost O(rows · cols · degree).
template <typename Scalar>
Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    std::vector<std::vector<Eigen::Index>> nonzero(static_cast<std::size_t>(b.rows()));
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (b(k, j) != 0) nonzero[static_cast<std::size_t>(k)].push_back(j);
        }
    }
    Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
    Scalar term;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (Eigen::Index j : nonzero[static_cast<std::size_t>(k)]) {
                term = aik;
                term *= b(k, j);
                c(i, j) += term;
            }
        }
    }
    return c;
}

/// a^t by repeated squaring; a^0 is the identity.
template <typename Scalar>
Matrix<Scalar> mat_pow(const Matrix<Scalar>& a, unsigned long t) {
    if (a.rows() != a.cols()) {
        throw DimensionError("mat_pow: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", not square");
    }
    Matrix<Scalar> result = identity_matrix<Scalar>(a.rows());
    Matrix<Scalar> base = a;
    while (t > 0) {
        if (t & 1UL) result = mat_mul(result, base);
        t >>= 1;
        if (t > 0) base = mat_mul(base, base);
    }
    return result;
}

/// Tr(a^t) for t = 1..t_max (entry t-1 of the result).
template <typename Scalar>
std::vector<Scalar> trace_moments(const Matrix<Scalar>& a, unsigned t_max) {
    if (a.rows() != a.cols()) throw DimensionError("trace_moments: matrix is not square");
    std::vector<Scalar> moments;
    moments.reserve(t_max);
    Matrix<Scalar> power = identity_matrix<Scalar>(a.rows());
    for (unsigned t = 1; t <= t_max; ++t) {
        power = mat_mul(power, a);
        moments.push_back(power.trace());
    }
    return moments;
}

template <typename Scalar>
bool is_row_stochastic(const Matrix<Scalar>& a) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Scalar sum = 0;
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) < 0) return false;
            sum += a(i, j);
        }
        if (sum != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Truncated power series

/// Power series c_0 + c_1 x + ... + c_N x^N with a fixed truncation order N.
///
/// Binary operations require equal orders; nothing silently truncates to the
/// smaller one.
template <typename Scalar>
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}

    Series(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1) {
            throw DimensionError("Series: " + std::to_string(coeffs_.size()) +
                                 " coefficients exceed order " + std::to_string(order));
        }
        coeffs_.resize(order + 1, Scalar(0));
    }

    static Series constant(std::size_t order, const Scalar& c) { return Series(order, {c}); }
    static Series variable(std::size_t order) {
        Series s(order);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }
    /// exp(a·x), i.e. coefficients a^m / m!.
    static Series exp_linear(std::size_t order, const Scalar& a) {
        Series s(order);
        Scalar term = 1;
        for (std::size_t m = 0; m <= order; ++m) {
            s.coeffs_[m] = term;
            term = term * a / Scalar(static_cast<long>(m + 1));
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
    Scalar& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    Series& operator+=(const Series& other) {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& other) {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        return *this;
    }
    Series& operator*=(const Scalar& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Scalar& c) { return a *= c; }
    friend Series operator*(const Scalar& c, Series a) { return a *= c; }

    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_order(b);
        Series c(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return c;
    }

    friend bool operator==(const Series& a, const Series& b) = default;

    /// x^k · this, truncated at the same order.
    Series shifted(std::size_t k) const {
        Series s(order());
        for (std::size_t i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
        return s;
    }

private:
    void require_same_order(const Series& other) const {
        if (other.order() != order()) {
            throw DimensionError("Series: mixed truncation orders " + std::to_string(order()) + " and " +
                                 std::to_string(other.order()));
        }
    }

    std::vector<Scalar> coeffs_;
};

using RatSeries = Series<BigRational>;

/// exp(f) for f with zero constant term, from (exp f)' = f' · exp f:
/// m·g_m = sum_{k=1}^{m} k·f_k·g_{m-k}.
template <typename Scalar>
Series<Scalar> series_exp(const Series<Scalar>& f) {
    if (f[0] != 0) throw std::domain_error("series_exp: constant term must be zero");
    const std::size_t order = f.order();
    Series<Scalar> g(order);
    g[0] = 1;
    for (std::size_t m = 1; m <= order; ++m) {
        Scalar acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            acc += Scalar(static_cast<long>(k)) * f[k] * g[m - k];
        }
        g[m] = acc / Scalar(static_cast<long>(m));
    }
    return g;
}

/// 1/f for f with invertible constant term.
template <typename Scalar>
Series<Scalar> series_inverse(const Series<Scalar>& f) {
    if (f[0] == 0) throw std::domain_error("series_inverse: constant term is zero");
    Series<Scalar> g(f.order());
    g[0] = Scalar(1) / f[0];
    for (std::size_t m = 1; m <= f.order(); ++m) {
        Scalar acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += f[k] * g[m - k];
        g[m] = -acc / f[0];
    }
    return g;
}

template <typename Scalar>
Series<Scalar> series_div(const Series<Scalar>& num, const Series<Scalar>& den) {
    return num * series_inverse(den);
}

// ---------------------------------------------------------------------------
// Scalars

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);
BigInt pow_int(const BigInt& base, unsigned long exponent);
BigRational pow_rat(const BigRational& base, unsigned long exponent);

/// True iff sum_i xs_i^t == moments[t-1] for every t = 1..|xs|.
///
/// Over a field of characteristic zero, the first |xs| power sums determine a
/// multiset of size |xs| (Newton's identities), so a true result certifies
/// that xs is the multiset whose moments were supplied.
bool power_sums_equal(std::span<const BigRational> xs, std::span<const BigRational> moments);

std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);
BigInt parse_bigint(std::string_view text);
/// Accepts "p" or "p/q" with q nonzero; the result is normalized.
BigRational parse_rational(std::string_view text);

nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const IntMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

}  // namespace bellmoves
