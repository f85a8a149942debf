// Exact and log-domain binomial arithmetic plus the binary entropy function.
// Everything downstream (sphere/ball counters, rate functions) builds on this.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hball {

/// Arbitrary-precision non-negative integer for exact cardinalities.
using BigCount = boost::multiprecision::cpp_int;

/// A count carried in natural-log units. Count zero is the -infinity state.
struct LogCount {
    double log_value = -std::numeric_limits<double>::infinity();

    static LogCount zero() { return {}; }
    static LogCount from_log(double v) { return {v}; }
    bool is_zero() const { return std::isinf(log_value) && log_value < 0.0; }
};

/// log(exp(a) + exp(b)) without leaving the log domain.
inline double log_add(double a, double b) {
    if (std::isinf(a) && a < 0.0) return b;
    if (std::isinf(b) && b < 0.0) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

/// C(n, k). Out-of-range k is a valid zero, not an error.
inline BigCount binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

/// The full row C(n, 0..n). Counting loops index this instead of recomputing.
inline std::vector<BigCount> binomial_row(long long n) {
    if (n < 0) throw std::invalid_argument("binomial_row: n must be non-negative");
    std::vector<BigCount> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long long k = 1; k <= n; ++k) {
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    }
    return row;
}

/// Sum of C(n, j) for j = 0..min(m, n); zero when m < 0 (empty prefix).
inline BigCount prefix_binomial_sum(long long n, long long m) {
    if (n < 0) throw std::invalid_argument("prefix_binomial_sum: n must be non-negative");
    if (m < 0) return 0;
    m = std::min(m, n);
    BigCount term = 1, sum = 1;
    for (long long j = 1; j <= m; ++j) {
        term *= (n - j + 1);
        term /= j;
        sum += term;
    }
    return sum;
}

/// Running prefix sums P[m] = sum_{j<=m} C(n, j), for repeated cap lookups.
inline std::vector<BigCount> prefix_binomial_row(long long n) {
    auto row = binomial_row(n);
    for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
    return row;
}

/// ln C(n, k) via log-gamma, so n is unbounded by word size.
inline LogCount log_binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("log_binomial: n must be non-negative");
    if (k < 0 || k > n) return LogCount::zero();
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    return LogCount::from_log(std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) -
                              std::lgamma(nn - kk + 1.0));
}

/// Row of ln C(n, 0..n) for log-domain counting loops.
inline std::vector<double> log_binomial_row(long long n) {
    std::vector<double> row(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = log_binomial(n, k).log_value;
    return row;
}

/// Log-domain counterpart of prefix_binomial_row.
inline std::vector<double> log_prefix_binomial_row(long long n) {
    auto row = log_binomial_row(n);
    for (std::size_t i = 1; i < row.size(); ++i) row[i] = log_add(row[i], row[i - 1]);
    return row;
}

/// Natural log of an exact count. Exact above double range via the top bits.
inline double log_of(const BigCount& x) {
    if (x < 0) throw std::domain_error("log_of: negative count");
    if (x == 0) return -std::numeric_limits<double>::infinity();
    const unsigned msb = boost::multiprecision::msb(x);
    if (msb < 63) return std::log(x.convert_to<double>());
    const unsigned shift = msb - 62;
    const std::uint64_t top = static_cast<std::uint64_t>(BigCount(x >> shift));
    return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::numbers::ln2;
}

/// H(p) = -p ln p - (1-p) ln(1-p), with H(0) = H(1) = 0 by continuity.
inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

}  // namespace hball
