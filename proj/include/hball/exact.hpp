// Exact cardinalities of sphere and ball intersections for one, two and three
// centers in the binary Hamming space.
//
// Counting is done in the coordinate classes induced by a center triple: after
// translating the first center to the origin, every coordinate falls into one
// of four classes according to the pair (x2 xor x1, x3 xor x1).  A candidate
// word is then described by its number of ones per class, and each distance
// constraint is linear in those four numbers.

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hball/combinatorics.hpp"
#include "hball/word.hpp"

namespace hball {

/// Three centers with cached pairwise distances.
struct CenterTriple {
    std::size_t n;
    Word x1, x2, x3;
    long long d12, d13, d23;
};

inline CenterTriple make_center_triple(const Word& x1, const Word& x2, const Word& x3) {
    if (x1.size() != x2.size() || x1.size() != x3.size())
        throw std::invalid_argument("make_center_triple: centers must have equal length");
    return CenterTriple{x1.size(), x1, x2, x3,
                        static_cast<long long>(hamming_distance(x1, x2)),
                        static_cast<long long>(hamming_distance(x1, x3)),
                        static_cast<long long>(hamming_distance(x2, x3))};
}

/// Coordinate-class sizes by the pair (x2 xor x1, x3 xor x1).
/// n11 + n10 = d12, n11 + n01 = d13, n10 + n01 = d23.
struct BlockDecomposition {
    long long n00, n10, n01, n11;

    long long size() const { return n00 + n10 + n01 + n11; }
    /// The equal-size layout produced by canonical centers with even k = 2t.
    bool is_canonical_even() const { return n10 == n11 && n01 == n11; }
};

/// Distances from a candidate word to the three centers.
struct SphereProfile {
    long long r1, r2, r3;
};

/// Ones of a candidate word in classes (1,1), (1,0), (0,1), (0,0).
struct CompositionTerm {
    long long a1, a2, a3, a4;
};

/// The extremal center triple: pairwise distances (k, k, k) for even k = 2t,
/// (k, k, k+1) for odd k = 2t+1.
inline CenterTriple canonical_centers(long long n, long long k) {
    if (n <= 0 || k <= 0) throw std::invalid_argument("canonical_centers: n and k must be positive");
    const long long t = k / 2;
    const bool even = (k % 2 == 0);
    const bool feasible = even ? (3 * t <= n) : (3 * t + 2 <= n);
    if (!feasible)
        throw std::invalid_argument(
            "canonical_centers: three pairwise distances >= k require 3k <= 2n");
    const auto un = static_cast<std::size_t>(n);
    const auto ut = static_cast<std::size_t>(t);
    Word a(un), b(un), c(un);
    if (even) {
        b.set_range(0, 2 * ut, true);
        c.set_range(0, ut, true);
        c.set_range(2 * ut, 3 * ut, true);
    } else {
        b.set_range(0, static_cast<std::size_t>(k), true);
        c.set_range(0, ut, true);
        c.set_range(2 * ut + 1, 3 * ut + 2, true);
    }
    return make_center_triple(a, b, c);
}

inline BlockDecomposition block_decomposition(const CenterTriple& c) {
    const Word u = c.x2 ^ c.x1;
    const Word v = c.x3 ^ c.x1;
    const Word both = u ^ v;  // coordinates where exactly one of u, v is set
    const long long wu = static_cast<long long>(u.weight());
    const long long wv = static_cast<long long>(v.weight());
    const long long wx = static_cast<long long>(both.weight());
    const long long n11 = (wu + wv - wx) / 2;
    const long long n10 = wu - n11;
    const long long n01 = wv - n11;
    const long long n00 = static_cast<long long>(c.n) - n11 - n10 - n01;
    return BlockDecomposition{n00, n10, n01, n11};
}

/// Solve the three distance equations for the per-class ones given a1.
/// Returns nothing when the solution is non-integral or out of range.
inline std::optional<CompositionTerm> block_composition(const BlockDecomposition& d, long long a1,
                                                        const SphereProfile& p) {
    if (a1 < 0 || a1 > d.n11) return std::nullopt;
    const long long A = p.r1 - a1;
    const long long B = p.r2 - d.n11 - d.n10 + a1;
    const long long C = p.r3 - d.n11 - d.n01 + a1;
    if (((A - B) & 1LL) != 0 || ((A - C) & 1LL) != 0) return std::nullopt;
    const long long a2 = (A - B) / 2;
    const long long a3 = (A - C) / 2;
    const long long a4 = (B + C) / 2;
    if (a2 < 0 || a2 > d.n10 || a3 < 0 || a3 > d.n01 || a4 < 0 || a4 > d.n00) return std::nullopt;
    return CompositionTerm{a1, a2, a3, a4};
}

/// One term of the three-sphere sum: the number of words at the given profile
/// with exactly a1 ones in the first block.  Requires the equal-size canonical
/// decomposition; use three_sphere_intersection for general centers.
inline BigCount sphere_intersection_term(const BlockDecomposition& d, long long a1,
                                         const SphereProfile& p) {
    if (!d.is_canonical_even())
        throw std::invalid_argument(
            "sphere_intersection_term: requires the equal-size canonical decomposition");
    const auto c = block_composition(d, a1, p);
    if (!c) return 0;
    return binomial(d.n11, c->a1) * binomial(d.n10, c->a2) * binomial(d.n01, c->a3) *
           binomial(d.n00, c->a4);
}

/// Reusable three-sphere counter: binomial rows are built once per
/// decomposition, and each profile resolves to a single sum over a1.
class ThreeSphereCounter {
public:
    explicit ThreeSphereCounter(const BlockDecomposition& d)
        : d_(d),
          row11_(binomial_row(d.n11)),
          row10_(binomial_row(d.n10)),
          row01_(binomial_row(d.n01)),
          row00_(binomial_row(d.n00)) {}

    const BlockDecomposition& decomposition() const { return d_; }

    BigCount count(const SphereProfile& p) const {
        if (p.r1 < 0 || p.r2 < 0 || p.r3 < 0) return 0;
        const long long K = p.r1 - p.r2 + d_.n11 + d_.n10;  // = A - B + 2 a1
        const long long L = p.r1 - p.r3 + d_.n11 + d_.n01;  // = A - C + 2 a1
        const long long M = p.r2 + p.r3 - 2 * d_.n11 - d_.n10 - d_.n01;  // = B + C - 2 a1
        if ((K & 1LL) != 0 || (L & 1LL) != 0) return 0;
        // Each class bound is a half-open interval for a1; intersect them all.
        long long lo = std::max({0LL, K / 2 - d_.n10, L / 2 - d_.n01, -(M / 2)});
        long long hi = std::min({d_.n11, K / 2, L / 2, d_.n00 - M / 2});
        if (lo > hi) return 0;
        BigCount total = 0;
        for (long long a1 = lo; a1 <= hi; ++a1) {
            const long long a2 = K / 2 - a1;
            const long long a3 = L / 2 - a1;
            const long long a4 = M / 2 + a1;
            total += row11_[static_cast<std::size_t>(a1)] * row10_[static_cast<std::size_t>(a2)] *
                     row01_[static_cast<std::size_t>(a3)] * row00_[static_cast<std::size_t>(a4)];
        }
        return total;
    }

private:
    BlockDecomposition d_;
    std::vector<BigCount> row11_, row10_, row01_, row00_;
};

/// |V_{r1}(x1) cap V_{r2}(x2) cap V_{r3}(x3)| for any block decomposition.
/// Infeasible profiles count zero.
inline BigCount three_sphere_intersection(const BlockDecomposition& d, const SphereProfile& p) {
    return ThreeSphereCounter(d).count(p);
}

/// |B_r(x1) cap B_r(x2) cap B_r(x3)|, exact.  The innermost class is summed
/// by a binomial prefix lookup, so the loop is cubic in the block sizes.
inline BigCount three_ball_intersection_of(const BlockDecomposition& d, long long r) {
    if (r < 0) return 0;
    r = std::min(r, d.size());
    const auto row11 = binomial_row(d.n11);
    const auto row10 = binomial_row(d.n10);
    const auto row01 = binomial_row(d.n01);
    const auto prefix00 = prefix_binomial_row(d.n00);
    BigCount total = 0;
    for (long long w11 = 0; w11 <= std::min(d.n11, r); ++w11) {
        for (long long w10 = 0; w10 <= std::min(d.n10, r - w11); ++w10) {
            const BigCount partial = row11[static_cast<std::size_t>(w11)] * row10[static_cast<std::size_t>(w10)];
            const long long base2 = (d.n11 - w11) + (d.n10 - w10);
            const long long base3 = (d.n11 - w11) + w10 + d.n01;
            for (long long w01 = 0; w01 <= std::min(d.n01, r - w11 - w10); ++w01) {
                const long long cap =
                    std::min({r - w11 - w10 - w01, r - base2 - w01, r - base3 + w01, d.n00});
                if (cap < 0) continue;
                total += partial * row01[static_cast<std::size_t>(w01)] *
                         prefix00[static_cast<std::size_t>(cap)];
            }
        }
    }
    return total;
}

inline BigCount three_ball_intersection(const CenterTriple& c, long long r) {
    return three_ball_intersection_of(block_decomposition(c), r);
}

/// |B_r(0^n) cap B_r(1^k 0^{n-k})| for the canonical two-center layout.
inline BigCount two_ball_intersection(long long n, long long k, long long r) {
    if (n <= 0) throw std::invalid_argument("two_ball_intersection: n must be positive");
    if (k < 0 || k > n) throw std::invalid_argument("two_ball_intersection: k must lie in [0, n]");
    if (r < 0) return 0;
    r = std::min(r, n);
    const auto row_k = binomial_row(k);
    const auto prefix = prefix_binomial_row(n - k);
    BigCount total = 0;
    for (long long d1 = std::max(0LL, k - r); d1 <= std::min(k, r); ++d1) {
        const long long cap = std::min({r - d1, r - k + d1, n - k});
        if (cap < 0) continue;
        total += row_k[static_cast<std::size_t>(d1)] * prefix[static_cast<std::size_t>(cap)];
    }
    return total;
}

/// Largest single-profile sphere-intersection count with radii at most r,
/// together with one achieving profile (lexicographically smallest on ties).
inline std::pair<BigCount, SphereProfile> max_sphere_term(const CenterTriple& c, long long r) {
    const auto d = block_decomposition(c);
    const ThreeSphereCounter counter(d);
    r = std::min(r, d.size());
    BigCount best = 0;
    SphereProfile arg{0, 0, 0};
    for (long long r1 = 0; r1 <= r; ++r1)
        for (long long r2 = 0; r2 <= r; ++r2)
            for (long long r3 = 0; r3 <= r; ++r3) {
                BigCount v = counter.count({r1, r2, r3});
                if (v > best) {
                    best = std::move(v);
                    arg = {r1, r2, r3};
                }
            }
    return {best, arg};
}

/// Independent oracle: enumerate all 2^n words and test every distance
/// constraint by popcount.  Deliberately ignores the block machinery.
inline BigCount brute_force_intersection(const std::vector<Word>& centers, long long r) {
    if (centers.empty()) throw std::invalid_argument("brute_force_intersection: no centers");
    const std::size_t n = centers.front().size();
    for (const auto& c : centers)
        if (c.size() != n) throw std::invalid_argument("brute_force_intersection: length mismatch");
    if (n > 22) throw std::invalid_argument("brute_force_intersection: n must be at most 22");
    std::vector<std::uint64_t> masks;
    masks.reserve(centers.size());
    for (const auto& c : centers) masks.push_back(c.as_mask64());
    long long count = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = 0; x < limit; ++x) {
        bool inside = true;
        for (const auto m : masks) {
            if (std::popcount(x ^ m) > r) {
                inside = false;
                break;
            }
        }
        if (inside) ++count;
    }
    return BigCount(count);
}

namespace detail {

/// Block sizes of the canonical triple without materializing the words.
inline BlockDecomposition canonical_decomposition(long long n, long long k) {
    if (n <= 0 || k <= 0)
        throw std::invalid_argument("canonical_decomposition: n and k must be positive");
    const long long t = k / 2;
    if (k % 2 == 0) {
        if (3 * t > n)
            throw std::invalid_argument("canonical_decomposition: requires 3k <= 2n");
        return BlockDecomposition{n - 3 * t, t, t, t};
    }
    if (3 * t + 2 > n)
        throw std::invalid_argument("canonical_decomposition: requires 3k <= 2n");
    return BlockDecomposition{n - 3 * t - 2, t + 1, t + 1, t};
}

}  // namespace detail

/// Log-domain counterpart of three_ball_intersection on canonical centers.
/// Same loop structure, accumulated with streaming log-sum-exp; usable far
/// beyond the exact backend (n in the thousands).
inline LogCount log_three_ball_intersection(long long n, long long k, long long r) {
    const auto d = detail::canonical_decomposition(n, k);
    if (r < 0) return LogCount::zero();
    r = std::min(r, n);
    const auto lr11 = log_binomial_row(d.n11);
    const auto lr10 = log_binomial_row(d.n10);
    const auto lr01 = log_binomial_row(d.n01);
    const auto lprefix00 = log_prefix_binomial_row(d.n00);
    double acc = -std::numeric_limits<double>::infinity();
    for (long long w11 = 0; w11 <= std::min(d.n11, r); ++w11) {
        for (long long w10 = 0; w10 <= std::min(d.n10, r - w11); ++w10) {
            const double partial = lr11[static_cast<std::size_t>(w11)] + lr10[static_cast<std::size_t>(w10)];
            const long long base2 = (d.n11 - w11) + (d.n10 - w10);
            const long long base3 = (d.n11 - w11) + w10 + d.n01;
            for (long long w01 = 0; w01 <= std::min(d.n01, r - w11 - w10); ++w01) {
                const long long cap =
                    std::min({r - w11 - w10 - w01, r - base2 - w01, r - base3 + w01, d.n00});
                if (cap < 0) continue;
                acc = log_add(acc, partial + lr01[static_cast<std::size_t>(w01)] +
                                       lprefix00[static_cast<std::size_t>(cap)]);
            }
        }
    }
    return LogCount::from_log(acc);
}

}  // namespace hball
