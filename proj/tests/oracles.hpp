// Independent reference computations used only by the tests.  Nothing here
// calls into the library's linear algebra or face iteration.

#ifndef CUBCOH_TESTS_ORACLES_HPP
#define CUBCOH_TESTS_ORACLES_HPP

#include "cubcoh/core.hpp"
#include "cubcoh/exactlinalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle
{

using cubcoh::Integer;
using cubcoh::IntMatrix;

/// Leibniz expansion over all permutations.
inline Integer permutation_determinant(std::vector<std::vector<Integer>> const& m)
{
    std::size_t const n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do
    {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b])
                    ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r)
            term *= m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do
    {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i])
                c.push_back(i);
        out.push_back(c);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0)
    {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
/// D_k is the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors(IntMatrix const& a)
{
    std::vector<Integer> out;
    Integer previous = 1;
    std::size_t const limit = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= limit; ++k)
    {
        Integer dk = 0;
        for (auto const& rows : combinations(a.rows(), k))
            for (auto const& cols : combinations(a.cols(), k))
            {
                std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c)
                        minor[r][c] = a(rows[r], cols[c]);
                dk = gcd(dk, permutation_determinant(minor));
            }
        if (dk == 0)
            break;
        out.push_back(dk / previous);
        previous = dk;
    }
    return out;
}

/// Iterated face obtained by eliminating the complement coordinates in the
/// given order.  When a coordinate c is removed, each earlier removal below c
/// has shifted it down by one.
inline cubcoh::CubeId face_in_order(cubcoh::PrecubicalSet const& x, cubcoh::CubeId u,
                                    std::vector<std::size_t> const& order, cubcoh::Eps eps)
{
    std::vector<std::size_t> removed;
    for (std::size_t c : order)
    {
        std::size_t const below = static_cast<std::size_t>(
            std::count_if(removed.begin(), removed.end(), [c](std::size_t r) { return r < c; }));
        u = x.face(u, c - below, eps);
        removed.push_back(c);
    }
    return u;
}

/// Searches for a dimension-preserving bijection that commutes with every
/// face map.  Brute force; only for tiny sets.
inline bool isomorphic(cubcoh::PrecubicalSet const& x, cubcoh::PrecubicalSet const& y)
{
    if (x.cube_counts() != y.cube_counts())
        return false;
    std::size_t const dims = x.num_dims();
    std::vector<std::vector<std::uint32_t>> maps(dims);
    for (std::size_t n = 0; n < dims; ++n)
    {
        maps[n].resize(x.count(n));
        std::iota(maps[n].begin(), maps[n].end(), 0u);
    }
    auto compatible = [&]() {
        for (std::size_t n = 1; n < dims; ++n)
            for (std::uint32_t k = 0; k < x.count(n); ++k)
                for (std::size_t i = 1; i <= n; ++i)
                    for (int e = 0; e < 2; ++e)
                    {
                        auto fx = x.face({static_cast<std::uint32_t>(n), k}, i, e);
                        auto fy = y.face({static_cast<std::uint32_t>(n), maps[n][k]}, i, e);
                        if (maps[n - 1][fx.index] != fy.index)
                            return false;
                    }
        return true;
    };
    // Odometer over the product of per-dimension permutations.
    while (true)
    {
        if (compatible())
            return true;
        std::size_t n = 0;
        while (n < dims && !std::next_permutation(maps[n].begin(), maps[n].end()))
            ++n;
        if (n == dims)
            return false;
    }
}

} // namespace oracle

#endif
