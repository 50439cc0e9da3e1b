#include "cubcoh/exactlinalg.hpp"

#include "../oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cubcoh;

namespace
{

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = entry(rng);
    return m;
}

void check_smith(IntMatrix const& a)
{
    auto const f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.S);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    CHECK(f.U * f.U_inv == IntMatrix::identity(a.rows()));
    CHECK(f.V * f.V_inv == IntMatrix::identity(a.cols()));
    for (std::size_t k = 0; k < f.diag.size(); ++k)
    {
        CHECK(f.diag[k] > 0);
        CHECK(f.S(k, k) == f.diag[k]);
        if (k > 0)
            CHECK(f.diag[k] % f.diag[k - 1] == 0);
    }
    CHECK(f.diag == oracle::invariant_factors(a));
}

} // namespace

TEST_CASE("smith form of small fixed matrices")
{
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    CHECK(smith_normal_form(a).diag == std::vector<Integer>{2, 6, 12});
    check_smith(a);
    check_smith(IntMatrix(3, 2));
    check_smith(IntMatrix{{0, 0}, {0, 5}});
    check_smith(IntMatrix(0, 3));
    IntMatrix b{{2, 0}, {0, 3}};
    CHECK(smith_normal_form(b).diag == std::vector<Integer>{1, 6});
}

TEST_CASE("smith form against the determinantal divisor oracle")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t)
    {
        std::size_t const r = 1 + rng() % 4;
        std::size_t const c = 1 + rng() % 4;
        check_smith(random_matrix(rng, r, c, 9));
    }
}

TEST_CASE("determinant matches the permutation expansion")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t)
    {
        std::size_t const n = 1 + rng() % 5;
        auto m = random_matrix(rng, n, n, 20);
        std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = m(i, j);
        CHECK(determinant(m) == oracle::permutation_determinant(rows));
    }
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("big entries stay exact")
{
    Integer big = 1;
    for (int k = 0; k < 40; ++k)
        big *= 10;
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = big;
    CHECK(determinant(m) == big * big - 1);
    check_smith(m);
}

TEST_CASE("kernel basis spans the integer kernel")
{
    IntMatrix a{{2, 4, 6}, {1, 2, 3}};
    auto k = kernel_basis(a);
    CHECK(k.size() == 2);
    for (auto const& v : k)
        CHECK(a * std::span<Integer const>(v) == IntVector{0, 0});
    // (1, 1, -1) is in the kernel and must be an integer combination.
    auto basis = IntMatrix::from_columns(3, k);
    IntVector target{1, 1, -1};
    CHECK(express_in_lattice(basis, target).has_value());
}

TEST_CASE("lattice solver distinguishes lattice from span")
{
    IntMatrix b{{2}, {0}};
    LatticeSolver s(b);
    auto x = s.solve(IntVector{4, 0});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK_FALSE(s.solve(IntVector{3, 0}).has_value());
    CHECK_FALSE(s.solve(IntVector{0, 1}).has_value());
}

TEST_CASE("prime field elimination")
{
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(6));
    CHECK(residue(Integer(-1), 5) == 4);
    CHECK(inverse_mod(3, 7) * 3 % 7 == 1);

    IntMatrix a{{1, 1}, {1, 1}};
    auto f = field_rank_and_kernel(a, 2);
    CHECK(f.rank == 1);
    REQUIRE(f.kernel.size() == 1);
    CHECK(f.kernel[0] == std::vector<std::uint64_t>{1, 1});
    CHECK(field_rank_and_kernel(IntMatrix{{2}}, 2).rank == 0);
    CHECK(field_rank_and_kernel(IntMatrix{{2}}, 3).rank == 1);
    CHECK_THROWS_AS(field_rank_and_kernel(a, 6), std::exception);

    FieldSolver solver({{1, 0, 1}, {0, 1, 1}}, 3, 2);
    auto c = solver.solve(std::vector<std::uint64_t>{1, 1, 0});
    REQUIRE(c.has_value());
    CHECK(*c == std::vector<std::uint64_t>{1, 1});
    CHECK_FALSE(solver.solve(std::vector<std::uint64_t>{1, 0, 0}).has_value());
}

TEST_CASE("rank plus nullity over the integers and Z/p")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t)
    {
        auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 3);
        CHECK(smith_normal_form(m).rank() + kernel_basis(m).size() == m.cols());
        auto f = field_rank_and_kernel(m, 3);
        CHECK(f.rank + f.kernel.size() == m.cols());
    }
}
