#include "cubcoh/core.hpp"

#include "../oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cubcoh;

namespace
{

CubeId top_cube(PrecubicalSet const& x)
{
    return {static_cast<std::uint32_t>(x.max_dim()), 0};
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("standard cubes have 3^n cells split by dimension")
{
    for (std::size_t n = 0; n <= 4; ++n)
    {
        auto x = standard_cube(n);
        CHECK(validate(x).empty());
        std::size_t total = 0;
        for (std::size_t k = 0; k <= n; ++k)
        {
            // C(n,k) choices of free coordinates, 2^(n-k) fixed values.
            CHECK(x.count(k) == binomial(n, k) * (std::size_t{1} << (n - k)));
            total += x.count(k);
        }
        CHECK(x.total_cubes() == total);
    }
}

TEST_CASE("builtin shapes validate")
{
    for (auto const& name : builtin_names())
        if (name.find('<') == std::string::npos)
            CHECK_MESSAGE(validate(builtin(name)).empty(), name);
    CHECK(validate(builtin("cube5")).empty());
    CHECK_THROWS_AS(builtin("klein"), Error);
}

TEST_CASE("torus structure")
{
    auto t = torus();
    CHECK(t.cube_counts() == std::vector<std::size_t>{1, 2, 1});
    auto v = *t.find(2, "v");
    CHECK(t.label(t.face(v, 1, 0)) == "t1");
    CHECK(t.label(t.face(v, 1, 1)) == "t1");
    CHECK(t.label(t.face(v, 2, 0)) == "t2");
    CHECK(t.label(t.face(v, 2, 1)) == "t2");
}

TEST_CASE("validate reports a broken cubical identity")
{
    // A square whose faces disagree at a corner.
    PrecubicalSetBuilder b;
    auto p = b.add_cube(0, "p");
    auto q = b.add_cube(0, "q");
    auto a = b.add_cube(1, "a");
    auto c = b.add_cube(1, "c");
    b.set_face(a, 1, 0, p);
    b.set_face(a, 1, 1, p);
    b.set_face(c, 1, 0, q);
    b.set_face(c, 1, 1, q);
    auto s = b.add_cube(2, "s");
    std::pair<CubeId, CubeId> faces[] = {{a, a}, {c, c}};
    b.set_faces(s, faces);
    auto x = std::move(b).build();
    auto v = validate(x);
    REQUIRE_FALSE(v.empty());
    CHECK(std::all_of(v.begin(), v.end(), [](Violation const& w) { return w.kind == Violation::Kind::cubical_identity; }));
    CHECK_THROWS_AS(require_valid(x), Error);
}

TEST_CASE("validate reports a missing face")
{
    PrecubicalSetBuilder b;
    auto p = b.add_cube(0, "p");
    auto e = b.add_cube(1, "e");
    b.set_face(e, 1, 0, p);
    auto x = std::move(b).build();
    auto v = validate(x);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::missing_face);
    CHECK(v[0].describe(x).find("e") != std::string::npos);
    CHECK_THROWS_AS(x.face(e, 1, 1), Error);
}

TEST_CASE("builder rejects over-large and mislabelled input")
{
    PrecubicalSetBuilder b;
    CHECK_THROWS_AS(b.reserve_dim(kMaxDim + 1), Error);
    PrecubicalSetBuilder d;
    d.add_cube(0, "p");
    d.add_cube(0, "p");
    CHECK_THROWS_AS(std::move(d).build(), Error);
}

TEST_CASE("permutation signs of (G, K)")
{
    CHECK(make_subset(4, {2, 4}).sign == -1);
    CHECK(make_subset(4, {2, 4}).complement == std::vector<std::size_t>{1, 3});
    CHECK(make_subset(3, {1, 2, 3}).sign == 1);
    CHECK(make_subset(3, {}).sign == 1);
    CHECK(make_subset(2, {2}).sign == -1);
    CHECK_THROWS_AS(make_subset(3, {2, 1}), Error);
    CHECK_THROWS_AS(make_subset(3, {4}), Error);
    CHECK_THROWS_AS(subsets_with_sign(2, 3), Error);
}

TEST_CASE("swapping the blocks G and K multiplies the sign by (-1)^(p(n-p))")
{
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t p = 0; p <= n; ++p)
        {
            auto subsets = subsets_with_sign(n, p);
            CHECK(subsets.size() == binomial(n, p));
            long total = 0;
            for (auto const& g : subsets)
            {
                auto k = make_subset(n, g.complement);
                total += g.sign * k.sign;
            }
            long const expected = ((p * (n - p)) % 2 ? -1 : 1) * static_cast<long>(binomial(n, p));
            CHECK(total == expected);
        }
}

TEST_CASE("subsets come in lexicographic order")
{
    auto s = subsets_with_sign(4, 2);
    for (std::size_t k = 1; k < s.size(); ++k)
        CHECK(s[k - 1].subset < s[k].subset);
}

TEST_CASE("iterated faces agree with every elimination order")
{
    for (auto const& x : {standard_cube(3), standard_cube(4), builtin("torus3")})
    {
        auto u = top_cube(x);
        std::size_t const n = u.dim;
        for (std::size_t p = 0; p <= n; ++p)
            for (auto const& g : subsets_with_sign(n, p))
                for (Eps eps : {0, 1})
                {
                    auto const expected = iterated_face(x, u, g, eps);
                    CHECK(expected.dim == p);
                    auto order = g.complement;
                    do
                    {
                        CHECK(oracle::face_in_order(x, u, order, eps) == expected);
                    } while (std::next_permutation(order.begin(), order.end()));
                }
    }
}

TEST_CASE("iterated faces of the standard cube fix the dropped coordinates")
{
    auto x = standard_cube(3);
    auto u = top_cube(x);
    CHECK(x.label(iterated_face(x, u, std::vector<std::size_t>{2}, 0)) == "0*0");
    CHECK(x.label(iterated_face(x, u, std::vector<std::size_t>{1, 3}, 1)) == "*1*");
    CHECK(x.label(iterated_face(x, u, std::vector<std::size_t>{}, 1)) == "111");
    CHECK(iterated_face(x, u, std::vector<std::size_t>{1, 2, 3}, 0) == u);
}

TEST_CASE("interval tensor interval is the standard square")
{
    auto sq = tensor_product(interval(), interval());
    CHECK(validate(sq).empty());
    CHECK(oracle::isomorphic(sq, standard_cube(2)));
    CHECK_FALSE(oracle::isomorphic(torus(), standard_cube(2)));
}

TEST_CASE("tensor products multiply cell counts")
{
    auto t3 = builtin("torus3");
    CHECK(t3.cube_counts() == std::vector<std::size_t>{1, 3, 3, 1});
    auto c3 = tensor_product(standard_cube(1), standard_cube(2));
    CHECK(oracle::isomorphic(c3, standard_cube(3)));
}
