#include "cubcoh/propcheck.hpp"

#include <doctest.h>

using namespace cubcoh;

TEST_CASE("configuration bounds")
{
    GenConfig cfg;
    CHECK_NOTHROW(cfg.check());
    cfg.fraction = 0;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg.fraction = 1;
    cfg.max_dim = 4;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg.max_dim = 3;
    cfg.factors = 4;
    CHECK_THROWS_AS(cfg.check(), Error);
}

TEST_CASE("random instances validate")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        GenConfig cfg;
        cfg.seed = seed;
        auto x = random_precubical(cfg);
        CHECK(validate(x).empty());
        CHECK(x.max_dim() <= 3);
        CHECK(x.total_cubes() > 0);
    }
}

TEST_CASE("generation is deterministic per seed")
{
    GenConfig cfg;
    cfg.seed = 42;
    auto a = random_precubical(cfg);
    auto b = random_precubical(cfg);
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(a == b);
    cfg.seed = 43;
    bool differs = false;
    for (std::uint64_t s = 43; s < 53 && !differs; ++s)
    {
        cfg.seed = s;
        differs = instance_digest(random_precubical(cfg)) != instance_digest(a);
    }
    CHECK(differs);
}

TEST_CASE("full-fraction subcomplex of the torus is the torus")
{
    Rng rng(0);
    auto t = torus();
    CHECK(random_subcomplex(t, 1.0, 3, rng) == t);
}

TEST_CASE("subcomplexes are face closed")
{
    Rng rng(4);
    auto x = builtin("torus3");
    for (int k = 0; k < 50; ++k)
        CHECK(validate(random_subcomplex(x, 0.3, 3, rng)).empty());
}

TEST_CASE("removing a cube")
{
    auto t = torus();
    auto s = without_cube(t, {2, 0});
    CHECK(s.cube_counts() == std::vector<std::size_t>{1, 2});
    CHECK_THROWS_AS(without_cube(t, {1, 0}), Error);
}

TEST_CASE("random cocycles are cocycles")
{
    Rng rng(8);
    auto x = builtin("torus3");
    for (auto const ring : {CoeffRing::integers(), CoeffRing::integers_mod(6)})
        for (std::size_t n = 0; n < 3; ++n)
            CHECK(coboundary(x, random_cocycle(x, n, ring, rng)).is_zero());
}

TEST_CASE("every property passes on random instances")
{
    for (auto const ring : {CoeffRing::integers(), CoeffRing::integers_mod(2), CoeffRing::integers_mod(6)})
        for (auto const& name : property_names())
        {
            GenConfig cfg;
            cfg.seed = 3;
            cfg.ring = ring;
            auto r = check(name, cfg, 30);
            CHECK_MESSAGE(r.failures.empty(), name << " over " << ring.name());
            CHECK(r.trials == 30);
            CHECK(r.name == name);
        }
}

TEST_CASE("leibniz on the torus")
{
    GenConfig cfg;
    auto t = torus();
    auto r = check("leibniz", cfg, 100, &t);
    CHECK(r.trials == 100);
    CHECK(r.failures.empty());
}

TEST_CASE("dd_zero on a vertex")
{
    GenConfig cfg;
    auto p = builtin("point");
    auto r = check("dd_zero", cfg, 1, &p);
    CHECK(r.failures.empty());
}

TEST_CASE("unknown properties and zero trials are errors")
{
    GenConfig cfg;
    CHECK_THROWS_AS(check("commutativity", cfg, 10), Error);
    CHECK_THROWS_AS(check("leibniz", cfg, 0), Error);
}

TEST_CASE("cochain anticommutativity fails on the standard square")
{
    auto x = standard_cube(2);
    auto const z = CoeffRing::integers();
    auto phi = dual_cochain(x, x.face({2, 0}, 2, 0), z);
    auto psi = dual_cochain(x, x.face({2, 0}, 1, 1), z);
    CHECK_FALSE(cochain_anticommutes(x, phi, psi));
    CHECK(cochain_anticommutes(x, phi, phi) == cup(x, phi, phi).is_zero());
}

TEST_CASE("class level reporter agrees on the torus")
{
    GenConfig cfg;
    auto t = torus();
    auto r = anticommutativity_report(cfg, 100, &t);
    CHECK(r.report_only);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.vacuous == 0);
}

TEST_CASE("class level reporter is vacuous on a cube")
{
    GenConfig cfg;
    auto c = standard_cube(3);
    auto r = anticommutativity_report(cfg, 20, &c);
    CHECK(r.vacuous == 20);
}

TEST_CASE("minimization keeps the failure and shrinks the instance")
{
    // Fails whenever any 2-cube is present.
    Evaluator eval = [](PrecubicalSet const& x, TrialInputs const&) -> std::optional<std::string> {
        if (x.count(2) > 0)
            return "has a square";
        return std::nullopt;
    };
    auto x = builtin("torus3");
    TrialInputs in;
    Rng rng(1);
    in.cochains.push_back(random_cochain(x, 2, CoeffRing::integers(), rng));
    auto [small, trimmed] = minimize(x, in, eval);
    CHECK(eval(small, trimmed).has_value());
    CHECK(small.count(3) == 0);
    CHECK(small.count(2) == 1);
    CHECK(validate(small).empty());
    REQUIRE(trimmed.cochains.size() == 1);
    CHECK(trimmed.cochains[0].values.size() == 1);
}

TEST_CASE("injected failures are reported with a counterexample")
{
    // A deliberately wrong identity: the cup product is commutative.
    Evaluator eval = [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
        if (cup(x, in.cochains[0], in.cochains[1]) == cup(x, in.cochains[1], in.cochains[0]))
            return std::nullopt;
        return "not commutative";
    };
    auto x = torus();
    auto const z = CoeffRing::integers();
    TrialInputs in{{dual_cochain(x, {1, 0}, z), dual_cochain(x, {1, 1}, z)}};
    REQUIRE(eval(x, in).has_value());
    auto [small, trimmed] = minimize(x, in, eval);
    CHECK(small == x);
    CHECK(eval(small, trimmed).has_value());
}
