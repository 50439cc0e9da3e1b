// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "cubcoh/cohomology.hpp"
#include "cubcoh/propcheck.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cubcoh;

namespace
{

struct Outcome
{
    bool ok = true;
    std::string detail;

    void require(bool cond, std::string const& what)
    {
        if (!cond && ok)
        {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int number, std::string const& title, double budget_s, std::function<Outcome()> const& body)
{
    auto const start = std::chrono::steady_clock::now();
    Outcome out;
    try
    {
        out = body();
    }
    catch (std::exception const& e)
    {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= budget_s)
    {
        out.ok = false;
        out.detail = "over time budget";
    }
    if (!out.ok)
        ++failures;
    std::printf("%s criterion %d: %s (%.3f s, budget %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
                budget_s, out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

CubeId named(PrecubicalSet const& x, std::size_t dim, std::string const& label)
{
    auto id = x.find(dim, label);
    if (!id)
        throw Error("no cube " + label);
    return *id;
}

IntVector negated(CoeffRing const& ring, IntVector v)
{
    for (auto& e : v)
        e = ring.normalize(-e);
    return v;
}

bool is_unit_multiple(CoeffRing const& ring, IntVector const& v)
{
    return v.size() == 1 && ring.normalize(v[0] * v[0]) == 1;
}

/// Squares vanish, distinct products anticommute, the degree-2 products form
/// a basis of H^2 and, with three generators, the triple product generates
/// H^3.
void check_exterior(Outcome& out, PrecubicalSet const& x, RingTable const& t, std::size_t gens)
{
    CoeffRing const ring = t.groups[0].ring;
    out.require(t.groups.size() == gens + 1, "wrong top degree");
    if (!out.ok)
        return;
    out.require(t.unit == IntVector{1}, "unit class");
    std::size_t const pairs = gens * (gens - 1) / 2;
    out.require(t.groups[1].num_generators() == gens && t.groups[2].num_generators() == pairs, "generator counts");
    if (!out.ok)
        return;
    std::vector<IntVector> basis;
    for (std::size_t i = 0; i < gens; ++i)
    {
        out.require(t.product(1, i, 1, i) == IntVector(pairs, 0), "nonzero square");
        for (std::size_t j = i + 1; j < gens; ++j)
        {
            out.require(t.product(1, i, 1, j) == negated(ring, t.product(1, j, 1, i)), "products do not anticommute");
            basis.push_back(t.product(1, i, 1, j));
        }
    }
    auto const det = determinant(IntMatrix::from_columns(pairs, basis));
    out.require(ring.normalize(det * det) == 1, "degree-2 products are not a basis");
    if (gens == 3)
    {
        auto const& g = t.groups[1].generators;
        auto const triple = class_of(t.groups[3], cup(x, cup(x, g[0], g[1]), g[2]));
        out.require(is_unit_multiple(ring, triple), "triple product does not generate");
    }
}

} // namespace

int main()
{
    auto const z = CoeffRing::integers();

    run(1, "torus cochain complex 0 -> Z^1 -> Z^2 -> Z^1 -> 0 with zero coboundaries", 1, [&] {
        Outcome out;
        auto t = torus();
        out.require(t.cube_counts() == std::vector<std::size_t>{1, 2, 1}, "cochain ranks");
        auto d0 = delta_matrix(t, 0);
        auto d1 = delta_matrix(t, 1);
        out.require(d0.rows() == 2 && d0.cols() == 1 && d0.is_zero(), "delta^0");
        out.require(d1.rows() == 1 && d1.cols() == 2 && d1.is_zero(), "delta^1");
        return out;
    });

    run(2, "torus cohomology Z, Z^2, Z without torsion", 1, [&] {
        Outcome out;
        auto g = cohomology_groups(torus(), z);
        out.require(g.size() == 3, "degree count");
        if (!out.ok)
            return out;
        out.require(g[0].free_rank == 1 && g[1].free_rank == 2 && g[2].free_rank == 1, "ranks");
        for (auto const& h : g)
            out.require(h.torsion.empty(), "torsion present");
        return out;
    });

    run(3, "torus ring: opposite unit signs, zero squares, exterior table", 1, [&] {
        Outcome out;
        auto t = torus();
        auto const v = named(t, 2, "v").index;
        auto alpha = dual_cochain(t, named(t, 1, "t2"), z);
        auto beta = dual_cochain(t, named(t, 1, "t1"), z);
        Integer const ab = cup(t, alpha, beta).values[v];
        Integer const ba = cup(t, beta, alpha).values[v];
        out.require(abs(ab) == 1 && abs(ba) == 1 && ab == -ba, "products on the square");
        out.require(cup(t, alpha, alpha).is_zero() && cup(t, beta, beta).is_zero(), "cochain squares");
        check_exterior(out, t, ring_table(t, z), 2);
        std::printf("    (alpha^beta)(v) = %s, (beta^alpha)(v) = %s\n", ab.str().c_str(), ba.str().c_str());
        return out;
    });

    run(4, "three-torus Betti numbers 1,3,3,1 and exterior table on 3 generators", 5, [&] {
        Outcome out;
        auto x = builtin("torus3");
        auto table = ring_table(x, z);
        std::vector<std::size_t> betti;
        for (auto const& g : table.groups)
        {
            betti.push_back(g.free_rank);
            out.require(g.torsion.empty(), "torsion present");
        }
        out.require(betti == std::vector<std::size_t>{1, 3, 3, 1}, "Betti numbers");
        check_exterior(out, x, table, 3);
        return out;
    });

    run(5, "identity suite: 9 properties, seeds 0-4, 100 instances per seed, over Z, Z/2, Z/6", 60, [&] {
        Outcome out;
        std::size_t runs = 0;
        std::size_t instances = 0;
        for (auto const& ring : {z, CoeffRing::integers_mod(2), CoeffRing::integers_mod(6)})
            for (auto const& name : property_names())
            {
                std::size_t total = 0;
                for (std::uint64_t seed = 0; seed <= 4; ++seed)
                {
                    GenConfig cfg;
                    cfg.seed = seed;
                    cfg.max_dim = 3;
                    cfg.ring = ring;
                    auto r = check(name, cfg, 100);
                    total += r.trials;
                    ++runs;
                    if (!r.failures.empty())
                    {
                        std::ostringstream s;
                        s << name << " over " << ring.name() << " seed " << seed << ": " << r.failures.front().message;
                        out.require(false, s.str());
                    }
                }
                out.require(total >= 100, "too few instances");
                instances += total;
            }
        std::printf("    %zu runs, %zu instances\n", runs, instances);
        return out;
    });

    run(6, "Smith normal form on 2000 random matrices up to 4x4, entries in [-9,9]", 30, [&] {
        Outcome out;
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<int> entry(-9, 9);
        std::uniform_int_distribution<std::size_t> size(1, 4);
        for (int t = 0; t < 2000 && out.ok; ++t)
        {
            IntMatrix a(size(rng), size(rng));
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c)
                    a(r, c) = entry(rng);
            auto f = smith_normal_form(a);
            out.require(f.U * a * f.V == f.S, "U A V != S for " + a.str());
            out.require(abs(determinant(f.U)) == 1 && abs(determinant(f.V)) == 1, "transform not unimodular");
            for (std::size_t k = 1; k < f.diag.size(); ++k)
                out.require(f.diag[k] % f.diag[k - 1] == 0, "divisibility chain");
            out.require(f.diag == oracle::invariant_factors(a), "invariant factors differ from minors for " + a.str());
        }
        return out;
    });

    run(7, "cochain anticommutativity fails on the square; torus classes agree 100%", 5, [&] {
        Outcome out;
        auto x = standard_cube(2);
        auto phi = dual_cochain(x, x.face({2, 0}, 2, 0), z);
        auto psi = dual_cochain(x, x.face({2, 0}, 1, 1), z);
        out.require(cup(x, phi, psi) != -cup(x, psi, phi), "counterexample not reproduced");
        out.require(!cochain_anticommutes(x, phi, psi), "reporter missed the counterexample");
        GenConfig cfg;
        auto t = torus();
        auto r = anticommutativity_report(cfg, 100, &t);
        out.require(r.vacuous == 0 && r.failures.empty(), "torus agreement below 100%");
        std::printf("    square: phi^psi = %s, psi^phi = %s; torus agreement %zu/%zu\n",
                    cup(x, phi, psi).values[0].str().c_str(), cup(x, psi, phi).values[0].str().c_str(),
                    r.trials - r.failures.size(), r.trials);
        return out;
    });

    return failures == 0 ? 0 : 1;
}
