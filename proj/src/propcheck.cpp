#include "cubcoh/propcheck.hpp"

#include "cubcoh/cohomology.hpp"
#include "cubcoh/io.hpp"

#include <chrono>
#include <cstdio>
#include <map>

namespace cubcoh
{

void GenConfig::check() const
{
    if (max_dim > 3)
        throw Error("max_dim is capped at 3");
    if (factors < 1 || factors > 3)
        throw Error("factors must be between 1 and 3");
    if (vertices < 1)
        throw Error("each factor needs at least one vertex");
    if (!(fraction > 0.0 && fraction <= 1.0))
        throw Error("fraction must lie in (0, 1]");
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace
{

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

CubeId cube(std::size_t dim, std::size_t index)
{
    return CubeId{static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(index)};
}

/// Sub-collection given by keep flags (assumed face-closed).
PrecubicalSet restrict_to(PrecubicalSet const& x, std::vector<std::vector<char>> const& keep)
{
    std::vector<std::vector<std::uint32_t>> renumber(x.num_dims());
    PrecubicalSetBuilder b;
    for (std::size_t d = 0; d < x.num_dims(); ++d)
    {
        renumber[d].assign(x.count(d), 0);
        for (std::size_t k = 0; k < x.count(d); ++k)
        {
            if (!keep[d][k])
                continue;
            CubeId const u = b.add_cube(d, x.label(cube(d, k)));
            renumber[d][k] = u.index;
            for (std::size_t i = 1; i <= d; ++i)
                for (Eps e : {0, 1})
                {
                    CubeId const f = x.face(cube(d, k), i, e);
                    b.set_face(u, i, e, cube(d - 1, renumber[d - 1][f.index]));
                }
        }
    }
    return std::move(b).build();
}

} // namespace

PrecubicalSet random_graph(std::size_t vertices, std::size_t edges, Rng& rng)
{
    PrecubicalSetBuilder b;
    for (std::size_t v = 0; v < vertices; ++v)
        b.add_cube(0, "v" + std::to_string(v));
    for (std::size_t e = 0; e < edges; ++e)
    {
        CubeId const u = b.add_cube(1, "e" + std::to_string(e));
        b.set_face(u, 1, 0, cube(0, uniform(rng, 0, vertices - 1)));
        b.set_face(u, 1, 1, cube(0, uniform(rng, 0, vertices - 1)));
    }
    return std::move(b).build();
}

PrecubicalSet random_subcomplex(PrecubicalSet const& x, double fraction, std::size_t max_dim, Rng& rng)
{
    std::size_t const top = std::min<std::size_t>(x.num_dims(), max_dim + 1);
    std::vector<std::vector<char>> keep(x.num_dims());
    std::bernoulli_distribution coin(fraction);
    for (std::size_t d = 0; d < x.num_dims(); ++d)
    {
        keep[d].assign(x.count(d), 0);
        if (d >= top)
            continue;
        for (auto& k : keep[d])
            k = coin(rng) ? 1 : 0;
    }
    // Keep at least one cube of the highest admissible dimension.
    if (top > 0 && x.count(top - 1) > 0)
        keep[top - 1][uniform(rng, 0, x.count(top - 1) - 1)] = 1;
    for (std::size_t d = top; d-- > 1;)
        for (std::size_t k = 0; k < x.count(d); ++k)
            if (keep[d][k])
                for (std::size_t i = 1; i <= d; ++i)
                    for (Eps e : {0, 1})
                        keep[d - 1][x.face(cube(d, k), i, e).index] = 1;
    return restrict_to(x, keep);
}

PrecubicalSet random_precubical(GenConfig const& cfg)
{
    cfg.check();
    Rng rng(cfg.seed);
    PrecubicalSet x;
    for (std::size_t f = 0; f < cfg.factors; ++f)
    {
        PrecubicalSet g = random_graph(uniform(rng, 1, cfg.vertices), uniform(rng, 1, std::max<std::size_t>(cfg.edges, 1)), rng);
        x = f == 0 ? std::move(g) : tensor_product(x, g);
    }
    return random_subcomplex(x, cfg.fraction, cfg.max_dim, rng);
}

PrecubicalSet without_cube(PrecubicalSet const& x, CubeId u)
{
    if (!x.contains(u))
        throw Error("cube " + to_string(u) + " does not exist");
    for (std::size_t k = 0; k < x.count(u.dim + 1); ++k)
        for (std::size_t i = 1; i <= u.dim + 1; ++i)
            for (Eps e : {0, 1})
                if (x.face(cube(u.dim + 1, k), i, e) == u)
                    throw Error("cube " + x.label(u) + " is a face of another cube");
    std::vector<std::vector<char>> keep(x.num_dims());
    for (std::size_t d = 0; d < x.num_dims(); ++d)
        keep[d].assign(x.count(d), 1);
    keep[u.dim][u.index] = 0;
    return restrict_to(x, keep);
}

std::string instance_digest(PrecubicalSet const& x)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b)
        {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(x.num_dims());
    for (std::size_t d = 0; d < x.num_dims(); ++d)
    {
        mix(x.count(d));
        for (std::size_t k = 0; k < x.count(d); ++k)
            for (std::size_t i = 1; i <= d; ++i)
                for (Eps e : {0, 1})
                    mix(x.face(cube(d, k), i, e).index);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Cochain random_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, Rng& rng)
{
    Cochain c = zero_cochain(x, dim, ring);
    for (auto& v : c.values)
    {
        if (ring.is_integers())
            v = static_cast<long long>(uniform(rng, 0, 6)) - 3;
        else
            v = static_cast<unsigned long long>(uniform(rng, 0, ring.modulus() - 1));
    }
    return c;
}

Cochain random_cocycle(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, Rng& rng)
{
    Cochain z = zero_cochain(x, dim, ring);
    for (auto const& v : kernel_basis(delta_matrix(x, dim)))
    {
        Integer const coef = static_cast<long long>(uniform(rng, 0, 4)) - 2;
        for (std::size_t k = 0; k < v.size(); ++k)
            z.values[k] += coef * v[k];
    }
    for (auto& v : z.values)
        v = ring.normalize(v);
    if (dim > 0)
        z = z + coboundary(x, random_cochain(x, dim - 1, ring, rng));
    return z;
}

bool cochain_anticommutes(PrecubicalSet const& x, Cochain const& phi, Cochain const& psi)
{
    Cochain const ab = cup(x, phi, psi);
    Cochain ba = cup(x, psi, phi);
    if ((phi.dim * psi.dim) % 2 == 1)
        ba = -ba;
    return ab == ba;
}

// --- properties -------------------------------------------------------------

namespace
{

struct Property
{
    /// Draws inputs; returns nullopt when the instance has nothing to check.
    std::function<std::optional<TrialInputs>(PrecubicalSet const&, CoeffRing const&, Rng&)> generate;
    Evaluator evaluate;
    bool report_only = false;
};

std::size_t top_dim(PrecubicalSet const& x)
{
    return x.num_dims() == 0 ? 0 : x.num_dims() - 1;
}

/// Random (p, q) with p + q + extra <= top.
std::optional<std::pair<std::size_t, std::size_t>> split(PrecubicalSet const& x, std::size_t extra, Rng& rng)
{
    if (x.num_dims() == 0 || top_dim(x) < extra)
        return std::nullopt;
    std::size_t const total = uniform(rng, 0, top_dim(x) - extra);
    std::size_t const p = uniform(rng, 0, total);
    return std::make_pair(p, total - p);
}

Chain as_chain(Cochain const& c)
{
    Chain out;
    out.dim = c.dim;
    for (std::size_t k = 0; k < c.values.size(); ++k)
        out.add(static_cast<std::uint32_t>(k), c.values[k]);
    return out;
}

std::optional<std::string> mismatch(char const* what, Cochain const& lhs, Cochain const& rhs)
{
    if (lhs == rhs)
        return std::nullopt;
    return std::string(what) + " differs in degree " + std::to_string(lhs.dim);
}

std::map<std::string, Property> const& registry()
{
    static std::map<std::string, Property> const props = [] {
        std::map<std::string, Property> m;
        CoeffRing const zz = CoeffRing::integers();

        m["dd_zero"] = Property{
            [zz](PrecubicalSet const& x, CoeffRing const&, Rng& rng) -> std::optional<TrialInputs> {
                if (x.num_dims() < 2)
                    return std::nullopt;
                TrialInputs in;
                std::size_t const top = top_dim(x);
                std::size_t p = 0, q = 0;
                while (p + q < 2)
                {
                    p = uniform(rng, 0, top);
                    q = uniform(rng, 0, top);
                }
                in.cochains.push_back(random_cochain(x, p, zz, rng));
                in.cochains.push_back(random_cochain(x, q, zz, rng));
                if (top >= 2)
                    in.cochains.push_back(random_cochain(x, uniform(rng, 2, top), zz, rng));
                return in;
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const a = in.cochains[0];
                Cochain const b = in.cochains[1];
                TensorChain t;
                t.dim = a.dim + b.dim;
                for (std::size_t i = 0; i < a.values.size(); ++i)
                    for (std::size_t j = 0; j < b.values.size(); ++j)
                        t.add(cube(a.dim, i), cube(b.dim, j), a.values[i] * b.values[j]);
                if (!tensor_boundary(x, tensor_boundary(x, t)).is_zero())
                    return std::string("tensor boundary squared is nonzero");
                if (in.cochains.size() > 2)
                {
                    Chain const c = as_chain(in.cochains[2]);
                    if (!boundary(x, boundary(x, c)).is_zero())
                        return "boundary squared is nonzero in degree " + std::to_string(c.dim);
                }
                return std::nullopt;
            }};

        m["delta_delta_zero"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                if (x.num_dims() < 3)
                    return std::nullopt;
                return TrialInputs{{random_cochain(x, uniform(rng, 0, top_dim(x) - 2), ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const phi = in.cochains[0];
                if (!coboundary(x, coboundary(x, phi)).is_zero())
                    return "coboundary squared is nonzero on a degree " + std::to_string(phi.dim) + " cochain";
                return std::nullopt;
            }};

        m["diagonal_chain_map"] = Property{
            [zz](PrecubicalSet const& x, CoeffRing const&, Rng& rng) -> std::optional<TrialInputs> {
                if (x.num_dims() < 2)
                    return std::nullopt;
                return TrialInputs{{random_cochain(x, uniform(rng, 1, top_dim(x)), zz, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Chain const c = as_chain(in.cochains[0]);
                if (tensor_boundary(x, diagonal(x, c)) != diagonal(x, boundary(x, c)))
                    return "diagonal does not commute with the boundary in degree " + std::to_string(c.dim);
                return std::nullopt;
            }};

        m["leibniz"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                auto const pq = split(x, 1, rng);
                if (!pq)
                    return std::nullopt;
                return TrialInputs{{random_cochain(x, pq->first, ring, rng), random_cochain(x, pq->second, ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const phi = in.cochains[0];
                Cochain const psi = in.cochains[1];
                Cochain const lhs = coboundary(x, cup(x, phi, psi));
                Cochain rhs2 = cup(x, phi, coboundary(x, psi));
                if (phi.dim % 2 == 1)
                    rhs2 = -rhs2;
                return mismatch("d(a^b) vs da^b + (-1)^p a^db", lhs, cup(x, coboundary(x, phi), psi) + rhs2);
            }};

        m["associativity"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                auto const pq = split(x, 0, rng);
                if (!pq)
                    return std::nullopt;
                std::size_t const r = uniform(rng, 0, top_dim(x) - pq->first - pq->second);
                return TrialInputs{{random_cochain(x, pq->first, ring, rng), random_cochain(x, pq->second, ring, rng),
                                    random_cochain(x, r, ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const a = in.cochains[0];
                Cochain const b = in.cochains[1];
                Cochain const c = in.cochains[2];
                return mismatch("(a^b)^c vs a^(b^c)", cup(x, cup(x, a, b), c), cup(x, a, cup(x, b, c)));
            }};

        m["distributivity"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                auto const pq = split(x, 0, rng);
                if (!pq)
                    return std::nullopt;
                auto const [p, q] = *pq;
                return TrialInputs{{random_cochain(x, p, ring, rng), random_cochain(x, p, ring, rng),
                                    random_cochain(x, q, ring, rng), random_cochain(x, q, ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const a1 = in.cochains[0];
                Cochain const a2 = in.cochains[1];
                Cochain const b1 = in.cochains[2];
                Cochain const b2 = in.cochains[3];
                if (auto m1 = mismatch("(a1+a2)^b vs a1^b + a2^b", cup(x, a1 + a2, b1), cup(x, a1, b1) + cup(x, a2, b1)))
                    return m1;
                return mismatch("a^(b1+b2) vs a^b1 + a^b2", cup(x, a1, b1 + b2), cup(x, a1, b1) + cup(x, a1, b2));
            }};

        m["unit"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                if (x.num_dims() == 0)
                    return std::nullopt;
                return TrialInputs{{random_cochain(x, uniform(rng, 0, top_dim(x)), ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const xi = in.cochains[0];
                Cochain const one = unit_cochain(x, xi.ring);
                if (auto m1 = mismatch("unit^x vs x", cup(x, one, xi), xi))
                    return m1;
                return mismatch("x^unit vs x", cup(x, xi, one), xi);
            }};

        m["cocycle_closure"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                auto const pq = split(x, 1, rng);
                if (!pq)
                    return std::nullopt;
                auto const rs = split(x, 1, rng);
                TrialInputs in;
                in.cochains.push_back(random_cocycle(x, pq->first, ring, rng));
                in.cochains.push_back(random_cocycle(x, pq->second, ring, rng));
                in.cochains.push_back(random_cochain(x, rs->first, ring, rng));
                in.cochains.push_back(random_cocycle(x, rs->second, ring, rng));
                return in;
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                Cochain const phi = in.cochains[0];
                Cochain const psi = in.cochains[1];
                Cochain const theta = in.cochains[2];
                Cochain const zeta = in.cochains[3];
                for (Cochain const* z : {&phi, &psi, &zeta})
                    if (!coboundary(x, *z).is_zero())
                        return std::string("generated input is not a cocycle");
                if (!coboundary(x, cup(x, phi, psi)).is_zero())
                    return std::string("product of cocycles is not a cocycle");
                return mismatch("d(t^z) vs dt^z", coboundary(x, cup(x, theta, zeta)), cup(x, coboundary(x, theta), zeta));
            }};

        m["prop21_identities"] = Property{
            [](PrecubicalSet const& x, CoeffRing const&, Rng&) -> std::optional<TrialInputs> {
                if (x.num_dims() < 2)
                    return std::nullopt;
                return TrialInputs{};
            },
            [](PrecubicalSet const& x, TrialInputs const&) -> std::optional<std::string> {
                for (std::size_t n = 1; n < x.num_dims(); ++n)
                    for (std::size_t k = 0; k < x.count(n); ++k)
                    {
                        CubeId const u = cube(n, k);
                        for (std::size_t p = 0; p <= n; ++p)
                            for (auto const& g : subsets_with_sign(n, p))
                                for (Eps e : {0, 1})
                                {
                                    auto const& gs = g.subset;
                                    for (std::size_t mu = 1; mu <= p; ++mu)
                                    {
                                        // Faces of faces: G with g_mu removed, later entries shifted down.
                                        std::vector<std::size_t> tilde, hat;
                                        for (std::size_t r = 0; r < p; ++r)
                                        {
                                            if (r + 1 == mu)
                                                continue;
                                            hat.push_back(gs[r]);
                                            tilde.push_back(r + 1 < mu ? gs[r] : gs[r] - 1);
                                        }
                                        for (Eps eta : {0, 1})
                                        {
                                            CubeId const lhs = x.face(iterated_face(x, u, gs, eta), mu, e);
                                            CubeId const rhs = iterated_face(x, x.face(u, gs[mu - 1], e), tilde, eta);
                                            if (lhs != rhs)
                                                return "identity (1) fails on " + x.label(u);
                                        }
                                        if (x.face(iterated_face(x, u, gs, e), mu, e) != iterated_face(x, u, hat, e))
                                            return "identity (2) fails on " + x.label(u);
                                    }
                                    for (std::size_t j : g.complement)
                                    {
                                        std::vector<std::size_t> shifted;
                                        for (std::size_t v : gs)
                                            shifted.push_back(v < j ? v : v - 1);
                                        if (iterated_face(x, u, gs, e) != iterated_face(x, x.face(u, j, e), shifted, e))
                                            return "identity (3) fails on " + x.label(u);
                                    }
                                }
                    }
                return std::nullopt;
            }};

        m["anticommutativity_cochain"] = Property{
            [](PrecubicalSet const& x, CoeffRing const& ring, Rng& rng) -> std::optional<TrialInputs> {
                auto const pq = split(x, 0, rng);
                if (!pq)
                    return std::nullopt;
                return TrialInputs{{random_cochain(x, pq->first, ring, rng), random_cochain(x, pq->second, ring, rng)}};
            },
            [](PrecubicalSet const& x, TrialInputs const& in) -> std::optional<std::string> {
                if (cochain_anticommutes(x, in.cochains[0], in.cochains[1]))
                    return std::nullopt;
                return "a^b != (-1)^pq b^a for degrees " + std::to_string(in.cochains[0].dim) + ", "
                       + std::to_string(in.cochains[1].dim);
            },
            true};
        return m;
    }();
    return props;
}

double elapsed_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<std::string> property_names()
{
    return {"dd_zero",        "delta_delta_zero", "diagonal_chain_map", "leibniz",          "associativity",
            "distributivity", "unit",             "cocycle_closure",    "prop21_identities"};
}

std::vector<std::string> reporter_names()
{
    return {"anticommutativity_cochain", "anticommutativity"};
}

std::pair<PrecubicalSet, TrialInputs> minimize(PrecubicalSet x, TrialInputs inputs, Evaluator const& eval)
{
    bool progress = true;
    while (progress && x.num_dims() > 0)
    {
        progress = false;
        std::size_t const top = x.num_dims() - 1;
        for (std::size_t k = x.count(top); k-- > 0;)
        {
            PrecubicalSet smaller = without_cube(x, cube(top, k));
            TrialInputs trimmed = inputs;
            for (auto& c : trimmed.cochains)
                if (c.dim == top)
                    c.values.erase(c.values.begin() + static_cast<std::ptrdiff_t>(k));
            if (eval(smaller, trimmed))
            {
                x = std::move(smaller);
                inputs = std::move(trimmed);
                progress = true;
                break;
            }
        }
    }
    return {std::move(x), std::move(inputs)};
}

PropertyReport check(std::string const& property, GenConfig const& cfg, std::size_t trials, PrecubicalSet const* fixed)
{
    if (property == "anticommutativity")
        return anticommutativity_report(cfg, trials, fixed);
    auto const& props = registry();
    auto it = props.find(property);
    if (it == props.end())
        throw Error("unknown property '" + property + "'");
    if (trials < 1)
        throw Error("at least one trial is required");
    cfg.check();
    if (fixed)
        require_valid(*fixed);

    Property const& prop = it->second;
    PropertyReport report;
    report.name = property;
    report.ring = cfg.ring.name();
    report.report_only = prop.report_only;
    auto const start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < trials; ++t)
    {
        std::uint64_t const seed = trial_seed(cfg.seed, t);
        GenConfig local = cfg;
        local.seed = seed;
        PrecubicalSet const x = fixed ? *fixed : random_precubical(local);
        Rng rng(trial_seed(seed, 0xc0c4a1));
        ++report.trials;
        auto inputs = prop.generate(x, cfg.ring, rng);
        if (!inputs)
        {
            ++report.vacuous;
            continue;
        }
        auto failure = prop.evaluate(x, *inputs);
        if (!failure)
            continue;
        Counterexample ce;
        ce.trial = t;
        ce.seed = seed;
        ce.digest = instance_digest(x);
        if (prop.report_only)
        {
            ce.message = *failure;
            ce.instance = serialize_document(x);
            ce.inputs = std::move(*inputs);
        }
        else
        {
            auto [small, small_inputs] = minimize(x, std::move(*inputs), prop.evaluate);
            ce.message = prop.evaluate(small, small_inputs).value_or(*failure);
            ce.instance = serialize_document(small);
            ce.inputs = std::move(small_inputs);
        }
        report.failures.push_back(std::move(ce));
    }
    report.elapsed_ms = elapsed_since(start);
    return report;
}

PropertyReport anticommutativity_report(GenConfig const& cfg, std::size_t trials, PrecubicalSet const* fixed)
{
    if (trials < 1)
        throw Error("at least one trial is required");
    cfg.check();
    if (!cfg.ring.commutative())
        throw Error("anticommutativity needs a commutative ring");
    PropertyReport report;
    report.name = "anticommutativity";
    report.ring = cfg.ring.name();
    report.report_only = true;
    auto const start = std::chrono::steady_clock::now();

    std::optional<std::vector<CohomologyGroup>> fixed_groups;
    if (fixed)
        fixed_groups = cohomology_groups(*fixed, cfg.ring);

    for (std::size_t t = 0; t < trials; ++t)
    {
        std::uint64_t const seed = trial_seed(cfg.seed, t);
        GenConfig local = cfg;
        local.seed = seed;
        PrecubicalSet const x = fixed ? *fixed : random_precubical(local);
        auto const groups = fixed ? *fixed_groups : cohomology_groups(x, cfg.ring);
        Rng rng(trial_seed(seed, 0xa7c0));
        ++report.trials;

        struct Pick
        {
            std::size_t p, i, q, j;
        };
        std::vector<Pick> candidates;
        // Degree 0 pairs commute trivially and are left out.
        for (std::size_t p = 1; p < groups.size(); ++p)
            for (std::size_t q = 1; p + q < groups.size(); ++q)
                for (std::size_t i = 0; i < groups[p].num_generators(); ++i)
                    for (std::size_t j = 0; j < groups[q].num_generators(); ++j)
                        candidates.push_back({p, i, q, j});
        if (candidates.empty())
        {
            ++report.vacuous;
            continue;
        }
        Pick const pick = candidates[uniform(rng, 0, candidates.size() - 1)];
        auto const& a = groups[pick.p].generators[pick.i];
        auto const& b = groups[pick.q].generators[pick.j];
        auto const& target = groups[pick.p + pick.q];
        IntVector const ab = class_of(target, cup(x, a, b));
        IntVector ba = class_of(target, cup(x, b, a));
        if ((pick.p * pick.q) % 2 == 1)
            for (std::size_t k = 0; k < ba.size(); ++k)
            {
                ba[k] = -ba[k];
                Integer const m = target.order(k);
                if (!m.is_zero())
                {
                    ba[k] %= m;
                    if (ba[k] < 0)
                        ba[k] += m;
                }
            }
        if (ab == ba)
            continue;
        Counterexample ce;
        ce.trial = t;
        ce.seed = seed;
        ce.digest = instance_digest(x);
        ce.message = "[" + generator_name(pick.p, pick.i) + "^" + generator_name(pick.q, pick.j) + "] = "
                     + class_string(target, ab) + " but (-1)^pq [" + generator_name(pick.q, pick.j) + "^"
                     + generator_name(pick.p, pick.i) + "] = " + class_string(target, ba);
        ce.instance = serialize_document(x);
        report.failures.push_back(std::move(ce));
    }
    report.elapsed_ms = elapsed_since(start);
    return report;
}

} // namespace cubcoh
