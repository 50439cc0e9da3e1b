#include "cubcoh/cohomology.hpp"

#include <future>

namespace cubcoh
{

namespace detail
{

struct Reduction
{
    // Integer coefficients: the cocycle lattice and the map onto coordinates.
    std::optional<LatticeSolver> kernel;
    std::vector<IntVector> coordinate_rows;  // one row per generator, over kernel coordinates
    std::vector<Integer> moduli;             // 0 for free coordinates

    // Z/p coefficients: coordinates in [image basis | generators].
    std::optional<FieldSolver> field;
    std::size_t image_rank = 0;
    std::uint64_t p = 0;
};

} // namespace detail

IntMatrix delta_matrix(PrecubicalSet const& x, std::size_t n, CoeffRing const& ring)
{
    IntMatrix m(x.count(n + 1), x.count(n));
    for (std::uint32_t k = 0; k < x.count(n + 1); ++k)
    {
        CubeId const u{static_cast<std::uint32_t>(n + 1), k};
        for (std::size_t i = 1; i <= n + 1; ++i)
        {
            int const s = i % 2 == 0 ? 1 : -1;
            m(k, x.face(u, i, 1).index) += s;
            m(k, x.face(u, i, 0).index) -= s;
        }
    }
    if (!ring.is_integers())
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = ring.normalize(m(r, c));
    return m;
}

Integer CohomologyGroup::order(std::size_t k) const
{
    if (k >= generators.size())
        throw Error("generator index out of range");
    if (!ring.is_integers())
        return ring.modulus();
    if (k < free_rank)
        return 0;
    return torsion[k - free_rank];
}

std::string CohomologyGroup::str() const
{
    if (generators.empty())
        return "0";
    if (!ring.is_integers())
    {
        std::string const base = "Z/" + std::to_string(ring.modulus());
        return free_rank == 1 ? base : "(" + base + ")^" + std::to_string(free_rank);
    }
    std::string out;
    if (free_rank > 0)
        out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (auto const& d : torsion)
    {
        if (!out.empty())
            out += " ⊕ ";
        out += "Z/" + d.str();
    }
    return out;
}

std::string generator_name(std::size_t degree, std::size_t k)
{
    return "a" + std::to_string(degree) + "_" + std::to_string(k);
}

namespace
{

// Flips g so its first nonzero value is positive; returns the applied sign.
int normalize_sign(Cochain& g)
{
    for (auto const& v : g.values)
    {
        if (v.is_zero())
            continue;
        if (v < 0)
        {
            for (auto& w : g.values)
                w = -w;
            return -1;
        }
        return 1;
    }
    return 1;
}

CohomologyGroup integral_group(PrecubicalSet const& x, std::size_t n)
{
    CoeffRing const ring = CoeffRing::integers();
    std::size_t const size = x.count(n);

    auto const cocycles = kernel_basis(delta_matrix(x, n, ring));
    IntMatrix const basis = IntMatrix::from_columns(size, cocycles);
    auto red = std::make_shared<detail::Reduction>();
    red->kernel.emplace(basis);

    // Coboundaries expressed in cocycle coordinates.
    std::vector<IntVector> image_coords;
    if (n > 0)
    {
        IntMatrix const d = delta_matrix(x, n - 1, ring);
        for (std::size_t c = 0; c < d.cols(); ++c)
        {
            auto const col = d.column(c);
            auto coords = red->kernel->solve(col);
            if (!coords)
                throw Error("internal error: coboundary outside the cocycle lattice");
            image_coords.push_back(std::move(*coords));
        }
    }
    IntMatrix const rel = IntMatrix::from_columns(cocycles.size(), image_coords);
    SmithForm const snf = smith_normal_form(rel);

    CohomologyGroup g;
    g.dim = n;
    g.ring = ring;

    auto add_generator = [&](std::size_t k, Integer const& modulus) {
        IntVector const lifted = basis * std::span<Integer const>(snf.U_inv.column(k));
        Cochain gen{n, ring, lifted};
        int const s = normalize_sign(gen);
        IntVector row = snf.U.row(k);
        if (s < 0)
            for (auto& v : row)
                v = -v;
        g.generators.push_back(std::move(gen));
        red->coordinate_rows.push_back(std::move(row));
        red->moduli.push_back(modulus);
    };

    for (std::size_t k = snf.rank(); k < cocycles.size(); ++k)
        add_generator(k, 0);
    g.free_rank = cocycles.size() - snf.rank();
    for (std::size_t k = 0; k < snf.rank(); ++k)
    {
        if (snf.diag[k] == 1)
            continue;
        add_generator(k, snf.diag[k]);
        g.torsion.push_back(snf.diag[k]);
    }
    g.reduction = std::move(red);
    return g;
}

using Residues = std::vector<std::uint64_t>;

// Incremental echelon basis used to pick independent vectors mod p.
class EchelonSpan
{
public:
    explicit EchelonSpan(std::uint64_t p) : p_(p) {}

    bool insert(Residues v)
    {
        for (std::size_t k = 0; k < rows_.size(); ++k)
        {
            std::uint64_t const f = v[pivots_[k]];
            if (f == 0)
                continue;
            for (std::size_t c = 0; c < v.size(); ++c)
                v[c] = (v[c] + p_ - static_cast<std::uint64_t>(static_cast<unsigned __int128>(f) * rows_[k][c] % p_)) % p_;
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv] == 0)
            ++piv;
        if (piv == v.size())
            return false;
        std::uint64_t const inv = inverse_mod(v[piv], p_);
        for (auto& e : v)
            e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(e) * inv % p_);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    std::uint64_t p_;
    std::vector<Residues> rows_;
    std::vector<std::size_t> pivots_;
};

CohomologyGroup field_group(PrecubicalSet const& x, std::size_t n, CoeffRing const& ring)
{
    std::uint64_t const p = ring.modulus();
    std::size_t const size = x.count(n);
    auto const cocycles = field_rank_and_kernel(delta_matrix(x, n, ring), p).kernel;

    EchelonSpan span(p);
    std::vector<Residues> basis;
    if (n > 0)
    {
        IntMatrix const d = delta_matrix(x, n - 1, ring);
        for (std::size_t c = 0; c < d.cols(); ++c)
        {
            Residues col(size);
            for (std::size_t r = 0; r < size; ++r)
                col[r] = residue(d(r, c), p);
            if (span.insert(col))
                basis.push_back(std::move(col));
        }
    }
    auto red = std::make_shared<detail::Reduction>();
    red->p = p;
    red->image_rank = basis.size();

    CohomologyGroup g;
    g.dim = n;
    g.ring = ring;
    for (auto const& z : cocycles)
    {
        if (!span.insert(z))
            continue;
        // Scale so the first nonzero value is 1.
        Residues v = z;
        std::uint64_t lead = 0;
        for (auto e : v)
            if (e != 0)
            {
                lead = e;
                break;
            }
        std::uint64_t const inv = inverse_mod(lead, p);
        for (auto& e : v)
            e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(e) * inv % p);
        Cochain gen{n, ring, std::vector<Integer>(v.begin(), v.end())};
        g.generators.push_back(std::move(gen));
        basis.push_back(std::move(v));
    }
    g.free_rank = g.generators.size();
    red->field.emplace(std::move(basis), size, p);
    g.reduction = std::move(red);
    return g;
}

} // namespace

std::vector<CohomologyGroup> cohomology_groups(PrecubicalSet const& x, CoeffRing const& ring)
{
    if (!ring.is_integers() && !ring.is_prime_field())
        throw Error("cohomology groups need Z or Z/p with p prime; " + ring.name()
                    + " has a composite modulus (cup products and coboundaries still work)");
    require_valid(x);

    // Degrees are independent; each task only reads x.
    std::vector<std::future<CohomologyGroup>> tasks;
    for (std::size_t n = 0; n < x.num_dims(); ++n)
        tasks.push_back(std::async(std::launch::async, [&x, &ring, n] {
            return ring.is_integers() ? integral_group(x, n) : field_group(x, n, ring);
        }));
    std::vector<CohomologyGroup> out;
    out.reserve(tasks.size());
    for (auto& t : tasks)
        out.push_back(t.get());
    return out;
}

IntVector class_of(CohomologyGroup const& group, Cochain const& z)
{
    if (!(z.ring == group.ring))
        throw Error("coefficient ring mismatch: " + z.ring.name() + " vs " + group.ring.name());
    if (z.dim != group.dim)
        throw Error("cochain of dimension " + std::to_string(z.dim) + " reduced in degree "
                    + std::to_string(group.dim));
    auto const& red = *group.reduction;
    if (red.kernel)
    {
        if (z.values.size() != red.kernel->rows())
            throw Error("cochain size does not match the group");
        auto const coords = red.kernel->solve(z.values);
        if (!coords)
            throw Error("cochain is not a cocycle");
        IntVector out;
        out.reserve(red.coordinate_rows.size());
        for (std::size_t k = 0; k < red.coordinate_rows.size(); ++k)
        {
            Integer acc = 0;
            for (std::size_t c = 0; c < coords->size(); ++c)
                acc += red.coordinate_rows[k][c] * (*coords)[c];
            if (!red.moduli[k].is_zero())
            {
                acc %= red.moduli[k];
                if (acc < 0)
                    acc += red.moduli[k];
            }
            out.push_back(std::move(acc));
        }
        return out;
    }

    std::vector<std::uint64_t> v(z.values.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = residue(z.values[k], red.p);
    auto const coords = red.field->solve(v);
    if (!coords)
        throw Error("cochain is not a cocycle");
    return IntVector(coords->begin() + static_cast<std::ptrdiff_t>(red.image_rank), coords->end());
}

RingTable ring_table(PrecubicalSet const& x, CoeffRing const& ring)
{
    return ring_table(x, cohomology_groups(x, ring));
}

RingTable ring_table(PrecubicalSet const& x, std::vector<CohomologyGroup> groups)
{
    RingTable t;
    t.groups = std::move(groups);
    std::size_t const degrees = t.groups.size();
    t.products.resize(degrees);
    for (std::size_t p = 0; p < degrees; ++p)
    {
        t.products[p].resize(degrees);
        for (std::size_t q = 0; q < degrees; ++q)
        {
            auto const& gp = t.groups[p];
            auto const& gq = t.groups[q];
            auto& block = t.products[p][q];
            block.assign(gp.num_generators(), std::vector<IntVector>(gq.num_generators()));
            if (p + q >= degrees)
                continue;
            for (std::size_t i = 0; i < gp.num_generators(); ++i)
                for (std::size_t j = 0; j < gq.num_generators(); ++j)
                    block[i][j] = class_of(t.groups[p + q], cup(x, gp.generators[i], gq.generators[j]));
        }
    }
    if (degrees > 0)
        t.unit = class_of(t.groups[0], unit_cochain(x, t.groups[0].ring));
    return t;
}

} // namespace cubcoh
