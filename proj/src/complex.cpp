#include "cubcoh/complex.hpp"

#include <algorithm>

namespace cubcoh
{

CoeffRing CoeffRing::integers_mod(std::uint64_t m)
{
    if (m < 2)
        throw Error("modulus must be at least 2, got " + std::to_string(m));
    CoeffRing r;
    r.kind_ = Kind::integers_mod;
    r.modulus_ = m;
    return r;
}

CoeffRing CoeffRing::parse(std::string const& spec)
{
    if (spec == "Z")
        return integers();
    if (spec.size() > 2 && spec.rfind("Z/", 0) == 0)
    {
        std::string const digits = spec.substr(2);
        if (digits.size() <= 18 && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return integers_mod(std::stoull(digits));
    }
    throw Error("bad coefficient spec '" + spec + "' (expected Z or Z/m)");
}

bool CoeffRing::is_prime_field() const
{
    return kind_ == Kind::integers_mod && is_prime(modulus_);
}

Integer CoeffRing::normalize(Integer v) const
{
    if (kind_ == Kind::integers)
        return v;
    v %= modulus_;
    if (v < 0)
        v += modulus_;
    return v;
}

std::string CoeffRing::name() const
{
    return kind_ == Kind::integers ? "Z" : "Z/" + std::to_string(modulus_);
}

void Chain::add(std::uint32_t index, Integer const& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(index, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

void TensorChain::add(CubeId x, CubeId y, Integer const& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace({x, y}, c);
    if (!inserted)
    {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

bool Cochain::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](Integer const& v) { return v.is_zero(); });
}

Chain basis_chain(CubeId u, Integer const& c)
{
    Chain out;
    out.dim = u.dim;
    out.add(u.index, c);
    return out;
}

namespace
{

CubeId cube(std::size_t dim, std::uint32_t index)
{
    return CubeId{static_cast<std::uint32_t>(dim), index};
}

void check_chain(PrecubicalSet const& x, std::size_t dim, std::uint32_t index)
{
    if (index >= x.count(dim))
        throw Error("chain term " + to_string(cube(dim, index)) + " is not a cube");
}

// D u = sum_i (-1)^i (d_i^1 u - d_i^0 u), accumulated into out.
template <class Emit>
void boundary_terms(PrecubicalSet const& x, CubeId u, Emit&& emit)
{
    for (std::size_t i = 1; i <= u.dim; ++i)
    {
        int const s = i % 2 == 0 ? 1 : -1;
        emit(x.face(u, i, 1), s);
        emit(x.face(u, i, 0), -s);
    }
}

void require_same_ring(Cochain const& a, Cochain const& b)
{
    if (!(a.ring == b.ring))
        throw Error("coefficient ring mismatch: " + a.ring.name() + " vs " + b.ring.name());
}

} // namespace

Chain boundary(PrecubicalSet const& x, Chain const& c)
{
    if (c.dim == 0)
        throw Error("boundary of a 0-chain is undefined");
    Chain out;
    out.dim = c.dim - 1;
    for (auto const& [index, coef] : c.terms)
    {
        check_chain(x, c.dim, index);
        boundary_terms(x, cube(c.dim, index), [&](CubeId f, int s) { out.add(f.index, coef * s); });
    }
    return out;
}

TensorChain tensor_boundary(PrecubicalSet const& x, TensorChain const& c)
{
    if (c.dim == 0)
        throw Error("boundary of a 0-chain is undefined");
    TensorChain out;
    out.dim = c.dim - 1;
    for (auto const& [key, coef] : c.terms)
    {
        auto const& [a, b] = key;
        if (a.dim + b.dim != c.dim)
            throw Error("tensor term " + to_string(a) + "x" + to_string(b) + " has the wrong total dimension");
        check_chain(x, a.dim, a.index);
        check_chain(x, b.dim, b.index);
        if (a.dim > 0)
            boundary_terms(x, a, [&](CubeId f, int s) { out.add(f, b, coef * s); });
        if (b.dim > 0)
        {
            int const sa = a.dim % 2 == 0 ? 1 : -1;
            boundary_terms(x, b, [&](CubeId f, int s) { out.add(a, f, coef * (s * sa)); });
        }
    }
    return out;
}

TensorChain diagonal(PrecubicalSet const& x, Chain const& c)
{
    TensorChain out;
    out.dim = c.dim;
    for (std::size_t p = 0; p <= c.dim; ++p)
    {
        auto const subsets = subsets_with_sign(c.dim, p);
        for (auto const& [index, coef] : c.terms)
        {
            check_chain(x, c.dim, index);
            CubeId const u = cube(c.dim, index);
            for (auto const& g : subsets)
                out.add(iterated_face(x, u, g.subset, 0), iterated_face(x, u, g.complement, 1), coef * g.sign);
        }
    }
    return out;
}

Cochain zero_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring)
{
    return Cochain{dim, ring, std::vector<Integer>(x.count(dim))};
}

Cochain dual_cochain(PrecubicalSet const& x, CubeId u, CoeffRing const& ring)
{
    if (!x.contains(u))
        throw Error("cube " + to_string(u) + " does not exist");
    Cochain out = zero_cochain(x, u.dim, ring);
    out.values[u.index] = ring.one();
    return out;
}

Cochain unit_cochain(PrecubicalSet const& x, CoeffRing const& ring)
{
    return Cochain{0, ring, std::vector<Integer>(x.count(0), ring.one())};
}

Cochain make_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, std::vector<Integer> values)
{
    if (values.size() != x.count(dim))
        throw Error("cochain of dimension " + std::to_string(dim) + " needs " + std::to_string(x.count(dim))
                    + " values, got " + std::to_string(values.size()));
    for (auto& v : values)
        v = ring.normalize(std::move(v));
    return Cochain{dim, ring, std::move(values)};
}

Cochain coboundary(PrecubicalSet const& x, Cochain const& phi)
{
    if (phi.values.size() != x.count(phi.dim))
        throw Error("cochain does not match the cube count of dimension " + std::to_string(phi.dim));
    std::size_t const n = phi.dim + 1;
    Cochain out = zero_cochain(x, n, phi.ring);
    for (std::uint32_t k = 0; k < x.count(n); ++k)
    {
        Integer acc = 0;
        boundary_terms(x, cube(n, k), [&](CubeId f, int s) { acc += s * phi.values[f.index]; });
        out.values[k] = phi.ring.normalize(std::move(acc));
    }
    return out;
}

Cochain cup(PrecubicalSet const& x, Cochain const& phi, Cochain const& psi)
{
    require_same_ring(phi, psi);
    if (phi.values.size() != x.count(phi.dim) || psi.values.size() != x.count(psi.dim))
        throw Error("cochain does not match the precubical set");
    std::size_t const n = phi.dim + psi.dim;
    if (n > kMaxDim)
        throw Error("cup product degree exceeds the supported maximum");
    CoeffRing const& ring = phi.ring;
    Cochain out = zero_cochain(x, n, ring);
    if (out.values.empty())
        return out;
    auto const subsets = subsets_with_sign(n, phi.dim);
    for (std::uint32_t k = 0; k < x.count(n); ++k)
    {
        CubeId const u = cube(n, k);
        Integer acc = 0;
        for (auto const& g : subsets)
        {
            Integer const& a = phi.values[iterated_face(x, u, g.subset, 0).index];
            if (a.is_zero())
                continue;
            Integer const& b = psi.values[iterated_face(x, u, g.complement, 1).index];
            if (b.is_zero())
                continue;
            Integer term = a * b;
            if (g.sign < 0)
                term = -term;
            acc += term;
        }
        out.values[k] = ring.normalize(std::move(acc));
    }
    return out;
}

Cochain operator+(Cochain const& a, Cochain const& b)
{
    require_same_ring(a, b);
    if (a.dim != b.dim || a.values.size() != b.values.size())
        throw Error("adding cochains of different shapes");
    Cochain out = a;
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = a.ring.add(a.values[k], b.values[k]);
    return out;
}

Cochain operator-(Cochain const& a)
{
    Cochain out = a;
    for (auto& v : out.values)
        v = a.ring.negate(v);
    return out;
}

Cochain operator-(Cochain const& a, Cochain const& b)
{
    return a + (-b);
}

Cochain scaled(Cochain const& a, Integer const& factor)
{
    Cochain out = a;
    for (auto& v : out.values)
        v = a.ring.multiply(v, factor);
    return out;
}

Integer evaluate(Cochain const& phi, Chain const& c)
{
    if (c.dim != phi.dim)
        throw Error("evaluating a cochain on a chain of another dimension");
    Integer acc = 0;
    for (auto const& [index, coef] : c.terms)
    {
        if (index >= phi.values.size())
            throw Error("chain term outside the cochain's domain");
        acc += coef * phi.values[index];
    }
    return phi.ring.normalize(std::move(acc));
}

} // namespace cubcoh
