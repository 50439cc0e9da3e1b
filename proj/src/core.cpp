#include "cubcoh/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace cubcoh
{

std::string to_string(CubeId c)
{
    return "(" + std::to_string(c.dim) + "," + std::to_string(c.index) + ")";
}

std::size_t PrecubicalSet::total_cubes() const
{
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::optional<CubeId> PrecubicalSet::face_entry(CubeId u, std::size_t i, Eps eps) const
{
    if (!contains(u))
        throw Error("cube " + to_string(u) + " does not exist");
    if (i < 1 || i > u.dim || (eps != 0 && eps != 1))
        throw Error("face index " + std::to_string(i) + " out of range 1.." + std::to_string(u.dim)
                    + " for cube " + to_string(u));
    CubeId const f = faces_[u.dim][slot(u, i, eps)];
    if (f.dim == kUnset)
        return std::nullopt;
    return f;
}

CubeId PrecubicalSet::face(CubeId u, std::size_t i, Eps eps) const
{
    auto f = face_entry(u, i, eps);
    if (!f)
        throw Error("face d_" + std::to_string(i) + "^" + std::to_string(eps) + " of cube " + to_string(u)
                    + " is not set");
    return *f;
}

std::string PrecubicalSet::label(CubeId u) const
{
    if (!contains(u))
        throw Error("cube " + to_string(u) + " does not exist");
    return labels_[u.dim][u.index];
}

std::optional<CubeId> PrecubicalSet::find(std::size_t dim, std::string const& name) const
{
    for (std::size_t k = 0; k < count(dim); ++k)
    {
        CubeId const id{static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(k)};
        if (label(id) == name)
            return id;
    }
    return std::nullopt;
}

// --- builder ----------------------------------------------------------------

void PrecubicalSetBuilder::reserve_dim(std::size_t dim)
{
    if (dim > kMaxDim)
        throw Error("dimension " + std::to_string(dim) + " exceeds the supported maximum "
                    + std::to_string(kMaxDim));
    if (set_.counts_.size() <= dim)
    {
        set_.counts_.resize(dim + 1, 0);
        set_.faces_.resize(dim + 1);
    }
}

CubeId PrecubicalSetBuilder::add_cube(std::size_t dim, std::string label)
{
    reserve_dim(dim);
    CubeId const id{static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(set_.counts_[dim]++)};
    set_.faces_[dim].resize(set_.counts_[dim] * dim * 2,
                            CubeId{PrecubicalSet::kUnset, PrecubicalSet::kUnset});
    if (set_.labels_.size() <= dim)
        set_.labels_.resize(dim + 1);
    set_.labels_[dim].push_back(std::move(label));
    return id;
}

void PrecubicalSetBuilder::set_face(CubeId u, std::size_t i, Eps eps, CubeId face)
{
    if (!set_.contains(u))
        throw Error("cube " + to_string(u) + " does not exist");
    if (i < 1 || i > u.dim || (eps != 0 && eps != 1))
        throw Error("face index " + std::to_string(i) + " out of range for cube " + to_string(u));
    set_.faces_[u.dim][set_.slot(u, i, eps)] = face;
}

void PrecubicalSetBuilder::set_faces(CubeId u, std::span<std::pair<CubeId, CubeId> const> pairs)
{
    if (pairs.size() != u.dim)
        throw Error("cube " + to_string(u) + " needs " + std::to_string(u.dim) + " face pairs, got "
                    + std::to_string(pairs.size()));
    for (std::size_t i = 1; i <= pairs.size(); ++i)
    {
        set_face(u, i, 0, pairs[i - 1].first);
        set_face(u, i, 1, pairs[i - 1].second);
    }
}

PrecubicalSet PrecubicalSetBuilder::build() &&
{
    // Trailing empty dimensions carry no information.
    while (!set_.counts_.empty() && set_.counts_.back() == 0)
    {
        set_.counts_.pop_back();
        set_.faces_.pop_back();
    }
    set_.labels_.resize(set_.counts_.size());
    for (std::size_t d = 0; d < set_.labels_.size(); ++d)
    {
        auto& names = set_.labels_[d];
        names.resize(set_.counts_[d]);
        std::set<std::string> seen;
        for (std::size_t k = 0; k < names.size(); ++k)
        {
            if (names[k].empty())
                names[k] = "c" + std::to_string(k);
            if (!seen.insert(names[k]).second)
                throw Error("duplicate label '" + names[k] + "' in dimension " + std::to_string(d));
        }
    }
    return std::move(set_);
}

// --- validation -------------------------------------------------------------

std::string Violation::describe(PrecubicalSet const& x) const
{
    std::ostringstream os;
    std::string const name = x.contains(cube) ? x.label(cube) : to_string(cube);
    switch (kind)
    {
    case Kind::missing_face:
        os << "missing face d_" << i << "^" << alpha << " of " << cube.dim << "-cube " << name;
        break;
    case Kind::dimension_mismatch:
        os << "face d_" << i << "^" << alpha << " of " << cube.dim << "-cube " << name
           << " does not have dimension " << cube.dim - 1;
        break;
    case Kind::dangling_face:
        os << "face d_" << i << "^" << alpha << " of " << cube.dim << "-cube " << name
           << " refers to a cube that does not exist";
        break;
    case Kind::cubical_identity:
        os << "cubical identity fails on " << cube.dim << "-cube " << name << ": d_" << i << "^" << alpha
           << " d_" << j << "^" << beta << " != d_" << j - 1 << "^" << beta << " d_" << i << "^" << alpha;
        break;
    }
    return os.str();
}

std::vector<Violation> validate(PrecubicalSet const& x)
{
    std::vector<Violation> out;
    // Cubes whose own face slots are structurally sound.
    std::vector<std::vector<char>> sound(x.num_dims());
    for (std::size_t n = 0; n < x.num_dims(); ++n)
    {
        sound[n].assign(x.count(n), 1);
        for (std::uint32_t k = 0; k < x.count(n); ++k)
        {
            CubeId const u{static_cast<std::uint32_t>(n), k};
            for (std::size_t i = 1; i <= n; ++i)
                for (Eps e : {0, 1})
                {
                    auto const f = x.face_entry(u, i, e);
                    Violation v{Violation::Kind::missing_face, u, i, 0, e, 0};
                    if (!f)
                        v.kind = Violation::Kind::missing_face;
                    else if (f->dim + 1 != n)
                        v.kind = Violation::Kind::dimension_mismatch;
                    else if (!x.contains(*f))
                        v.kind = Violation::Kind::dangling_face;
                    else
                        continue;
                    sound[n][k] = 0;
                    out.push_back(v);
                }
        }
    }

    for (std::size_t n = 2; n < x.num_dims(); ++n)
    {
        for (std::uint32_t k = 0; k < x.count(n); ++k)
        {
            if (!sound[n][k])
                continue;
            CubeId const u{static_cast<std::uint32_t>(n), k};
            for (std::size_t j = 2; j <= n; ++j)
                for (std::size_t i = 1; i < j; ++i)
                    for (Eps a : {0, 1})
                        for (Eps b : {0, 1})
                        {
                            CubeId const fj = x.face(u, j, b);
                            CubeId const fi = x.face(u, i, a);
                            if (!sound[n - 1][fj.index] || !sound[n - 1][fi.index])
                                continue;
                            if (x.face(fj, i, a) != x.face(fi, j - 1, b))
                                out.push_back({Violation::Kind::cubical_identity, u, i, j, a, b});
                        }
        }
    }
    return out;
}

void require_valid(PrecubicalSet const& x)
{
    auto const report = validate(x);
    if (report.empty())
        return;
    std::string msg = "not a precubical set: " + report.front().describe(x);
    if (report.size() > 1)
        msg += " (and " + std::to_string(report.size() - 1) + " more)";
    throw Error(msg);
}

// --- subsets ----------------------------------------------------------------

int permutation_sign(std::span<std::size_t const> seq)
{
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b])
                ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

SubsetWithSign make_subset(std::size_t n, std::vector<std::size_t> subset)
{
    for (std::size_t k = 0; k < subset.size(); ++k)
    {
        if (subset[k] < 1 || subset[k] > n)
            throw Error("subset element " + std::to_string(subset[k]) + " is outside 1.." + std::to_string(n));
        if (k > 0 && subset[k] <= subset[k - 1])
            throw Error("subset must be strictly increasing");
    }
    SubsetWithSign s;
    s.n = n;
    s.subset = std::move(subset);
    std::vector<std::size_t> seq = s.subset;
    for (std::size_t v = 1, k = 0; v <= n; ++v)
    {
        if (k < s.subset.size() && s.subset[k] == v)
        {
            ++k;
            continue;
        }
        s.complement.push_back(v);
        seq.push_back(v);
    }
    s.sign = permutation_sign(seq);
    return s;
}

std::vector<SubsetWithSign> subsets_with_sign(std::size_t n, std::size_t p)
{
    if (p > n)
        throw Error("subset size " + std::to_string(p) + " exceeds ambient size " + std::to_string(n));
    std::vector<SubsetWithSign> out;
    std::vector<std::size_t> g(p);
    std::iota(g.begin(), g.end(), std::size_t{1});
    while (true)
    {
        out.push_back(make_subset(n, g));
        // next combination in lexicographic order
        std::size_t k = p;
        while (k > 0 && g[k - 1] == n - p + k)
            --k;
        if (k == 0)
            break;
        ++g[k - 1];
        for (std::size_t r = k; r < p; ++r)
            g[r] = g[r - 1] + 1;
    }
    return out;
}

CubeId iterated_face(PrecubicalSet const& x, CubeId u, std::span<std::size_t const> keep, Eps eps)
{
    std::size_t const n = u.dim;
    std::uint32_t mask = 0;
    for (std::size_t g : keep)
    {
        if (g < 1 || g > n)
            throw Error("subset element " + std::to_string(g) + " is outside 1.." + std::to_string(n));
        mask |= 1u << (g - 1);
    }
    for (std::size_t k = n; k >= 1; --k)
        if (!(mask & (1u << (k - 1))))
            u = x.face(u, k, eps);
    return u;
}

// --- constructions ----------------------------------------------------------

PrecubicalSet interval()
{
    return standard_cube(1);
}

PrecubicalSet circle()
{
    PrecubicalSetBuilder b;
    CubeId const o = b.add_cube(0, "o");
    CubeId const t = b.add_cube(1, "t");
    b.set_face(t, 1, 0, o);
    b.set_face(t, 1, 1, o);
    return std::move(b).build();
}

PrecubicalSet standard_cube(std::size_t n)
{
    if (n > kMaxDim)
        throw Error("dimension " + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxDim));
    // Enumerate words over {0,1,*} in lexicographic order, bucketed by the
    // number of stars.
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k)
        total *= 3;
    std::vector<std::string> words;
    words.reserve(total);
    std::string w(n, '0');
    char const digits[3] = {'0', '1', '*'};
    for (std::size_t code = 0; code < total; ++code)
    {
        std::size_t c = code;
        for (std::size_t pos = n; pos-- > 0;)
        {
            w[pos] = digits[c % 3];
            c /= 3;
        }
        words.push_back(w);
    }

    PrecubicalSetBuilder b;
    std::vector<std::vector<std::string>> by_dim(n + 1);
    for (auto const& word : words)
        by_dim[static_cast<std::size_t>(std::count(word.begin(), word.end(), '*'))].push_back(word);
    std::vector<std::vector<std::pair<std::string, CubeId>>> ids(n + 1);
    auto lookup = [&](std::size_t dim, std::string const& word) {
        auto const& v = ids[dim];
        auto it = std::lower_bound(v.begin(), v.end(), word,
                                   [](auto const& entry, std::string const& key) { return entry.first < key; });
        return it->second;
    };
    for (std::size_t d = 0; d <= n; ++d)
    {
        for (auto const& word : by_dim[d])
        {
            CubeId const u = b.add_cube(d, n == 0 ? std::string("pt") : word);
            ids[d].emplace_back(word, u);
            std::size_t i = 0;
            for (std::size_t pos = 0; pos < n; ++pos)
            {
                if (word[pos] != '*')
                    continue;
                ++i;
                for (Eps e : {0, 1})
                {
                    std::string f = word;
                    f[pos] = static_cast<char>('0' + e);
                    b.set_face(u, i, e, lookup(d - 1, f));
                }
            }
        }
        // Sorted by plain string order for lookup only; insertion order is untouched.
        std::sort(ids[d].begin(), ids[d].end());
    }
    return std::move(b).build();
}

PrecubicalSet torus()
{
    PrecubicalSetBuilder b;
    CubeId const o = b.add_cube(0, "o");
    CubeId const t1 = b.add_cube(1, "t1");
    CubeId const t2 = b.add_cube(1, "t2");
    CubeId const v = b.add_cube(2, "v");
    for (CubeId t : {t1, t2})
    {
        b.set_face(t, 1, 0, o);
        b.set_face(t, 1, 1, o);
    }
    b.set_face(v, 1, 0, t1);
    b.set_face(v, 1, 1, t1);
    b.set_face(v, 2, 0, t2);
    b.set_face(v, 2, 1, t2);
    return std::move(b).build();
}

PrecubicalSet tensor_product(PrecubicalSet const& x, PrecubicalSet const& y)
{
    if (x.num_dims() == 0 || y.num_dims() == 0)
        return {};
    std::size_t const top = x.num_dims() - 1 + y.num_dims() - 1;
    if (top > kMaxDim)
        throw Error("tensor product dimension " + std::to_string(top) + " exceeds the supported maximum "
                    + std::to_string(kMaxDim));

    // Position of (a, b) inside dimension a.dim + b.dim.
    std::vector<std::vector<std::size_t>> offset(top + 1, std::vector<std::size_t>(x.num_dims(), 0));
    for (std::size_t n = 0; n <= top; ++n)
    {
        std::size_t acc = 0;
        for (std::size_t p = 0; p < x.num_dims(); ++p)
        {
            offset[n][p] = acc;
            if (n >= p)
                acc += x.count(p) * y.count(n - p);
        }
    }
    auto pair_id = [&](CubeId a, CubeId b) {
        std::size_t const n = a.dim + b.dim;
        return CubeId{static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(offset[n][a.dim] + a.index * y.count(b.dim) + b.index)};
    };

    PrecubicalSetBuilder bld;
    for (std::size_t n = 0; n <= top; ++n)
    {
        bld.reserve_dim(n);
        for (std::size_t p = 0; p < x.num_dims() && p <= n; ++p)
        {
            std::size_t const q = n - p;
            if (q >= y.num_dims())
                continue;
            for (std::uint32_t ia = 0; ia < x.count(p); ++ia)
                for (std::uint32_t ib = 0; ib < y.count(q); ++ib)
                {
                    CubeId const a{static_cast<std::uint32_t>(p), ia};
                    CubeId const b{static_cast<std::uint32_t>(q), ib};
                    CubeId const u = bld.add_cube(n, x.label(a) + "|" + y.label(b));
                    for (std::size_t i = 1; i <= n; ++i)
                        for (Eps e : {0, 1})
                        {
                            CubeId const f = i <= p ? pair_id(x.face(a, i, e), b) : pair_id(a, y.face(b, i - p, e));
                            bld.set_face(u, i, e, f);
                        }
                }
        }
    }
    return std::move(bld).build();
}

std::vector<std::string> builtin_names()
{
    return {"point", "interval", "circle", "torus", "torus3", "cube<N>"};
}

PrecubicalSet builtin(std::string const& name)
{
    if (name == "point")
        return standard_cube(0);
    if (name == "interval")
        return interval();
    if (name == "circle")
        return circle();
    if (name == "torus")
        return torus();
    if (name == "torus3")
        return tensor_product(torus(), circle());
    if (name.size() > 4 && name.rfind("cube", 0) == 0)
    {
        std::string const digits = name.substr(4);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })
            && digits.size() <= 2)
            return standard_cube(std::stoul(digits));
    }
    throw Error("unknown builtin '" + name + "'");
}

} // namespace cubcoh
