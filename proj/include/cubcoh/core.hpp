// Finite precubical sets: storage, cubical identities, iterated faces and
// subset signatures, plus a handful of standard constructions.

#ifndef CUBCOH_CORE_HPP
#define CUBCOH_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubcoh
{

/// Largest cube dimension accepted anywhere in the library.
inline constexpr std::size_t kMaxDim = 12;

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct CubeId
{
    std::uint32_t dim = 0;
    std::uint32_t index = 0;

    friend bool operator==(CubeId, CubeId) = default;
    friend auto operator<=>(CubeId, CubeId) = default;
};

std::string to_string(CubeId c);

/// Face direction: 0 is the "front" (lower) face, 1 the "back" face.
using Eps = int;

class PrecubicalSetBuilder;

/**
 * A finite precubical set.  Cubes of dimension n are numbered 0..count(n)-1.
 * Face indices i are 1-based throughout the public interface; storage is a
 * dense table per dimension laid out cube-major, then i, then eps.
 *
 * Instances are immutable once built.  A set produced by a builder may still
 * violate the cubical identities; validate() reports that.
 */
class PrecubicalSet
{
public:
    PrecubicalSet() = default;

    /// Number of the highest nonempty dimension plus one (0 for the empty set).
    std::size_t num_dims() const { return counts_.size(); }
    /// Highest dimension carrying cubes; -1 when empty.
    int max_dim() const { return static_cast<int>(counts_.size()) - 1; }

    std::size_t count(std::size_t dim) const { return dim < counts_.size() ? counts_[dim] : 0; }
    std::vector<std::size_t> const& cube_counts() const { return counts_; }
    std::size_t total_cubes() const;

    /// The face d_i^eps(u); i in 1..dim(u).  Throws on a missing entry.
    CubeId face(CubeId u, std::size_t i, Eps eps) const;
    /// Like face() but returns nullopt for an unset slot.
    std::optional<CubeId> face_entry(CubeId u, std::size_t i, Eps eps) const;

    std::string label(CubeId u) const;
    std::optional<CubeId> find(std::size_t dim, std::string const& label) const;

    bool contains(CubeId u) const { return u.dim < counts_.size() && u.index < counts_[u.dim]; }

    friend bool operator==(PrecubicalSet const&, PrecubicalSet const&) = default;

private:
    friend class PrecubicalSetBuilder;

    static constexpr std::uint32_t kUnset = 0xffffffffu;

    std::size_t slot(CubeId u, std::size_t i, Eps eps) const
    {
        return (static_cast<std::size_t>(u.index) * u.dim + (i - 1)) * 2 + static_cast<std::size_t>(eps);
    }

    std::vector<std::size_t> counts_;
    // faces_[n] holds the face table for n-cubes (faces_[0] is empty).
    std::vector<std::vector<CubeId>> faces_;
    // One label list per dimension; unnamed cubes get "c<index>".
    std::vector<std::vector<std::string>> labels_;
};

class PrecubicalSetBuilder
{
public:
    PrecubicalSetBuilder() = default;

    /// Appends a cube of the given dimension and returns its id.
    CubeId add_cube(std::size_t dim, std::string label = {});
    /// Ensures dimensions 0..dim exist even if they stay empty.
    void reserve_dim(std::size_t dim);
    void set_face(CubeId u, std::size_t i, Eps eps, CubeId face);
    /// Sets both faces for every i at once: pairs[i-1] = {d_i^0, d_i^1}.
    void set_faces(CubeId u, std::span<std::pair<CubeId, CubeId> const> pairs);

    std::size_t count(std::size_t dim) const { return set_.count(dim); }

    PrecubicalSet build() &&;

private:
    PrecubicalSet set_;
};

// --- validation -------------------------------------------------------------

struct Violation
{
    enum class Kind
    {
        missing_face,
        dimension_mismatch,
        dangling_face,
        cubical_identity,
    };

    Kind kind;
    CubeId cube;
    std::size_t i = 0;  // 1-based
    std::size_t j = 0;  // 1-based, cubical_identity only
    Eps alpha = 0;
    Eps beta = 0;

    std::string describe(PrecubicalSet const& x) const;
    friend bool operator==(Violation const&, Violation const&) = default;
};

/**
 * Checks the structure of the face tables and every cubical identity
 *   d_i^a d_j^b u = d_{j-1}^b d_i^a u,   i < j.
 * Identities are only examined for cubes whose structural checks pass.
 */
std::vector<Violation> validate(PrecubicalSet const& x);

/// Throws Error listing the first violations if x is not a precubical set.
void require_valid(PrecubicalSet const& x);

// --- subsets and signs ------------------------------------------------------

/// Ordered subset G of {1..n}, its complement K and the sign of the
/// permutation (G, K).
struct SubsetWithSign
{
    std::size_t n = 0;
    std::vector<std::size_t> subset;
    std::vector<std::size_t> complement;
    int sign = 1;

    friend bool operator==(SubsetWithSign const&, SubsetWithSign const&) = default;
};

/// Sign of a sequence of distinct integers, (-1)^(number of inversions).
int permutation_sign(std::span<std::size_t const> seq);

/// Builds the record for a given subset; throws if it is not a strictly
/// increasing subset of {1..n}.
SubsetWithSign make_subset(std::size_t n, std::vector<std::size_t> subset);

/// All C(n, p) subsets of size p in lexicographic order.
std::vector<SubsetWithSign> subsets_with_sign(std::size_t n, std::size_t p);

/**
 * Face of u that keeps the coordinates listed in `keep` and fixes all others
 * to eps.  Complement coordinates are eliminated largest first, which needs
 * no renumbering of the remaining ones.
 */
CubeId iterated_face(PrecubicalSet const& x, CubeId u, std::span<std::size_t const> keep, Eps eps);

inline CubeId iterated_face(PrecubicalSet const& x, CubeId u, SubsetWithSign const& g, Eps eps)
{
    return iterated_face(x, u, g.subset, eps);
}

// --- constructions ----------------------------------------------------------

PrecubicalSet interval();
/// One vertex with a single loop.
PrecubicalSet circle();
/// The standard n-cube; cubes are words over {0,1,*} ordered lexicographically
/// with '0' < '1' < '*'.
PrecubicalSet standard_cube(std::size_t n);
/// One vertex o, loops t1 and t2, one square v with d_1 v = t1, d_2 v = t2.
PrecubicalSet torus();
/// Cubes of dimension n are pairs (x, y) with dim x + dim y = n, ordered by
/// (dim x, index of x, index of y).  Face i acts on x when i <= dim x and on
/// y with index i - dim x otherwise.
PrecubicalSet tensor_product(PrecubicalSet const& x, PrecubicalSet const& y);

/// Names accepted by builtin().
std::vector<std::string> builtin_names();
/// "interval", "circle", "torus", "torus3", "cube<N>", "point".
PrecubicalSet builtin(std::string const& name);

} // namespace cubcoh

#endif
