// Cohomology groups with explicit cocycle generators, and the cup product
// table on classes.

#ifndef CUBCOH_COHOMOLOGY_HPP
#define CUBCOH_COHOMOLOGY_HPP

#include "cubcoh/complex.hpp"
#include "cubcoh/exactlinalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cubcoh
{

/// Matrix of the coboundary from n-cochains to (n+1)-cochains in the cube
/// bases: rows are (n+1)-cubes, columns n-cubes.  Entries are reduced into
/// the ring.
IntMatrix delta_matrix(PrecubicalSet const& x, std::size_t n, CoeffRing const& ring = {});

namespace detail
{
struct Reduction;
}

/**
 * H^n of the cochain complex.  Generators are listed free part first, then
 * torsion in increasing invariant factor.  Coordinates of a class are
 * integers on the free part and residues modulo the invariant factor on the
 * torsion part; over Z/p all coordinates are residues mod p and there is no
 * torsion.
 */
struct CohomologyGroup
{
    std::size_t dim = 0;
    CoeffRing ring;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<Cochain> generators;
    std::shared_ptr<detail::Reduction const> reduction;

    std::size_t num_generators() const { return generators.size(); }
    /// 0 for a free generator, the invariant factor for a torsion one, p
    /// over Z/p.
    Integer order(std::size_t k) const;
    /// "Z^2 ⊕ Z/2", "(Z/2)^3", "0".
    std::string str() const;
};

/// Groups for degrees 0..max_dim.  Rings other than Z and Z/p (p prime) are
/// refused.
std::vector<CohomologyGroup> cohomology_groups(PrecubicalSet const& x, CoeffRing const& ring);

/// Coordinates of the class of the cocycle z.  Throws if z is not a cocycle.
IntVector class_of(CohomologyGroup const& group, Cochain const& z);

struct RingTable
{
    std::vector<CohomologyGroup> groups;
    /// products[p][q][i][j] = coordinates of [g_i^p ^ g_j^q] in degree p+q;
    /// empty when p + q exceeds the top dimension.
    std::vector<std::vector<std::vector<std::vector<IntVector>>>> products;
    /// Coordinates of the unit class in H^0.
    IntVector unit;

    IntVector const& product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const
    {
        return products.at(p).at(q).at(i).at(j);
    }
};

RingTable ring_table(PrecubicalSet const& x, CoeffRing const& ring);
RingTable ring_table(PrecubicalSet const& x, std::vector<CohomologyGroup> groups);

/// Generator names used by the CLI and the bindings: "a<degree>_<k>".
std::string generator_name(std::size_t degree, std::size_t k);

} // namespace cubcoh

#endif
