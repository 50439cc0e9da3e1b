// Chains, tensor chains and cochains of a precubical set, and the maps
// between them: boundary, tensor boundary, diagonal, coboundary, cup.

#ifndef CUBCOH_COMPLEX_HPP
#define CUBCOH_COMPLEX_HPP

#include "cubcoh/core.hpp"
#include "cubcoh/exactlinalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cubcoh
{

/// Constant coefficient ring: the integers or Z/m for m >= 2.  Elements are
/// Integers; for Z/m they are kept as residues in [0, m).
class CoeffRing
{
public:
    enum class Kind
    {
        integers,
        integers_mod,
    };

    CoeffRing() = default;
    static CoeffRing integers() { return {}; }
    static CoeffRing integers_mod(std::uint64_t m);
    /// "Z", "Z/6", ...
    static CoeffRing parse(std::string const& spec);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_integers() const { return kind_ == Kind::integers; }
    bool commutative() const { return true; }
    bool is_prime_field() const;

    Integer normalize(Integer v) const;
    Integer zero() const { return 0; }
    Integer one() const { return 1; }
    Integer add(Integer const& a, Integer const& b) const { return normalize(a + b); }
    Integer negate(Integer const& a) const { return normalize(-a); }
    Integer multiply(Integer const& a, Integer const& b) const { return normalize(a * b); }

    std::string name() const;

    friend bool operator==(CoeffRing const&, CoeffRing const&) = default;

private:
    Kind kind_ = Kind::integers;
    std::uint64_t modulus_ = 0;
};

/// Finitely supported integer combination of n-cubes.  Zero coefficients are
/// never stored.
struct Chain
{
    std::size_t dim = 0;
    std::map<std::uint32_t, Integer> terms;

    void add(std::uint32_t index, Integer const& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(Chain const&, Chain const&) = default;
};

/// Integer combination of pairs x (x) y with dim x + dim y = dim.
struct TensorChain
{
    std::size_t dim = 0;
    std::map<std::pair<CubeId, CubeId>, Integer> terms;

    void add(CubeId x, CubeId y, Integer const& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(TensorChain const&, TensorChain const&) = default;
};

/// Ring-valued function on all n-cubes (dense).
struct Cochain
{
    std::size_t dim = 0;
    CoeffRing ring;
    std::vector<Integer> values;

    bool is_zero() const;
    friend bool operator==(Cochain const&, Cochain const&) = default;
};

Chain basis_chain(CubeId u, Integer const& c = 1);

Chain boundary(PrecubicalSet const& x, Chain const& c);
TensorChain tensor_boundary(PrecubicalSet const& x, TensorChain const& c);
TensorChain diagonal(PrecubicalSet const& x, Chain const& c);

Cochain zero_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring);
/// The cochain taking one on u and zero elsewhere.
Cochain dual_cochain(PrecubicalSet const& x, CubeId u, CoeffRing const& ring);
Cochain unit_cochain(PrecubicalSet const& x, CoeffRing const& ring);
Cochain make_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, std::vector<Integer> values);

Cochain coboundary(PrecubicalSet const& x, Cochain const& phi);

/**
 * Cup product.  On a (p+q)-cube u
 *   (phi ^ psi)(u) = sum_G sign(G,K) phi(front_G u) psi(back_K u)
 * over size-p subsets G of {1..p+q} with complement K, where front_G keeps
 * the coordinates in G and sends the rest to 0 and back_K keeps K and sends
 * the rest to 1.  Factor order is preserved.
 */
Cochain cup(PrecubicalSet const& x, Cochain const& phi, Cochain const& psi);

Cochain operator+(Cochain const& a, Cochain const& b);
Cochain operator-(Cochain const& a, Cochain const& b);
Cochain operator-(Cochain const& a);
Cochain scaled(Cochain const& a, Integer const& factor);

/// Evaluation of a cochain on a chain of the same dimension.
Integer evaluate(Cochain const& phi, Chain const& c);

} // namespace cubcoh

#endif
