// Random precubical sets and cochains, and executable checks of the cup
// product identities on them.

#ifndef CUBCOH_PROPCHECK_HPP
#define CUBCOH_PROPCHECK_HPP

#include "cubcoh/complex.hpp"
#include "cubcoh/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cubcoh
{

using Rng = std::mt19937_64;

struct GenConfig
{
    std::uint64_t seed = 0;
    std::size_t max_dim = 3;
    /// Each tensor factor is a random directed multigraph of this size.
    std::size_t vertices = 3;
    std::size_t edges = 3;
    std::size_t factors = 3;
    /// Probability of keeping each cube before face closure.
    double fraction = 0.5;
    CoeffRing ring;

    /// Throws Error when a field is out of range.
    void check() const;
};

/// Mixes a base seed with a trial index (splitmix64).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

/// One-dimensional precubical set: vertices v0.., edges e0.. with random
/// endpoints (loops and parallel edges allowed).
PrecubicalSet random_graph(std::size_t vertices, std::size_t edges, Rng& rng);

/// Keeps each cube of dimension <= max_dim with probability `fraction`, then
/// closes the selection under all faces.  Cube order and labels are kept.
PrecubicalSet random_subcomplex(PrecubicalSet const& x, double fraction, std::size_t max_dim, Rng& rng);

/// Face-closed random part of a tensor product of random graphs.
PrecubicalSet random_precubical(GenConfig const& cfg);

/// Removes one cube that is not a face of any other cube.
PrecubicalSet without_cube(PrecubicalSet const& x, CubeId u);

/// Hex digest of the face structure (labels ignored).
std::string instance_digest(PrecubicalSet const& x);

/// Values uniform in -3..3 over Z, uniform residues over Z/m.
Cochain random_cochain(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, Rng& rng);
/// Random integer cocycle (reduced into the ring) plus a random coboundary.
Cochain random_cocycle(PrecubicalSet const& x, std::size_t dim, CoeffRing const& ring, Rng& rng);

/// phi ^ psi == (-1)^(pq) psi ^ phi at the cochain level.
bool cochain_anticommutes(PrecubicalSet const& x, Cochain const& phi, Cochain const& psi);

// --- property runner --------------------------------------------------------

/// Cochain data drawn for one trial.  Chains are carried as integer cochains.
struct TrialInputs
{
    std::vector<Cochain> cochains;
};

/// nullopt when the identity holds, otherwise a description of the failure.
using Evaluator = std::function<std::optional<std::string>(PrecubicalSet const&, TrialInputs const&)>;

struct Counterexample
{
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::string digest;
    std::string message;
    /// Minimized instance as a document.
    std::string instance;
    TrialInputs inputs;
};

struct PropertyReport
{
    std::string name;
    std::string ring;
    std::size_t trials = 0;
    /// Trials whose instance offered nothing to check (e.g. too few dimensions).
    std::size_t vacuous = 0;
    std::vector<Counterexample> failures;
    double elapsed_ms = 0;
    /// Reporters never fail a run; their failures are disagreements.
    bool report_only = false;

    bool passed() const { return report_only || failures.empty(); }
};

/// The asserted identities.
std::vector<std::string> property_names();
/// Report-only statistics (anticommutativity on cochains and on classes).
std::vector<std::string> reporter_names();

/// Runs `trials` trials of a named property.  Each trial uses a fresh random
/// instance from cfg, or `fixed` when given.  Failures are minimized.
PropertyReport check(std::string const& property, GenConfig const& cfg, std::size_t trials,
                     PrecubicalSet const* fixed = nullptr);

/// Class-level anticommutativity over Z or Z/p on random pairs of generators
/// in positive degrees.  Trials without such a pair are vacuous.
PropertyReport anticommutativity_report(GenConfig const& cfg, std::size_t trials, PrecubicalSet const* fixed = nullptr);

/**
 * Greedily deletes top-dimensional cubes (and the matching cochain entries)
 * while the evaluator still reports a failure.  The returned pair always
 * still fails.
 */
std::pair<PrecubicalSet, TrialInputs> minimize(PrecubicalSet x, TrialInputs inputs, Evaluator const& eval);

} // namespace cubcoh

#endif
