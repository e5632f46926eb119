#pragma once

#include <vector>

#include "schurweyl/schur_weyl.hpp"
#include "schurweyl/statespace.hpp"

namespace schurweyl {

// Entanglement measures, maximally entangled combinations, and product-state
// detection. All entropies are in bits (log base 2).

inline constexpr unsigned kMaxMESParticles = 10;
inline constexpr unsigned kMaxDickeParticles = 12;
inline constexpr unsigned kMaxProductParticles = 12;

// Entropy of a density matrix: -sum lambda log2 lambda over the positive
// eigenvalues. The matrix must be Hermitian with unit trace; eigenvalues in
// [-1e-10, 0) are treated as 0, anything more negative is rejected.
double von_neumann_entropy(const HermitianMatrix& rho);

// Entropy of each single-particle reduced state of a normalized pure state;
// entry k-1 is the entropy of particle k.
std::vector<double> single_particle_entropies(const StateVector& v);

// Entropy of the reduced state on the given particle subset (1-based,
// strictly ascending). For a pure state this equals the entropy of the
// complementary subset.
double bipartite_entropy(const StateVector& v, const std::vector<unsigned>& subset);

enum class BipartitionMode {
    singles,    // one bipartition per particle: {1}, {2}, ..., {N}
    all,        // every subset of size 1..N/2, one per complementary pair
};

struct BipartitionEntry {
    std::vector<unsigned> subset;   // 1-based particle ids, ascending
    double entropy = 0.0;
};

struct EntropyReport {
    std::vector<double> per_particle;
    std::vector<BipartitionEntry> bipartitions;
};

// Entropies across bipartitions of a normalized pure state. In "all" mode
// each complementary pair {S, rest} is listed once via its smaller side
// (subset sizes 1..N/2, lexicographic; at exactly half size only subsets
// containing particle 1, so no split appears twice).
EntropyReport build_entropy_report(const StateVector& v, BipartitionMode mode);

// Concurrence of a two-level two-particle density matrix: max(0, l1-l2-l3-l4)
// where the l are the descending square roots of the eigenvalues of
// rho * (sy x sy) conj(rho) (sy x sy).
double wootters_concurrence(const DensityMatrix& rho);

struct PairConcurrence {
    unsigned first = 0;     // 1-based particle ids, first < second
    unsigned second = 0;
    double value = 0.0;
};

// Concurrence of every particle pair's reduced state. Two-level states only.
std::vector<PairConcurrence> pairwise_concurrences(const StateVector& v);

// |<flip(v)|v>| where flip swaps every particle's levels with the standard
// per-site phases. Two-level states only; identically zero for an odd number
// of particles.
double spin_flip_concurrence(const StateVector& v);

struct ConcurrenceReport {
    std::vector<PairConcurrence> pairwise;
    double global = 0.0;    // spin-flip concurrence of the whole state
};

// Pairwise and global concurrences of a normalized two-level pure state.
ConcurrenceReport build_concurrence_report(const StateVector& v);

// The level-swapped partner state: apply the level permutation, then fix the
// global phase so the largest-magnitude amplitude is real positive. The
// two-level overload swaps levels 1 <-> 2.
StateVector conjugate_state(const StateVector& v);
StateVector conjugate_state(const StateVector& v, const Permutation& level_swap);

// Normalized v + conj(v) and v - conj(v); if v is its own conjugate partner
// up to phase (overlap magnitude > 1 - 1e-9), just {v}.
std::vector<StateVector> mes_pair(const StateVector& v);

struct MESState {
    StateVector state;
    CoupledLabel source;        // the coupled basis member the pair came from
    int combination_sign = 0;   // +1, -1, or 0 for a self-conjugate member
};

struct MESBasis {
    unsigned particles = 0;
    std::vector<MESState> states;
};

// Maximally entangled basis for N two-level particles: plus/minus
// combinations of each coupled basis member with its level-swapped partner
// inside the same sector, self-conjugate members kept as-is. Always 2^N
// orthonormal states.
MESBasis generate_mes_basis(unsigned particles);

struct DickePoint {
    int twice_projection = 0;
    double entropy = 0.0;
};

// Single-particle entropy of each symmetric (maximal-spin) ladder state of N
// two-level particles, from m = N/2 down to m = -N/2.
std::vector<DickePoint> dicke_entropy_profile(unsigned particles);

struct ProductBlock {
    std::vector<unsigned> particles;    // 1-based ids, ascending
    StateVector state;                  // normalized factor on those particles
};

// Finest tensor factorization of a normalized pure state: greedily splits off
// subsets whose bipartite entropy vanishes (< 1e-9). Blocks are sorted by
// their smallest particle id; each factor's phase is fixed so its largest
// amplitude is real positive.
std::vector<ProductBlock> product_structure(const StateVector& v);

}  // namespace schurweyl
