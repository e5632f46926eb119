#pragma once

// Symmetry-adapted bases of the N-particle space: standard tableaux, Young
// symmetrizer projections for general n, and the sequentially coupled spin
// basis |j,m;d> for n = 2.  Both constructions emit the same sector type; the
// coupled labels (j, m, d) are recoverable from a sector's shape, a member's
// occupancy, and the sector's copy index.

#include "schurweyl/partitions.hpp"
#include "schurweyl/statespace.hpp"

#include <vector>

namespace schurweyl {

// Particle-count caps for the factorial-cost symmetrizer path and the
// coupled-basis path.  Both outputs hold n^N vectors of dimension n^N, so the
// symmetrizer path additionally bounds the dimension itself.
inline constexpr unsigned kMaxSymmetrizerParticles = 7;
inline constexpr std::size_t kMaxSymmetrizerDimension = 4096;
inline constexpr unsigned kMaxCoupledParticles = 12;
inline constexpr std::uint64_t kMaxTableauCount = 1000000;

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<unsigned>> rows;   // entries 1..N, same ragged shape
};

// All standard tableaux of the shape, sorted by their row-reading word
// (row-major concatenation) in increasing lexicographic order.  Refuses
// shapes with more than kMaxTableauCount tableaux.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Column antisymmetrization followed by row symmetrization, both as plain
// (unnormalized) sums over subgroup permutations, signs on the column part.
// May return the zero vector.  Costs |rows!| * |cols!| per nonzero amplitude.
StateVector young_symmetrizer_apply(const StandardTableau& t, const StateVector& v);

struct SectorMember {
    StateVector state;
    std::vector<unsigned> occupancy;   // per-level digit counts (the weight)
};

struct SymmetrySector {
    Partition shape;        // the partition label lambda
    unsigned copy_index;    // 1-based multiplicity index d
    std::vector<SectorMember> members;
};

// The full symmetry-adapted orthonormal basis: for each partition with a
// nonzero unitary dimension, one sector per standard tableau, built by
// symmetrizing computational basis vectors and orthonormalizing (modified
// Gram-Schmidt with pivoting, cross-tableau within each partition block).
// Members are grouped by occupancy class, classes in descending
// lexicographic order.
std::vector<SymmetrySector> build_decomposition(const SystemShape& shape);

// Exact half-integer bookkeeping: values are stored doubled.
struct CoupledLabel {
    int twice_j;
    int twice_m;
    unsigned copy_index;
};

// The coupled |j,m;d> basis for N spin-1/2 particles, built by sequential
// coupling from the last particle backwards (particles N-1 and N first, each
// earlier particle prepended).  Level 1 carries m = +1/2.  Each tower's top
// member has its largest-magnitude amplitude made real positive; the rest of
// the tower follows by repeated lowering (per-site digit 1 -> 2 transfer)
// with no further phase adjustment.  Sectors are ordered by descending total
// spin, copies in creation order; members run m = j down to -j.
std::vector<SymmetrySector> couple_spins(unsigned particles);

// Coupled-label helpers for sectors produced on two-level systems.
int sector_twice_spin(const SymmetrySector& sector);
int member_twice_projection(const SectorMember& member);
CoupledLabel coupled_label(const SymmetrySector& sector, std::size_t member_index);

// Unnormalized image of the collective lowering action: the sum over sites of
// the single-site digit 1 -> 2 transfer (two-level systems only).
StateVector lowering_image(const StateVector& v);

struct SectorWeight {
    Partition shape;
    unsigned copy_index;
    double weight;          // squared projection norm onto the sector span
};

// Squared projection of v onto every sector's span, in sector order.
// Weights sum to <v|v> when the sectors form a complete basis.
std::vector<SectorWeight> sector_projections(const StateVector& v,
                                             const std::vector<SymmetrySector>& sectors);

} // namespace schurweyl
