#pragma once

// Integer partitions and the dimension/counting arithmetic attached to them:
// hook lengths, symmetric-group and unitary-group irrep dimensions, conjugacy
// class sizes, and the joint decomposition table for N particles with n levels.
// All counts are exact (128-bit intermediates, overflow-checked).

#include <compare>
#include <cstdint>
#include <vector>

namespace schurweyl {

// Hard cap on the particle count accepted by the counting routines.  20 keeps
// every intermediate (N! and hook products) comfortably inside 128 bits.
inline constexpr unsigned kMaxParticles = 20;

// A partition of a positive integer: parts in non-increasing order, all >= 1.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned total() const { return total_; }          // the integer partitioned
    unsigned rows() const { return static_cast<unsigned>(parts_.size()); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<unsigned> parts_;
    unsigned total_;
};

// All partitions of N in reverse-lexicographic order: [N] first, [1,...,1] last.
std::vector<Partition> enumerate_partitions(unsigned n);

// Transpose of the Young diagram: column lengths of p.
Partition conjugate_partition(const Partition& p);

// Hook length of every cell, row by row (ragged, same shape as p).
std::vector<std::vector<unsigned>> hook_lengths(const Partition& p);

// Number of standard Young tableaux of shape p: total! / product of hooks.
std::uint64_t dim_symmetric(const Partition& p);

// Number of semistandard tableaux of shape p with entries in 1..levels
// (0 when p has more rows than levels).
std::uint64_t dim_unitary(const Partition& p, unsigned levels);

// Size of the conjugacy class of permutations whose cycle type is p.
std::uint64_t class_size(const Partition& p);

// One row of a decomposition table: a shape with its two dimensions.
struct DecompositionRecord {
    Partition shape;
    std::uint64_t multiplicity;   // symmetric-group dimension f
    std::uint64_t block_dim;      // unitary-group dimension d (may be 0)
};

struct DecompositionTable {
    unsigned particles;
    unsigned levels;
    std::vector<DecompositionRecord> rows;   // partition enumeration order
    std::uint64_t total;                     // sum of f*d over all rows
    std::uint64_t space_dim;                 // levels^particles; equals total
};

// Joint decomposition of the N-particle, n-level product space.  Throws
// numerical_failure_error if the exact identity sum(f*d) == n^N ever breaks.
DecompositionTable decomposition_table(unsigned particles, unsigned levels);

} // namespace schurweyl
