#pragma once

// The N-particle, n-level product space: basis labelling, inner products,
// permutation actions on particles and on levels, reduced density matrices,
// and a self-contained complex Hermitian eigensolver (cyclic Jacobi).
//
// Conventions used throughout:
//   * basis labels are digit strings (i1, ..., iN) with 1-based levels;
//   * flat indices are row-major with particle 1 most significant, so
//     index = sum_k (i_k - 1) * n^(N-k);
//   * permutations are given as 1-based image maps: sigma[k-1] is the image
//     of k.  A particle permutation sends |i_1 ... i_N> to the state whose
//     digit at position sigma(k) is i_k.

#include <complex>
#include <cstddef>
#include <vector>

namespace schurweyl {

using cplx = std::complex<double>;

// Largest flat dimension (levels^particles) any state-space routine accepts.
inline constexpr std::size_t kMaxDimension = std::size_t(1) << 24;

struct SystemShape {
    unsigned particles = 0;
    unsigned levels = 0;

    friend bool operator==(const SystemShape&, const SystemShape&) = default;
};

// Validates the shape and returns levels^particles.
std::size_t dimension(const SystemShape& shape);

struct StateVector {
    SystemShape shape;
    std::vector<cplx> amplitudes;   // dense, indexed by flat basis index

    std::size_t dim() const { return amplitudes.size(); }
};

// Hermitian matrix in dense row-major storage; doubles as a density matrix.
struct HermitianMatrix {
    std::size_t dim = 0;
    std::vector<cplx> entries;      // dim * dim, row-major

    cplx& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

using DensityMatrix = HermitianMatrix;

using Permutation = std::vector<unsigned>;   // 1-based image map

// Label <-> flat index.  Labels are validated (length, digit range).
std::size_t index_of(const SystemShape& shape, const std::vector<unsigned>& label);
std::vector<unsigned> label_of(const SystemShape& shape, std::size_t index);

// Unit vector on one basis label.
StateVector basis_state(const SystemShape& shape, const std::vector<unsigned>& label);

// <a|b>, conjugate-linear in the first argument.  Shapes must agree.
cplx inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& v);

// v / |v|; throws degenerate_state_error when |v| < 1e-12.
StateVector normalize(const StateVector& v);

// Rearranges particles: the digit of particle k moves to slot sigma(k).
StateVector apply_particle_permutation(const StateVector& v, const Permutation& sigma);

// Relabels levels at every site: digit d becomes pi(d).
StateVector apply_level_permutation(const StateVector& v, const Permutation& pi);

// Scales v by a unit phase so the first amplitude of magnitude > threshold
// (in basis-index order) becomes real positive.  Zero vectors pass through.
StateVector phase_fixed_first_nonzero(const StateVector& v, double threshold = 1e-9);

// Scales v by a unit phase so the largest-magnitude amplitude (ties broken by
// lowest basis index) becomes real positive.  Zero vectors pass through.
StateVector phase_fixed_largest(const StateVector& v);

// Reduced density matrix over the kept particles (1-based ids, strictly
// ascending, non-empty, proper subset not required -- keeping all particles
// returns |v><v|).  The kept subsystem is ordered as listed.
DensityMatrix partial_trace(const StateVector& v, const std::vector<unsigned>& keep);

// max |m[i][j] - conj(m[j][i])| over all entries (0 for exactly Hermitian input).
double hermiticity_defect(const HermitianMatrix& m);

struct EigenSystem {
    std::vector<double> values;    // descending
    std::vector<cplx> vectors;     // row-major; column k is the k-th eigenvector
};

// Eigenvalues (descending) of a Hermitian matrix via cyclic Jacobi rotations.
// Converged when every off-diagonal magnitude is below 1e-12; throws
// numerical_failure_error after 100 sweeps without convergence.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);
EigenSystem hermitian_eigensystem(const HermitianMatrix& m);

} // namespace schurweyl
