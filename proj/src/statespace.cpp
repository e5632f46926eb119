#include "schurweyl/statespace.hpp"

#include "schurweyl/errors.hpp"
#include "schurweyl/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schurweyl {

namespace {

void check_permutation(const Permutation& sigma, unsigned n, const char* who) {
    if (sigma.size() != n)
        throw std::invalid_argument(std::string(who) + ": permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (unsigned image : sigma) {
        if (image < 1 || image > n || seen[image - 1])
            throw std::invalid_argument(std::string(who) + ": not a permutation of 1.." +
                                        std::to_string(n));
        seen[image - 1] = true;
    }
}

void check_same_shape(const StateVector& a, const StateVector& b, const char* who) {
    if (!(a.shape == b.shape))
        throw std::invalid_argument(std::string(who) + ": shapes differ");
}

void check_consistent(const StateVector& v, const char* who) {
    if (v.amplitudes.size() != dimension(v.shape))
        throw std::invalid_argument(std::string(who) + ": amplitude count does not match shape");
}

} // namespace

std::size_t dimension(const SystemShape& shape) {
    if (shape.particles == 0 || shape.levels == 0)
        throw std::invalid_argument("shape: particles and levels must be positive");
    if (shape.particles > kMaxParticles)
        throw resource_limit_error("shape: particle count " + std::to_string(shape.particles) +
                                   " exceeds the cap of " + std::to_string(kMaxParticles));
    std::size_t dim = 1;
    for (unsigned k = 0; k < shape.particles; ++k) {
        if (dim > kMaxDimension / shape.levels)
            throw resource_limit_error("shape: dimension exceeds the cap of " +
                                       std::to_string(kMaxDimension));
        dim *= shape.levels;
    }
    return dim;
}

std::size_t index_of(const SystemShape& shape, const std::vector<unsigned>& label) {
    dimension(shape);
    if (label.size() != shape.particles)
        throw std::invalid_argument("index_of: label length does not match particle count");
    std::size_t index = 0;
    for (unsigned digit : label) {
        if (digit < 1 || digit > shape.levels)
            throw std::invalid_argument("index_of: digit " + std::to_string(digit) +
                                        " outside 1.." + std::to_string(shape.levels));
        index = index * shape.levels + (digit - 1);
    }
    return index;
}

std::vector<unsigned> label_of(const SystemShape& shape, std::size_t index) {
    std::size_t dim = dimension(shape);
    if (index >= dim)
        throw std::invalid_argument("label_of: index out of range");
    std::vector<unsigned> label(shape.particles);
    for (unsigned k = shape.particles; k-- > 0;) {
        label[k] = static_cast<unsigned>(index % shape.levels) + 1;
        index /= shape.levels;
    }
    return label;
}

StateVector basis_state(const SystemShape& shape, const std::vector<unsigned>& label) {
    StateVector v{shape, std::vector<cplx>(dimension(shape), cplx(0.0))};
    v.amplitudes[index_of(shape, label)] = 1.0;
    return v;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    check_same_shape(a, b, "inner_product");
    check_consistent(a, "inner_product");
    check_consistent(b, "inner_product");
    cplx sum = 0.0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
        sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return sum;
}

double norm(const StateVector& v) {
    check_consistent(v, "norm");
    double sum = 0.0;
    for (const cplx& a : v.amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector normalize(const StateVector& v) {
    double n = norm(v);
    if (n < 1e-12)
        throw degenerate_state_error("normalize: vector norm " + std::to_string(n) +
                                     " is below 1e-12");
    StateVector out = v;
    for (cplx& a : out.amplitudes) a /= n;
    return out;
}

StateVector apply_particle_permutation(const StateVector& v, const Permutation& sigma) {
    check_consistent(v, "apply_particle_permutation");
    check_permutation(sigma, v.shape.particles, "apply_particle_permutation");
    const unsigned n = v.shape.levels;
    StateVector out{v.shape, std::vector<cplx>(v.dim(), cplx(0.0))};
    std::vector<unsigned> digits(v.shape.particles), moved(v.shape.particles);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        if (v.amplitudes[idx] == cplx(0.0)) continue;
        std::size_t rest = idx;
        for (unsigned k = v.shape.particles; k-- > 0;) {
            digits[k] = static_cast<unsigned>(rest % n);
            rest /= n;
        }
        for (unsigned k = 0; k < v.shape.particles; ++k)
            moved[sigma[k] - 1] = digits[k];
        std::size_t target = 0;
        for (unsigned d : moved) target = target * n + d;
        out.amplitudes[target] = v.amplitudes[idx];
    }
    return out;
}

StateVector apply_level_permutation(const StateVector& v, const Permutation& pi) {
    check_consistent(v, "apply_level_permutation");
    check_permutation(pi, v.shape.levels, "apply_level_permutation");
    const unsigned n = v.shape.levels;
    StateVector out{v.shape, std::vector<cplx>(v.dim(), cplx(0.0))};
    std::vector<unsigned> digits(v.shape.particles);
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        if (v.amplitudes[idx] == cplx(0.0)) continue;
        std::size_t rest = idx;
        for (unsigned k = v.shape.particles; k-- > 0;) {
            digits[k] = static_cast<unsigned>(rest % n);
            rest /= n;
        }
        std::size_t target = 0;
        for (unsigned d : digits) target = target * n + (pi[d] - 1);
        out.amplitudes[target] = v.amplitudes[idx];
    }
    return out;
}

StateVector phase_fixed_first_nonzero(const StateVector& v, double threshold) {
    check_consistent(v, "phase_fixed_first_nonzero");
    for (const cplx& a : v.amplitudes) {
        if (std::abs(a) <= threshold) continue;
        StateVector out = v;
        const cplx phase = std::conj(a) / std::abs(a);
        for (cplx& x : out.amplitudes) x *= phase;
        return out;
    }
    return v;
}

StateVector phase_fixed_largest(const StateVector& v) {
    check_consistent(v, "phase_fixed_largest");
    std::size_t best = 0;
    double best_mag = 0.0;
    for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
        double mag = std::abs(v.amplitudes[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag == 0.0) return v;
    StateVector out = v;
    const cplx phase = std::conj(v.amplitudes[best]) / best_mag;
    for (cplx& x : out.amplitudes) x *= phase;
    return out;
}

DensityMatrix partial_trace(const StateVector& v, const std::vector<unsigned>& keep) {
    check_consistent(v, "partial_trace");
    const unsigned N = v.shape.particles;
    const unsigned n = v.shape.levels;
    if (keep.empty())
        throw std::invalid_argument("partial_trace: kept subset must be non-empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 1 || keep[i] > N)
            throw std::invalid_argument("partial_trace: particle id out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("partial_trace: kept ids must be strictly ascending");
    }

    std::vector<bool> kept(N, false);
    for (unsigned id : keep) kept[id - 1] = true;

    std::size_t keep_dim = 1, rest_dim = 1;
    for (unsigned k = 0; k < N; ++k) (kept[k] ? keep_dim : rest_dim) *= n;

    // Strides of each particle slot in the full index, then the flat index of a
    // (kept, rest) pair is a fixed linear combination of the two sub-indices.
    std::vector<std::size_t> stride(N, 1);
    for (unsigned k = N - 1; k-- > 0;) stride[k] = stride[k + 1] * n;

    auto combine = [&](std::size_t a, std::size_t r) {
        std::size_t idx = 0;
        for (unsigned k = N; k-- > 0;) {
            std::size_t& sub = kept[k] ? a : r;
            idx += (sub % n) * stride[k];
            sub /= n;
        }
        return idx;
    };

    DensityMatrix rho{keep_dim, std::vector<cplx>(keep_dim * keep_dim, cplx(0.0))};
    std::vector<cplx> column(keep_dim);
    for (std::size_t r = 0; r < rest_dim; ++r) {
        for (std::size_t a = 0; a < keep_dim; ++a)
            column[a] = v.amplitudes[combine(a, r)];
        for (std::size_t a = 0; a < keep_dim; ++a) {
            if (column[a] == cplx(0.0)) continue;
            for (std::size_t b = 0; b < keep_dim; ++b)
                rho.at(a, b) += column[a] * std::conj(column[b]);
        }
    }
    return rho;
}

double hermiticity_defect(const HermitianMatrix& m) {
    if (m.entries.size() != m.dim * m.dim)
        throw std::invalid_argument("hermiticity_defect: entry count does not match dimension");
    double defect = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = i; j < m.dim; ++j)
            defect = std::max(defect, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return defect;
}

namespace {

constexpr double kJacobiTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

// Cyclic complex Jacobi.  Each rotation zeroes one off-diagonal pair with the
// unitary [[c, -s e^{i a}], [s e^{-i a}, c]], a = arg(A[p][q]).
void jacobi(HermitianMatrix& A, std::vector<cplx>* V) {
    const std::size_t n = A.dim;
    if (V) {
        V->assign(n * n, cplx(0.0));
        for (std::size_t i = 0; i < n; ++i) (*V)[i * n + i] = 1.0;
    }
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(A.at(p, q)));
        if (off < kJacobiTol) return;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double b = std::abs(A.at(p, q));
                if (b == 0.0) continue;
                const cplx phase = A.at(p, q) / b;                      // e^{i a}
                const double theta =
                    0.5 * std::atan2(2.0 * b, A.at(p, p).real() - A.at(q, q).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const cplx spc = s * phase;        // s e^{i a}
                const cplx smc = s * std::conj(phase);

                // Rows p, q of U^H A.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = A.at(p, k), aqk = A.at(q, k);
                    A.at(p, k) = c * apk + spc * aqk;
                    A.at(q, k) = -smc * apk + c * aqk;
                }
                // Columns p, q of (U^H A) U.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = A.at(k, p), akq = A.at(k, q);
                    A.at(k, p) = akp * c + akq * smc;
                    A.at(k, q) = -akp * spc + akq * c;
                }
                A.at(p, p) = A.at(p, p).real();
                A.at(q, q) = A.at(q, q).real();
                A.at(q, p) = std::conj(A.at(p, q));
                if (V) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = (*V)[k * n + p], vkq = (*V)[k * n + q];
                        (*V)[k * n + p] = vkp * c + vkq * smc;
                        (*V)[k * n + q] = -vkp * spc + vkq * c;
                    }
                }
            }
        }
    }
    throw numerical_failure_error("Jacobi eigensolver: no convergence within " +
                                  std::to_string(kJacobiMaxSweeps) + " sweeps");
}

void check_eigen_input(const HermitianMatrix& m) {
    if (m.dim == 0)
        throw std::invalid_argument("eigensolver: empty matrix");
    if (m.entries.size() != m.dim * m.dim)
        throw std::invalid_argument("eigensolver: entry count does not match dimension");
    if (hermiticity_defect(m) > 1e-10)
        throw std::invalid_argument("eigensolver: matrix is not Hermitian within 1e-10");
}

} // namespace

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
    check_eigen_input(m);
    HermitianMatrix work = m;
    jacobi(work, nullptr);
    std::vector<double> values(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) values[i] = work.at(i, i).real();
    std::sort(values.rbegin(), values.rend());
    return values;
}

EigenSystem hermitian_eigensystem(const HermitianMatrix& m) {
    check_eigen_input(m);
    HermitianMatrix work = m;
    std::vector<cplx> V;
    jacobi(work, &V);

    std::vector<std::size_t> order(m.dim);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::vector<double> raw(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) raw[i] = work.at(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });

    EigenSystem out;
    out.values.resize(m.dim);
    out.vectors.assign(m.dim * m.dim, cplx(0.0));
    for (std::size_t k = 0; k < m.dim; ++k) {
        out.values[k] = raw[order[k]];
        for (std::size_t i = 0; i < m.dim; ++i)
            out.vectors[i * m.dim + k] = V[i * m.dim + order[k]];
    }
    return out;
}

} // namespace schurweyl
