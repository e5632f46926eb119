#include "schurweyl/entanglement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "schurweyl/errors.hpp"

namespace schurweyl {

namespace {

constexpr double kEigenFloor = -1e-10;          // reduced-state eigenvalues below this are rejected
constexpr double kNormTolerance = 1e-8;
constexpr double kProductTolerance = 1e-9;      // entropy below this counts as a clean cut
constexpr double kSelfConjugateTolerance = 1e-9;

void require_normalized(const StateVector& v, const char* who) {
    if (std::abs(norm(v) - 1.0) > kNormTolerance)
        throw std::invalid_argument(std::string(who) + ": state is not normalized");
}

void require_two_level(const StateVector& v, const char* who) {
    if (v.shape.levels != 2)
        throw std::invalid_argument(std::string(who) + ": defined for two-level particles only");
}

void require_density(const HermitianMatrix& rho, const char* who) {
    if (rho.dim == 0 || rho.entries.size() != rho.dim * rho.dim)
        throw std::invalid_argument(std::string(who) + ": entry count does not match dimension");
    if (hermiticity_defect(rho) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within 1e-10");
    cplx trace = 0.0;
    for (std::size_t i = 0; i < rho.dim; ++i) trace += rho.at(i, i);
    if (std::abs(trace - 1.0) > kNormTolerance)
        throw std::invalid_argument(std::string(who) + ": trace differs from 1");
}

double entropy_from_eigenvalues(const std::vector<double>& values, const char* who) {
    double s = 0.0;
    for (double lam : values) {
        if (lam < kEigenFloor)
            throw std::invalid_argument(std::string(who) + ": eigenvalue " + std::to_string(lam) +
                                        " is negative beyond tolerance");
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return std::max(s, 0.0);
}

// Ascending k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int pos = int(k) - 1;
        while (pos >= 0 && cur[pos] == n - (k - 1 - unsigned(pos))) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (unsigned i = unsigned(pos) + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

std::vector<cplx> matmul(std::size_t d, const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(d * d, cplx(0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const cplx aik = a[i * d + k];
            if (aik == cplx(0.0)) continue;
            for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b[k * d + j];
        }
    return out;
}

}  // namespace

double von_neumann_entropy(const HermitianMatrix& rho) {
    require_density(rho, "von_neumann_entropy");
    return entropy_from_eigenvalues(hermitian_eigenvalues(rho), "von_neumann_entropy");
}

std::vector<double> single_particle_entropies(const StateVector& v) {
    require_normalized(v, "single_particle_entropies");
    std::vector<double> out;
    out.reserve(v.shape.particles);
    for (unsigned k = 1; k <= v.shape.particles; ++k)
        out.push_back(von_neumann_entropy(partial_trace(v, {k})));
    return out;
}

double bipartite_entropy(const StateVector& v, const std::vector<unsigned>& subset) {
    require_normalized(v, "bipartite_entropy");
    return von_neumann_entropy(partial_trace(v, subset));
}

EntropyReport build_entropy_report(const StateVector& v, BipartitionMode mode) {
    require_normalized(v, "build_entropy_report");
    EntropyReport report;
    report.per_particle = single_particle_entropies(v);
    const unsigned n = v.shape.particles;
    if (mode == BipartitionMode::singles) {
        for (unsigned k = 1; k <= n; ++k)
            report.bipartitions.push_back({{k}, report.per_particle[k - 1]});
        return report;
    }
    for (unsigned size = 1; size <= n / 2; ++size)
        for (const auto& subset : combinations(n, size)) {
            if (2 * size == n && subset.front() != 1) continue;   // list each half-split once
            report.bipartitions.push_back({subset, bipartite_entropy(v, subset)});
        }
    return report;
}

double wootters_concurrence(const DensityMatrix& rho) {
    require_density(rho, "wootters_concurrence");
    if (rho.dim != 4)
        throw std::invalid_argument("wootters_concurrence: expected a two-particle 4x4 matrix");

    // (sy x sy) conj(rho) (sy x sy), written entrywise.
    static constexpr double kFlipSign[4] = {-1.0, 1.0, 1.0, -1.0};
    std::vector<cplx> tilde(16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            tilde[i * 4 + j] = kFlipSign[i] * kFlipSign[j] * std::conj(rho.at(3 - i, 3 - j));

    EigenSystem es = hermitian_eigensystem(rho);
    if (es.values.back() < kEigenFloor)
        throw std::invalid_argument("wootters_concurrence: matrix is not positive semidefinite");
    std::vector<cplx> root(16, cplx(0.0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                root[i * 4 + j] += es.vectors[i * 4 + k] *
                                   std::sqrt(std::max(0.0, es.values[k])) *
                                   std::conj(es.vectors[j * 4 + k]);

    std::vector<cplx> m = matmul(4, matmul(4, root, tilde), root);
    HermitianMatrix sym{4, std::vector<cplx>(16)};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            sym.entries[i * 4 + j] = 0.5 * (m[i * 4 + j] + std::conj(m[j * 4 + i]));

    std::vector<double> vals = hermitian_eigenvalues(sym);
    double c = std::sqrt(std::max(0.0, vals[0]));
    for (std::size_t k = 1; k < 4; ++k) c -= std::sqrt(std::max(0.0, vals[k]));
    return std::max(0.0, c);
}

std::vector<PairConcurrence> pairwise_concurrences(const StateVector& v) {
    require_two_level(v, "pairwise_concurrences");
    require_normalized(v, "pairwise_concurrences");
    if (v.shape.particles < 2)
        throw std::invalid_argument("pairwise_concurrences: needs at least two particles");
    std::vector<PairConcurrence> out;
    for (unsigned i = 1; i <= v.shape.particles; ++i)
        for (unsigned j = i + 1; j <= v.shape.particles; ++j)
            out.push_back({i, j, wootters_concurrence(partial_trace(v, {i, j}))});
    return out;
}

double spin_flip_concurrence(const StateVector& v) {
    require_two_level(v, "spin_flip_concurrence");
    require_normalized(v, "spin_flip_concurrence");
    const std::size_t d = v.dim();
    cplx sum = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
        const double sign = (std::popcount(t) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * v.amplitudes[t] * v.amplitudes[d - 1 - t];
    }
    return std::abs(sum);
}

ConcurrenceReport build_concurrence_report(const StateVector& v) {
    ConcurrenceReport report;
    report.pairwise = pairwise_concurrences(v);
    report.global = spin_flip_concurrence(v);
    return report;
}

StateVector conjugate_state(const StateVector& v) {
    require_two_level(v, "conjugate_state");
    return conjugate_state(v, Permutation{2, 1});
}

StateVector conjugate_state(const StateVector& v, const Permutation& level_swap) {
    require_normalized(v, "conjugate_state");
    return phase_fixed_largest(apply_level_permutation(v, level_swap));
}

std::vector<StateVector> mes_pair(const StateVector& v) {
    const StateVector c = conjugate_state(v);
    if (std::abs(inner_product(c, v)) > 1.0 - kSelfConjugateTolerance) return {v};
    StateVector plus = v;
    StateVector minus = v;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        plus.amplitudes[i] += c.amplitudes[i];
        minus.amplitudes[i] -= c.amplitudes[i];
    }
    return {normalize(plus), normalize(minus)};
}

MESBasis generate_mes_basis(unsigned particles) {
    if (particles == 0)
        throw std::invalid_argument("generate_mes_basis: particle count must be positive");
    if (particles > kMaxMESParticles)
        throw resource_limit_error("generate_mes_basis: particle count " +
                                   std::to_string(particles) + " exceeds the cap of " +
                                   std::to_string(kMaxMESParticles));

    MESBasis basis;
    basis.particles = particles;
    for (const SymmetrySector& sector : couple_spins(particles)) {
        const std::size_t members = sector.members.size();
        for (std::size_t i = 0; i < (members + 1) / 2; ++i) {
            std::vector<StateVector> pair = mes_pair(sector.members[i].state);
            const CoupledLabel label = coupled_label(sector, i);
            if (pair.size() == 2) {
                basis.states.push_back({std::move(pair[0]), label, +1});
                basis.states.push_back({std::move(pair[1]), label, -1});
            } else {
                basis.states.push_back({std::move(pair[0]), label, 0});
            }
        }
    }
    const std::size_t expected = std::size_t(1) << particles;
    if (basis.states.size() != expected)
        throw numerical_failure_error("generate_mes_basis: built " +
                                      std::to_string(basis.states.size()) + " states, expected " +
                                      std::to_string(expected));
    return basis;
}

std::vector<DickePoint> dicke_entropy_profile(unsigned particles) {
    if (particles == 0)
        throw std::invalid_argument("dicke_entropy_profile: particle count must be positive");
    if (particles > kMaxDickeParticles)
        throw resource_limit_error("dicke_entropy_profile: particle count " +
                                   std::to_string(particles) + " exceeds the cap of " +
                                   std::to_string(kMaxDickeParticles));

    StateVector ladder = basis_state({particles, 2}, std::vector<unsigned>(particles, 1));
    std::vector<DickePoint> out;
    for (int tm = int(particles);; tm -= 2) {
        out.push_back({tm, von_neumann_entropy(partial_trace(ladder, {1}))});
        if (tm == -int(particles)) break;
        ladder = normalize(lowering_image(ladder));
    }
    return out;
}

namespace {

// Splits u (on the 1-based global ids in `ids`) along the local subset, into
// a factor on the subset and a factor on the rest.
void split_factors(const StateVector& u, const std::vector<unsigned>& local_subset,
                   StateVector& part, StateVector& rest) {
    const unsigned n = u.shape.particles;
    const unsigned levels = u.shape.levels;
    std::vector<bool> in_subset(n + 1, false);
    for (unsigned p : local_subset) in_subset[p] = true;

    const unsigned nA = unsigned(local_subset.size());
    const unsigned nB = n - nA;
    std::size_t dimA = 1, dimB = 1;
    for (unsigned i = 0; i < nA; ++i) dimA *= levels;
    for (unsigned i = 0; i < nB; ++i) dimB *= levels;

    // amplitude matrix: row = subset index, column = rest index
    std::vector<cplx> m(dimA * dimB, cplx(0.0));
    std::vector<unsigned> digits(n);
    for (std::size_t g = 0; g < u.dim(); ++g) {
        std::size_t rem = g;
        for (unsigned k = n; k-- > 0;) {
            digits[k] = unsigned(rem % levels);
            rem /= levels;
        }
        std::size_t a = 0, b = 0;
        for (unsigned k = 0; k < n; ++k) {
            if (in_subset[k + 1]) a = a * levels + digits[k];
            else b = b * levels + digits[k];
        }
        m[a * dimB + b] = u.amplitudes[g];
    }

    std::size_t best = 0;
    double best_weight = -1.0;
    for (std::size_t b = 0; b < dimB; ++b) {
        double w = 0.0;
        for (std::size_t a = 0; a < dimA; ++a) w += std::norm(m[a * dimB + b]);
        if (w > best_weight) {
            best_weight = w;
            best = b;
        }
    }

    part.shape = {nA, levels};
    part.amplitudes.resize(dimA);
    for (std::size_t a = 0; a < dimA; ++a) part.amplitudes[a] = m[a * dimB + best];
    part = phase_fixed_largest(normalize(part));

    rest.shape = {nB, levels};
    rest.amplitudes.assign(dimB, cplx(0.0));
    for (std::size_t b = 0; b < dimB; ++b)
        for (std::size_t a = 0; a < dimA; ++a)
            rest.amplitudes[b] += std::conj(part.amplitudes[a]) * m[a * dimB + b];
    rest = normalize(rest);
}

void factor_recursively(const std::vector<unsigned>& ids, const StateVector& u,
                        std::vector<ProductBlock>& blocks) {
    const unsigned n = unsigned(ids.size());
    if (n > 1) {
        for (unsigned size = 1; size <= n / 2; ++size)
            for (const auto& local : combinations(n, size)) {
                if (2 * size == n && local.front() != 1) continue;
                if (bipartite_entropy(u, local) >= kProductTolerance) continue;

                StateVector part, rest;
                split_factors(u, local, part, rest);
                std::vector<bool> in_subset(n + 1, false);
                for (unsigned p : local) in_subset[p] = true;
                std::vector<unsigned> ids_part, ids_rest;
                for (unsigned k = 0; k < n; ++k)
                    (in_subset[k + 1] ? ids_part : ids_rest).push_back(ids[k]);
                factor_recursively(ids_part, part, blocks);
                factor_recursively(ids_rest, rest, blocks);
                return;
            }
    }
    blocks.push_back({ids, phase_fixed_largest(u)});
}

}  // namespace

std::vector<ProductBlock> product_structure(const StateVector& v) {
    require_normalized(v, "product_structure");
    if (v.shape.particles > kMaxProductParticles)
        throw resource_limit_error("product_structure: particle count " +
                                   std::to_string(v.shape.particles) + " exceeds the cap of " +
                                   std::to_string(kMaxProductParticles));
    std::vector<unsigned> ids(v.shape.particles);
    for (unsigned k = 0; k < v.shape.particles; ++k) ids[k] = k + 1;
    std::vector<ProductBlock> blocks;
    factor_recursively(ids, v, blocks);
    std::sort(blocks.begin(), blocks.end(), [](const ProductBlock& a, const ProductBlock& b) {
        return a.particles.front() < b.particles.front();
    });
    return blocks;
}

}  // namespace schurweyl
