#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "schurweyl/errors.hpp"
#include "schurweyl/statespace.hpp"

#include <cmath>
#include <random>

using namespace schurweyl;

namespace {

StateVector random_state(const SystemShape& shape, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    StateVector v{shape, std::vector<cplx>(dimension(shape))};
    for (cplx& a : v.amplitudes) a = cplx(g(rng), g(rng));
    return normalize(v);
}

HermitianMatrix random_hermitian(std::size_t dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    HermitianMatrix m{dim, std::vector<cplx>(dim * dim)};
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = g(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m.at(i, j) = cplx(g(rng), g(rng));
            m.at(j, i) = std::conj(m.at(i, j));
        }
    }
    return m;
}

} // namespace

TEST_CASE("dimension and caps") {
    CHECK(dimension({3, 2}) == 8);
    CHECK(dimension({2, 4}) == 16);
    CHECK(dimension({1, 1}) == 1);
    CHECK_THROWS_AS(dimension({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dimension({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(dimension({21, 2}), resource_limit_error);
    CHECK_THROWS_AS(dimension({13, 4}), resource_limit_error);   // 4^13 = 2^26 > cap
}

TEST_CASE("index and label round trip") {
    SystemShape s{3, 2};
    CHECK(index_of(s, {1, 1, 1}) == 0);
    CHECK(index_of(s, {1, 1, 2}) == 1);
    CHECK(index_of(s, {2, 1, 1}) == 4);   // particle 1 most significant
    CHECK(index_of(s, {2, 2, 2}) == 7);
    CHECK(index_of({2, 2}, {1, 2}) == 1);

    for (std::size_t i = 0; i < 8; ++i) CHECK(index_of(s, label_of(s, i)) == i);
    SystemShape s34{3, 4};
    for (std::size_t i = 0; i < 64; ++i) CHECK(index_of(s34, label_of(s34, i)) == i);

    CHECK_THROWS_AS(index_of(s, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(index_of(s, {1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(index_of(s, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(label_of(s, 8), std::invalid_argument);
}

TEST_CASE("inner product, norm, normalize") {
    SystemShape s{2, 2};
    StateVector a = basis_state(s, {1, 2});
    StateVector b = basis_state(s, {1, 2});
    a.amplitudes[1] = cplx(0.0, 1.0);                       // a = i|12>
    CHECK(inner_product(a, b) == cplx(0.0, -1.0));          // conjugate-linear first slot
    CHECK(inner_product(b, a) == cplx(0.0, 1.0));

    StateVector z{s, std::vector<cplx>(4, cplx(0.0))};
    CHECK(norm(z) == 0.0);
    CHECK_THROWS_AS(normalize(z), degenerate_state_error);

    StateVector w{s, {cplx(3.0), cplx(0.0), cplx(4.0), cplx(0.0)}};
    CHECK(norm(w) == doctest::Approx(5.0));
    auto wn = normalize(w);
    CHECK(norm(wn) == doctest::Approx(1.0));
    CHECK(wn.amplitudes[0].real() == doctest::Approx(0.6));
}

TEST_CASE("particle permutations") {
    SystemShape s2{2, 2};
    auto swapped = apply_particle_permutation(basis_state(s2, {1, 2}), {2, 1});
    CHECK(swapped.amplitudes[index_of(s2, {2, 1})] == cplx(1.0));

    // Cycle 1->2->3->1 moves digit a to slot 2, b to 3, c to 1: |abc> -> |cab>.
    SystemShape s3{3, 3};
    auto cycled = apply_particle_permutation(basis_state(s3, {1, 2, 3}), {2, 3, 1});
    CHECK(cycled.amplitudes[index_of(s3, {3, 1, 2})] == cplx(1.0));

    // Composition: applying sigma then tau equals applying tau o sigma.
    StateVector v = random_state({4, 2}, 11);
    Permutation sigma{2, 4, 1, 3}, tau{3, 1, 4, 2};
    Permutation comp(4);
    for (unsigned k = 0; k < 4; ++k) comp[k] = tau[sigma[k] - 1];
    auto two_step = apply_particle_permutation(apply_particle_permutation(v, sigma), tau);
    auto one_step = apply_particle_permutation(v, comp);
    for (std::size_t i = 0; i < v.dim(); ++i)
        CHECK(std::abs(two_step.amplitudes[i] - one_step.amplitudes[i]) < 1e-15);

    // Unitarity.
    StateVector w = random_state({4, 2}, 12);
    auto pv = apply_particle_permutation(v, sigma);
    auto pw = apply_particle_permutation(w, sigma);
    CHECK(std::abs(inner_product(pv, pw) - inner_product(v, w)) < 1e-14);

    CHECK_THROWS_AS(apply_particle_permutation(v, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(apply_particle_permutation(v, {1, 1, 2, 2}), std::invalid_argument);
}

TEST_CASE("level permutations") {
    SystemShape s{2, 2};
    auto flipped = apply_level_permutation(basis_state(s, {1, 2}), {2, 1});
    CHECK(flipped.amplitudes[index_of(s, {2, 1})] == cplx(1.0));

    SystemShape s3{2, 3};
    auto rotated = apply_level_permutation(basis_state(s3, {1, 3}), {2, 3, 1});
    CHECK(rotated.amplitudes[index_of(s3, {2, 1})] == cplx(1.0));

    // A level permutation commutes with every particle permutation.
    StateVector v = random_state({3, 3}, 21);
    Permutation sigma{3, 1, 2}, pi{2, 3, 1};
    auto ab = apply_level_permutation(apply_particle_permutation(v, sigma), pi);
    auto ba = apply_particle_permutation(apply_level_permutation(v, pi), sigma);
    for (std::size_t i = 0; i < v.dim(); ++i)
        CHECK(std::abs(ab.amplitudes[i] - ba.amplitudes[i]) < 1e-15);

    CHECK_THROWS_AS(apply_level_permutation(v, {2, 1}), std::invalid_argument);
}

TEST_CASE("partial trace against the naive oracle") {
    for (unsigned seed : {1u, 2u, 3u}) {
        for (auto [N, n] : {std::pair<unsigned, unsigned>{3, 2}, {4, 2}, {3, 3}}) {
            StateVector v = random_state({N, n}, seed * 100 + N * 10 + n);
            std::vector<std::vector<unsigned>> subsets = {{1}, {2}, {N}, {1, 2}};
            for (const auto& keep : subsets) {
                auto rho = partial_trace(v, keep);
                std::vector<unsigned> keep0;
                for (unsigned id : keep) keep0.push_back(id - 1);
                auto want = testoracle::naive_partial_trace(v.amplitudes, N, n, keep0);
                REQUIRE(rho.entries.size() == want.size());
                for (std::size_t i = 0; i < want.size(); ++i)
                    CHECK(std::abs(rho.entries[i] - want[i]) < 1e-13);
            }
        }
    }
}

TEST_CASE("partial trace properties") {
    StateVector v = random_state({4, 2}, 77);
    auto rho = partial_trace(v, {2, 3});
    cplx tr = 0.0;
    for (std::size_t i = 0; i < rho.dim; ++i) tr += rho.at(i, i);
    CHECK(std::abs(tr - cplx(1.0)) < 1e-13);
    CHECK(hermiticity_defect(rho) < 1e-15);

    // Keeping every particle returns the pure projector.
    auto full = partial_trace(v, {1, 2, 3, 4});
    for (std::size_t i = 0; i < full.dim; ++i)
        for (std::size_t j = 0; j < full.dim; ++j)
            CHECK(std::abs(full.at(i, j) - v.amplitudes[i] * std::conj(v.amplitudes[j])) < 1e-15);

    // Complementary cuts of a pure state share their nonzero spectrum.
    auto ra = hermitian_eigenvalues(partial_trace(v, {1}));
    auto rb = hermitian_eigenvalues(partial_trace(v, {2, 3, 4}));
    for (std::size_t i = 0; i < ra.size(); ++i) CHECK(ra[i] == doctest::Approx(rb[i]).epsilon(1e-10));

    // A product state reduces to a pure marginal.
    SystemShape s{2, 2};
    StateVector prod{s, {cplx(0.5), cplx(0.5), cplx(0.5), cplx(0.5)}};   // |+>|+>
    auto rp = hermitian_eigenvalues(partial_trace(prod, {1}));
    CHECK(rp[0] == doctest::Approx(1.0));
    CHECK(rp[1] == doctest::Approx(0.0));

    CHECK_THROWS_AS(partial_trace(v, {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(v, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(v, {3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(v, {5}), std::invalid_argument);
}

TEST_CASE("eigensolver: frozen small matrices") {
    HermitianMatrix m{2, {cplx(0.5), cplx(1.0 / 6.0), cplx(1.0 / 6.0), cplx(0.5)}};
    auto ev = hermitian_eigenvalues(m);
    CHECK(ev[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    HermitianMatrix sx{2, {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)}};
    auto es = hermitian_eigenvalues(sx);
    CHECK(es[0] == doctest::Approx(1.0));
    CHECK(es[1] == doctest::Approx(-1.0));

    // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
    HermitianMatrix mc{2, {cplx(1.0), cplx(0.0, 1.0), cplx(0.0, -1.0), cplx(1.0)}};
    auto ec = hermitian_eigenvalues(mc);
    CHECK(ec[0] == doctest::Approx(2.0));
    CHECK(ec[1] == doctest::Approx(0.0));

    // Already diagonal input converges immediately.
    HermitianMatrix d{3, std::vector<cplx>(9, cplx(0.0))};
    d.at(0, 0) = -1.0; d.at(1, 1) = 5.0; d.at(2, 2) = 2.0;
    auto ed = hermitian_eigenvalues(d);
    CHECK(ed == std::vector<double>{5.0, 2.0, -1.0});
}

TEST_CASE("eigensolver: random matrices reconstruct") {
    for (unsigned seed : {5u, 6u, 7u}) {
        for (std::size_t dim : {2u, 4u, 7u}) {
            auto m = random_hermitian(dim, seed * 10 + static_cast<unsigned>(dim));
            auto es = hermitian_eigensystem(m);

            // Descending order.
            for (std::size_t i = 1; i < dim; ++i) CHECK(es.values[i - 1] >= es.values[i]);

            // Trace preserved.
            double tr = 0.0, sum = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                tr += m.at(i, i).real();
                sum += es.values[i];
            }
            CHECK(tr == doctest::Approx(sum).epsilon(1e-12));

            // Columns are orthonormal.
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) {
                    cplx dot = 0.0;
                    for (std::size_t i = 0; i < dim; ++i)
                        dot += std::conj(es.vectors[i * dim + a]) * es.vectors[i * dim + b];
                    CHECK(std::abs(dot - (a == b ? cplx(1.0) : cplx(0.0))) < 1e-10);
                }

            // A v = lambda v, entrywise.
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t i = 0; i < dim; ++i) {
                    cplx mv = 0.0;
                    for (std::size_t j = 0; j < dim; ++j)
                        mv += m.at(i, j) * es.vectors[j * dim + k];
                    CHECK(std::abs(mv - es.values[k] * es.vectors[i * dim + k]) < 1e-9);
                }

            // Plain eigenvalue call agrees with the eigensystem call.
            auto ev = hermitian_eigenvalues(m);
            for (std::size_t i = 0; i < dim; ++i)
                CHECK(ev[i] == doctest::Approx(es.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("eigensolver input validation") {
    HermitianMatrix bad{2, {cplx(0.0), cplx(1.0), cplx(2.0), cplx(0.0)}};
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::invalid_argument);
    HermitianMatrix short_entries{2, {cplx(0.0)}};
    CHECK_THROWS_AS(hermitian_eigenvalues(short_entries), std::invalid_argument);
    HermitianMatrix empty{0, {}};
    CHECK_THROWS_AS(hermitian_eigenvalues(empty), std::invalid_argument);
}
