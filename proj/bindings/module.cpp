#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "schurweyl/claims.hpp"
#include "schurweyl/entanglement.hpp"
#include "schurweyl/partitions.hpp"
#include "schurweyl/schur_weyl.hpp"
#include "schurweyl/statespace.hpp"

namespace py = pybind11;
using namespace schurweyl;

namespace {

// Amplitudes come in flat basis order (particle 1 most significant, 1-based
// digits); states are normalized on ingest so callers can pass raw
// combinations.
StateVector make_state(const std::vector<cplx>& amplitudes, unsigned particles,
                       unsigned levels) {
    const SystemShape shape{particles, levels};
    const std::size_t dim = dimension(shape);
    if (amplitudes.size() != dim)
        throw std::invalid_argument("state: expected " + std::to_string(dim) +
                                    " amplitudes for " + std::to_string(particles) + " x " +
                                    std::to_string(levels) + ", got " +
                                    std::to_string(amplitudes.size()));
    return normalize(StateVector{shape, amplitudes});
}

double half(int twice) { return twice / 2.0; }

py::dict sector_member_entry(const SymmetrySector& sector, std::size_t index) {
    const CoupledLabel label = coupled_label(sector, index);
    py::dict d;
    d["j"] = half(label.twice_j);
    d["m"] = half(label.twice_m);
    d["copy"] = label.copy_index;
    d["amplitudes"] = sector.members[index].state.amplitudes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Symmetry-sector decomposition and entanglement diagnostics for N identical "
              "n-level particles";

    m.def(
        "decomposition",
        [](unsigned particles, unsigned levels) {
            const DecompositionTable table = decomposition_table(particles, levels);
            py::list rows;
            for (const DecompositionRecord& r : table.rows) {
                py::dict d;
                d["shape"] = r.shape.parts();
                d["multiplicity"] = r.multiplicity;
                d["block_dim"] = r.block_dim;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["total"] = table.total;
            out["space_dim"] = table.space_dim;
            return out;
        },
        py::arg("particles"), py::arg("levels"),
        "Shape-by-shape multiplicity/dimension table with totals");

    m.def(
        "coupled_basis",
        [](unsigned particles) {
            py::list out;
            for (const SymmetrySector& sector : couple_spins(particles))
                for (std::size_t i = 0; i < sector.members.size(); ++i)
                    out.append(sector_member_entry(sector, i));
            return out;
        },
        py::arg("particles"),
        "Sequentially coupled two-level basis: dicts with j, m, copy, amplitudes");

    m.def(
        "symmetry_adapted_basis",
        [](unsigned particles, unsigned levels) {
            py::list out;
            for (const SymmetrySector& sector : build_decomposition({particles, levels}))
                for (const SectorMember& member : sector.members) {
                    py::dict d;
                    d["shape"] = sector.shape.parts();
                    d["copy"] = sector.copy_index;
                    d["occupancy"] = member.occupancy;
                    d["amplitudes"] = member.state.amplitudes;
                    out.append(d);
                }
            return out;
        },
        py::arg("particles"), py::arg("levels"),
        "Symmetrizer-built orthonormal basis: dicts with shape, copy, occupancy, amplitudes");

    m.def(
        "mes_basis",
        [](unsigned particles) {
            py::list out;
            for (const MESState& s : generate_mes_basis(particles).states) {
                py::dict d;
                d["j"] = half(s.source.twice_j);
                d["m"] = half(s.source.twice_m);
                d["copy"] = s.source.copy_index;
                d["sign"] = s.combination_sign;
                d["amplitudes"] = s.state.amplitudes;
                out.append(d);
            }
            return out;
        },
        py::arg("particles"),
        "Maximally entangled combination basis: dicts with j, m, copy, sign, amplitudes");

    m.def(
        "single_particle_entropies",
        [](const std::vector<cplx>& amplitudes, unsigned particles, unsigned levels) {
            return single_particle_entropies(make_state(amplitudes, particles, levels));
        },
        py::arg("amplitudes"), py::arg("particles"), py::arg("levels"),
        "Reduced entropy (bits) of each particle");

    m.def(
        "bipartite_entropy",
        [](const std::vector<cplx>& amplitudes, unsigned particles, unsigned levels,
           const std::vector<unsigned>& subset) {
            return bipartite_entropy(make_state(amplitudes, particles, levels), subset);
        },
        py::arg("amplitudes"), py::arg("particles"), py::arg("levels"), py::arg("subset"),
        "Entropy (bits) across the cut separating the 1-based subset from the rest");

    m.def(
        "pairwise_concurrences",
        [](const std::vector<cplx>& amplitudes, unsigned particles) {
            py::list out;
            for (const PairConcurrence& p :
                 pairwise_concurrences(make_state(amplitudes, particles, 2)))
                out.append(py::make_tuple(p.first, p.second, p.value));
            return out;
        },
        py::arg("amplitudes"), py::arg("particles"),
        "Two-particle mixed-state concurrence for every pair (two-level only)");

    m.def(
        "spin_flip_concurrence",
        [](const std::vector<cplx>& amplitudes, unsigned particles) {
            return spin_flip_concurrence(make_state(amplitudes, particles, 2));
        },
        py::arg("amplitudes"), py::arg("particles"),
        "Global spin-flip concurrence |<psi*|flip|psi>| (two-level only)");

    m.def(
        "dicke_profile",
        [](unsigned particles) {
            py::list out;
            for (const DickePoint& p : dicke_entropy_profile(particles))
                out.append(py::make_tuple(half(p.twice_projection), p.entropy));
            return out;
        },
        py::arg("particles"),
        "(m, entropy) down the symmetric ladder from m = N/2 to -N/2");

    m.def(
        "product_blocks",
        [](const std::vector<cplx>& amplitudes, unsigned particles, unsigned levels) {
            py::list out;
            for (const ProductBlock& b :
                 product_structure(make_state(amplitudes, particles, levels))) {
                py::dict d;
                d["particles"] = b.particles;
                d["amplitudes"] = b.state.amplitudes;
                out.append(d);
            }
            return out;
        },
        py::arg("amplitudes"), py::arg("particles"), py::arg("levels"),
        "Finest tensor factorization: blocks of 1-based particle ids with factor states");

    m.def(
        "sector_weights",
        [](const std::vector<cplx>& amplitudes, unsigned particles, unsigned levels) {
            const StateVector v = make_state(amplitudes, particles, levels);
            const std::vector<SymmetrySector> sectors =
                levels == 2 && particles <= kMaxCoupledParticles
                    ? couple_spins(particles)
                    : build_decomposition(v.shape);
            py::list out;
            for (const SectorWeight& w : sector_projections(v, sectors)) {
                py::dict d;
                d["shape"] = w.shape.parts();
                d["copy"] = w.copy_index;
                d["weight"] = w.weight;
                out.append(d);
            }
            return out;
        },
        py::arg("amplitudes"), py::arg("particles"), py::arg("levels"),
        "Squared projection of the state onto each symmetry sector copy");

    m.def(
        "verify_claims",
        []() {
            py::list out;
            for (const ClaimReport& claim : verify_claims_three_qubit()) {
                py::list conventions;
                for (const ConventionOutcome& c : claim.conventions) {
                    py::dict d;
                    d["descriptor"] = c.descriptor;
                    d["matched"] = c.matched;
                    d["residual"] = c.residual;
                    d["entropies"] = c.entropies;
                    d["blocks"] = c.blocks;
                    d["pair_concurrence"] = c.pair_concurrence;
                    conventions.append(d);
                }
                py::dict d;
                d["id"] = claim.id;
                d["statement"] = claim.statement;
                d["status"] = to_string(claim.status);
                d["best_convention"] = claim.best_convention;
                d["conventions"] = conventions;
                out.append(d);
            }
            return out;
        },
        "Re-derive the three-qubit combination claims under every swept convention");
}
