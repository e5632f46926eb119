#include "schurweyl/schur_weyl.hpp"

#include "schurweyl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schurweyl {

namespace {

// ---- tableau machinery ----------------------------------------------------

std::vector<unsigned> reading_word(const StandardTableau& t) {
    std::vector<unsigned> word;
    for (const auto& row : t.rows) word.insert(word.end(), row.begin(), row.end());
    return word;
}

void validate_tableau(const StandardTableau& t, const char* who) {
    const auto& parts = t.shape.parts();
    if (t.rows.size() != parts.size())
        throw std::invalid_argument(std::string(who) + ": row count does not match shape");
    unsigned total = t.shape.total();
    std::vector<bool> seen(total, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.rows[r].size() != parts[r])
            throw std::invalid_argument(std::string(who) + ": row length does not match shape");
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            unsigned e = t.rows[r][c];
            if (e < 1 || e > total || seen[e - 1])
                throw std::invalid_argument(std::string(who) +
                                            ": filling is not a bijection onto 1..N");
            seen[e - 1] = true;
            if (c > 0 && t.rows[r][c - 1] >= e)
                throw std::invalid_argument(std::string(who) + ": rows must strictly increase");
            if (r > 0 && t.rows[r - 1][c] >= e)
                throw std::invalid_argument(std::string(who) + ": columns must strictly increase");
        }
    }
}

// A particle permutation tagged with its parity, as a 1-based image map.
struct SignedPerm {
    Permutation map;
    int sign;
};

int arrangement_parity(const std::vector<unsigned>& sorted_block,
                       const std::vector<unsigned>& arrangement) {
    // Parity of the permutation taking sorted_block to arrangement.
    unsigned inversions = 0;
    std::vector<std::size_t> pos(arrangement.size());
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
        auto it = std::find(sorted_block.begin(), sorted_block.end(), arrangement[i]);
        pos[i] = static_cast<std::size_t>(it - sorted_block.begin());
    }
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

// All permutations fixing each block setwise (the block-wise product group),
// with parity signs.  Blocks are disjoint subsets of 1..n.
std::vector<SignedPerm> block_group(const std::vector<std::vector<unsigned>>& blocks,
                                    unsigned n) {
    // Per-block arrangements with their parities.
    std::vector<std::vector<std::pair<std::vector<unsigned>, int>>> per_block;
    for (const auto& block : blocks) {
        std::vector<unsigned> sorted_block = block;
        std::sort(sorted_block.begin(), sorted_block.end());
        std::vector<std::pair<std::vector<unsigned>, int>> arrangements;
        std::vector<unsigned> arr = sorted_block;
        do {
            arrangements.emplace_back(arr, arrangement_parity(sorted_block, arr));
        } while (std::next_permutation(arr.begin(), arr.end()));
        per_block.push_back(std::move(arrangements));
    }

    std::vector<SignedPerm> group;
    std::vector<std::size_t> pick(per_block.size(), 0);
    for (;;) {
        SignedPerm sp;
        sp.map.resize(n);
        std::iota(sp.map.begin(), sp.map.end(), 1u);
        sp.sign = 1;
        for (std::size_t b = 0; b < per_block.size(); ++b) {
            const auto& [arr, parity] = per_block[b][pick[b]];
            std::vector<unsigned> sorted_block = blocks[b];
            std::sort(sorted_block.begin(), sorted_block.end());
            for (std::size_t i = 0; i < arr.size(); ++i)
                sp.map[sorted_block[i] - 1] = arr[i];
            sp.sign *= parity;
        }
        group.push_back(std::move(sp));

        std::size_t b = 0;
        while (b < pick.size() && ++pick[b] == per_block[b].size()) pick[b++] = 0;
        if (b == pick.size()) break;
    }
    return group;
}

std::vector<std::vector<unsigned>> tableau_columns(const StandardTableau& t) {
    std::vector<std::vector<unsigned>> cols(t.rows.empty() ? 0 : t.rows[0].size());
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

// The composed signed permutations {r o c : r in rows, c in cols} with sgn(c).
std::vector<SignedPerm> symmetrizer_group(const StandardTableau& t, unsigned n) {
    std::vector<std::vector<unsigned>> row_blocks(t.rows.begin(), t.rows.end());
    auto rows = block_group(row_blocks, n);
    auto cols = block_group(tableau_columns(t), n);
    std::vector<SignedPerm> composed;
    composed.reserve(rows.size() * cols.size());
    for (const auto& r : rows)
        for (const auto& c : cols) {
            SignedPerm sp;
            sp.map.resize(n);
            for (unsigned k = 0; k < n; ++k) sp.map[k] = r.map[c.map[k] - 1];
            sp.sign = c.sign;
            composed.push_back(std::move(sp));
        }
    return composed;
}

// out += coeff * (permutation image of the basis string `digits`).
void accumulate_permuted(std::vector<cplx>& out, const std::vector<unsigned>& digits,
                         unsigned levels, const SignedPerm& sp, cplx coeff) {
    const unsigned N = static_cast<unsigned>(digits.size());
    std::size_t target = 0;
    static thread_local std::vector<unsigned> moved;
    moved.assign(N, 0);
    for (unsigned k = 0; k < N; ++k) moved[sp.map[k] - 1] = digits[k];
    for (unsigned d : moved) target = target * levels + (d - 1);
    out[target] += coeff;
}

void check_symmetrizer_caps(const SystemShape& shape, const char* who) {
    if (shape.particles > kMaxSymmetrizerParticles)
        throw resource_limit_error(std::string(who) + ": particle count " +
                                   std::to_string(shape.particles) + " exceeds the cap of " +
                                   std::to_string(kMaxSymmetrizerParticles));
    if (dimension(shape) > kMaxSymmetrizerDimension)
        throw resource_limit_error(std::string(who) + ": dimension " +
                                   std::to_string(dimension(shape)) + " exceeds the cap of " +
                                   std::to_string(kMaxSymmetrizerDimension));
}

std::vector<unsigned> occupancy_of(const std::vector<unsigned>& digits, unsigned levels) {
    std::vector<unsigned> occ(levels, 0);
    for (unsigned d : digits) ++occ[d - 1];
    return occ;
}

// ---- orthonormalization helpers -------------------------------------------

cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double vec_norm(const std::vector<cplx>& a) {
    double s = 0.0;
    for (const cplx& x : a) s += std::norm(x);
    return std::sqrt(s);
}

void subtract_projection(std::vector<cplx>& target, const std::vector<cplx>& onto) {
    cplx c = dot(onto, target);
    for (std::size_t i = 0; i < target.size(); ++i) target[i] -= c * onto[i];
}

} // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    if (dim_symmetric(shape) > kMaxTableauCount)
        throw resource_limit_error("standard_tableaux: shape has more than " +
                                   std::to_string(kMaxTableauCount) + " tableaux");
    const auto& parts = shape.parts();
    const unsigned total = shape.total();

    std::vector<StandardTableau> out;
    StandardTableau work{shape, std::vector<std::vector<unsigned>>(parts.size())};
    auto place = [&](auto&& self, unsigned next) -> void {
        if (next > total) {
            out.push_back(work);
            return;
        }
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (work.rows[r].size() == parts[r]) continue;
            if (r > 0 && work.rows[r].size() == work.rows[r - 1].size()) continue;
            work.rows[r].push_back(next);
            self(self, next + 1);
            work.rows[r].pop_back();
        }
    };
    place(place, 1);

    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

StateVector young_symmetrizer_apply(const StandardTableau& t, const StateVector& v) {
    validate_tableau(t, "young_symmetrizer_apply");
    if (v.shape.particles != t.shape.total())
        throw std::invalid_argument("young_symmetrizer_apply: tableau size does not match "
                                    "particle count");
    check_symmetrizer_caps(v.shape, "young_symmetrizer_apply");
    if (v.amplitudes.size() != dimension(v.shape))
        throw std::invalid_argument("young_symmetrizer_apply: amplitude count mismatch");

    auto group = symmetrizer_group(t, v.shape.particles);
    StateVector out{v.shape, std::vector<cplx>(v.dim(), cplx(0.0))};
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        if (v.amplitudes[idx] == cplx(0.0)) continue;
        auto digits = label_of(v.shape, idx);
        for (const SignedPerm& sp : group)
            accumulate_permuted(out.amplitudes, digits, v.shape.levels, sp,
                                cplx(double(sp.sign)) * v.amplitudes[idx]);
    }
    return out;
}

std::vector<SymmetrySector> build_decomposition(const SystemShape& shape) {
    if (shape.levels < 2)
        throw std::invalid_argument("build_decomposition: at least two levels required");
    check_symmetrizer_caps(shape, "build_decomposition");
    const std::size_t dim = dimension(shape);
    const unsigned N = shape.particles;

    // Occupancy classes in descending lexicographic order of the occupancy
    // vector; indices within a class ascend.
    std::map<std::vector<unsigned>, std::vector<std::size_t>, std::greater<>> classes;
    for (std::size_t idx = 0; idx < dim; ++idx)
        classes[occupancy_of(label_of(shape, idx), shape.levels)].push_back(idx);

    constexpr double kRankTol = 1e-9;
    std::vector<SymmetrySector> sectors;

    for (const Partition& lambda : enumerate_partitions(N)) {
        const std::uint64_t d = dim_unitary(lambda, shape.levels);
        if (d == 0) continue;
        auto tableaux = standard_tableaux(lambda);

        // Members accepted so far for this lambda, grouped by occupancy, so
        // later tableaux orthogonalize against earlier copies of the block.
        std::map<std::vector<unsigned>, std::vector<std::vector<cplx>>> accepted;

        for (std::size_t t_idx = 0; t_idx < tableaux.size(); ++t_idx) {
            auto group = symmetrizer_group(tableaux[t_idx], N);
            SymmetrySector sector{lambda, static_cast<unsigned>(t_idx + 1), {}};

            for (const auto& [occ, indices] : classes) {
                // Symmetrizer images of this class's basis vectors, normalized.
                std::vector<std::vector<cplx>> cands;
                for (std::size_t idx : indices) {
                    std::vector<cplx> img(dim, cplx(0.0));
                    auto digits = label_of(shape, idx);
                    for (const SignedPerm& sp : group)
                        accumulate_permuted(img, digits, shape.levels, sp,
                                            cplx(double(sp.sign)));
                    double n0 = vec_norm(img);
                    if (n0 <= kRankTol) continue;   // annihilated (e.g. repeated digits)
                    for (cplx& x : img) x /= n0;
                    cands.push_back(std::move(img));
                }

                auto& prior = accepted[occ];
                for (auto& c : cands) {
                    for (int pass = 0; pass < 2; ++pass)
                        for (const auto& a : prior) subtract_projection(c, a);
                }

                // Pivoted modified Gram-Schmidt over the remaining candidates.
                std::vector<bool> used(cands.size(), false);
                for (;;) {
                    std::size_t best = cands.size();
                    double best_norm = kRankTol;
                    for (std::size_t i = 0; i < cands.size(); ++i) {
                        if (used[i]) continue;
                        double nn = vec_norm(cands[i]);
                        if (nn > best_norm) {
                            best_norm = nn;
                            best = i;
                        }
                    }
                    if (best == cands.size()) break;
                    used[best] = true;

                    std::vector<cplx> u = cands[best];
                    for (const auto& a : prior) subtract_projection(u, a);   // polish
                    double nn = vec_norm(u);
                    if (nn <= kRankTol) continue;
                    for (cplx& x : u) x /= nn;

                    StateVector member = phase_fixed_first_nonzero(StateVector{shape, u});
                    for (std::size_t i = 0; i < cands.size(); ++i)
                        if (!used[i]) subtract_projection(cands[i], u);
                    prior.push_back(std::move(u));
                    sector.members.push_back({std::move(member), occ});
                }
            }

            if (sector.members.size() != d)
                throw numerical_failure_error(
                    "build_decomposition: sector rank mismatch (got " +
                    std::to_string(sector.members.size()) + ", expected " + std::to_string(d) +
                    ")");
            sectors.push_back(std::move(sector));
        }
    }
    return sectors;
}

namespace {

// ---- sequential spin coupling ----------------------------------------------

// Dense two-level vectors on k particles, indexed like the public flat index.
using SpinVec = std::vector<cplx>;

SpinVec prepend_level(unsigned level, const SpinVec& v) {
    SpinVec out(v.size() * 2, cplx(0.0));
    std::size_t offset = (level == 1) ? 0 : v.size();
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

SpinVec lower_spin(const SpinVec& v, unsigned particles) {
    SpinVec out(v.size(), cplx(0.0));
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx] == cplx(0.0)) continue;
        std::size_t stride = v.size() >> 1;
        for (unsigned site = 0; site < particles; ++site, stride >>= 1)
            if (((idx / stride) & 1) == 0)   // digit 1 at this site
                out[idx + stride] += v[idx];
    }
    return out;
}

void scale_to_unit(SpinVec& v) {
    double n = vec_norm(v);
    for (cplx& x : v) x /= n;
}

// Make the largest-magnitude amplitude (ties: lowest index) real positive.
void fix_top_phase(SpinVec& v) {
    std::size_t best = 0;
    double best_mag = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > best_mag) {
            best_mag = std::abs(v[i]);
            best = i;
        }
    if (best_mag == 0.0) return;
    cplx phase = std::conj(v[best]) / best_mag;
    for (cplx& x : v) x *= phase;
}

struct Tower {
    int twice_j;
    std::vector<SpinVec> members;   // m = j, j-1, ..., -j
};

Tower make_tower(int twice_j, SpinVec top, unsigned particles) {
    fix_top_phase(top);
    Tower t{twice_j, {std::move(top)}};
    for (int step = 0; step < twice_j; ++step) {
        SpinVec next = lower_spin(t.members.back(), particles);
        scale_to_unit(next);
        t.members.push_back(std::move(next));
    }
    return t;
}

} // namespace

std::vector<SymmetrySector> couple_spins(unsigned particles) {
    if (particles == 0)
        throw std::invalid_argument("couple_spins: particle count must be positive");
    if (particles > kMaxCoupledParticles)
        throw resource_limit_error("couple_spins: particle count " + std::to_string(particles) +
                                   " exceeds the cap of " +
                                   std::to_string(kMaxCoupledParticles));

    // Start from the last particle alone, then prepend one particle at a time.
    std::vector<Tower> towers;
    towers.push_back(make_tower(1, SpinVec{cplx(1.0), cplx(0.0)}, 1));

    for (unsigned k = 2; k <= particles; ++k) {
        std::vector<Tower> next;
        for (const Tower& t : towers) {
            // Raised total spin: top is |1> on the new particle times the old top.
            next.push_back(make_tower(t.twice_j + 1, prepend_level(1, t.members[0]), k));
            // Lowered total spin, when present.
            if (t.twice_j >= 1) {
                const double denom = t.twice_j + 1.0;
                const double alpha = -std::sqrt(1.0 / denom);
                const double beta = std::sqrt(t.twice_j / denom);
                SpinVec top = prepend_level(1, t.members[1]);
                for (cplx& x : top) x *= alpha;
                SpinVec other = prepend_level(2, t.members[0]);
                for (std::size_t i = 0; i < top.size(); ++i) top[i] += beta * other[i];
                next.push_back(make_tower(t.twice_j - 1, std::move(top), k));
            }
        }
        // Keep descending spin order; creation order breaks ties (multiplicity).
        std::stable_sort(next.begin(), next.end(),
                         [](const Tower& a, const Tower& b) { return a.twice_j > b.twice_j; });
        towers = std::move(next);
    }

    const SystemShape shape{particles, 2};
    std::vector<SymmetrySector> sectors;
    int prev_tj = -1;
    unsigned copy = 0;
    for (const Tower& t : towers) {
        copy = (t.twice_j == prev_tj) ? copy + 1 : 1;
        prev_tj = t.twice_j;

        std::vector<unsigned> parts{(particles + static_cast<unsigned>(t.twice_j)) / 2};
        unsigned second = (particles - static_cast<unsigned>(t.twice_j)) / 2;
        if (second > 0) parts.push_back(second);

        SymmetrySector sector{Partition(parts), copy, {}};
        for (std::size_t i = 0; i < t.members.size(); ++i) {
            int twice_m = t.twice_j - 2 * static_cast<int>(i);
            std::vector<unsigned> occ{(particles + static_cast<unsigned>(twice_m)) / 2,
                                      (particles - static_cast<unsigned>(twice_m)) / 2};
            sector.members.push_back({StateVector{shape, t.members[i]}, std::move(occ)});
        }
        sectors.push_back(std::move(sector));
    }
    return sectors;
}

int sector_twice_spin(const SymmetrySector& sector) {
    const auto& parts = sector.shape.parts();
    if (parts.size() > 2)
        throw std::invalid_argument("sector_twice_spin: shape has more than two rows");
    unsigned second = parts.size() == 2 ? parts[1] : 0;
    return static_cast<int>(parts[0]) - static_cast<int>(second);
}

int member_twice_projection(const SectorMember& member) {
    if (member.occupancy.size() != 2)
        throw std::invalid_argument("member_twice_projection: not a two-level member");
    return static_cast<int>(member.occupancy[0]) - static_cast<int>(member.occupancy[1]);
}

CoupledLabel coupled_label(const SymmetrySector& sector, std::size_t member_index) {
    if (member_index >= sector.members.size())
        throw std::invalid_argument("coupled_label: member index out of range");
    return {sector_twice_spin(sector), member_twice_projection(sector.members[member_index]),
            sector.copy_index};
}

StateVector lowering_image(const StateVector& v) {
    if (v.shape.levels != 2)
        throw std::invalid_argument("lowering_image: two-level systems only");
    if (v.amplitudes.size() != dimension(v.shape))
        throw std::invalid_argument("lowering_image: amplitude count mismatch");
    return {v.shape, lower_spin(v.amplitudes, v.shape.particles)};
}

std::vector<SectorWeight> sector_projections(const StateVector& v,
                                             const std::vector<SymmetrySector>& sectors) {
    if (v.amplitudes.size() != dimension(v.shape))
        throw std::invalid_argument("sector_projections: amplitude count mismatch");
    std::vector<SectorWeight> out;
    for (const SymmetrySector& sector : sectors) {
        double weight = 0.0;
        for (const SectorMember& member : sector.members) {
            if (!(member.state.shape == v.shape))
                throw std::invalid_argument("sector_projections: sector shape mismatch");
            weight += std::norm(inner_product(member.state, v));
        }
        out.push_back({sector.shape, sector.copy_index, weight});
    }
    return out;
}

} // namespace schurweyl
