#include "schurweyl/cli.hpp"

#include <cstdint>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "schurweyl/claims.hpp"
#include "schurweyl/entanglement.hpp"
#include "schurweyl/errors.hpp"
#include "schurweyl/partitions.hpp"
#include "schurweyl/report.hpp"
#include "schurweyl/schur_weyl.hpp"
#include "schurweyl/stateio.hpp"

namespace schurweyl {

namespace {

std::string format_shape(const Partition& p) { return format_id_list(p.parts()); }

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string pass_fail(bool value) { return value ? "pass" : "fail"; }

ReportSection class_section(unsigned particles) {
    ReportSection s;
    s.title = "conjugacy classes";
    s.columns = {"cycle type", "class size"};
    std::uint64_t total = 0;
    for (const Partition& p : enumerate_partitions(particles)) {
        const std::uint64_t size = class_size(p);
        total += size;
        s.rows.push_back({format_shape(p), std::to_string(size)});
    }
    s.notes.push_back("sum of class sizes: " + std::to_string(total));
    return s;
}

Report run_decompose(unsigned particles, unsigned levels) {
    Report report;
    report.command = "decompose";
    report.inputs = {{"N", std::to_string(particles)}, {"n", std::to_string(levels)}};

    const DecompositionTable table = decomposition_table(particles, levels);
    ReportSection s;
    s.title = "decomposition";
    s.columns = {"shape", "f", "d", "f*d"};
    for (const DecompositionRecord& r : table.rows)
        s.rows.push_back({format_shape(r.shape), std::to_string(r.multiplicity),
                          std::to_string(r.block_dim),
                          std::to_string(r.multiplicity * r.block_dim)});
    s.notes.push_back("sum of f*d: " + std::to_string(table.total));
    s.notes.push_back("space dimension n^N: " + std::to_string(table.space_dim));
    report.sections.push_back(std::move(s));
    report.sections.push_back(class_section(particles));
    return report;
}

Report run_classes(unsigned particles) {
    Report report;
    report.command = "classes";
    report.inputs = {{"N", std::to_string(particles)}};
    report.sections.push_back(class_section(particles));
    return report;
}

Report run_basis(unsigned particles, unsigned levels, bool coupled) {
    Report report;
    report.command = "basis";
    report.inputs = {{"N", std::to_string(particles)},
                     {"n", std::to_string(levels)},
                     {"coupled", yes_no(coupled)}};

    ReportSection s;
    std::size_t members = 0;
    if (coupled) {
        if (levels != 2)
            throw std::invalid_argument("basis: --coupled requires two-level particles (--n 2)");
        s.title = "coupled basis";
        s.columns = {"j", "m", "copy", "state"};
        for (const SymmetrySector& sector : couple_spins(particles))
            for (std::size_t i = 0; i < sector.members.size(); ++i) {
                const CoupledLabel label = coupled_label(sector, i);
                s.rows.push_back({format_half(label.twice_j), format_half(label.twice_m),
                                  std::to_string(label.copy_index),
                                  format_state_expansion(sector.members[i].state)});
                ++members;
            }
    } else {
        s.title = "symmetry-adapted basis";
        s.columns = {"shape", "copy", "occupancy", "state"};
        for (const SymmetrySector& sector : build_decomposition({particles, levels}))
            for (const SectorMember& member : sector.members) {
                s.rows.push_back({format_shape(sector.shape), std::to_string(sector.copy_index),
                                  format_id_list(member.occupancy),
                                  format_state_expansion(member.state)});
                ++members;
            }
    }
    s.notes.push_back("basis states: " + std::to_string(members));
    report.sections.push_back(std::move(s));
    return report;
}

Report run_mes(unsigned particles) {
    Report report;
    report.command = "mes";
    report.inputs = {{"N", std::to_string(particles)}};

    const MESBasis basis = generate_mes_basis(particles);
    ReportSection s;
    s.title = "maximally entangled basis";
    s.columns = {"index", "j", "m", "copy", "sign", "state"};
    for (std::size_t i = 0; i < basis.states.size(); ++i) {
        const MESState& m = basis.states[i];
        const char* sign = m.combination_sign > 0 ? "+" : (m.combination_sign < 0 ? "-" : "self");
        s.rows.push_back({std::to_string(i + 1), format_half(m.source.twice_j),
                          format_half(m.source.twice_m), std::to_string(m.source.copy_index),
                          sign, format_state_expansion(m.state)});
    }
    s.notes.push_back("basis states: " + std::to_string(basis.states.size()));
    report.sections.push_back(std::move(s));
    return report;
}

Report run_dicke_profile(unsigned particles) {
    Report report;
    report.command = "dicke-profile";
    report.inputs = {{"N", std::to_string(particles)}};

    ReportSection s;
    s.title = "symmetric ladder entropy profile";
    s.columns = {"m", "entropy"};
    for (const DickePoint& point : dicke_entropy_profile(particles))
        s.rows.push_back({format_half(point.twice_projection), format_double(point.entropy)});
    report.sections.push_back(std::move(s));
    return report;
}

Report run_measure(const std::string& path, const std::string& bipartitions) {
    const ParsedState parsed = parse_state_file(path);
    const StateVector& v = parsed.state;
    const unsigned particles = v.shape.particles;
    const unsigned levels = v.shape.levels;

    Report report;
    report.command = "measure";
    report.inputs = {{"state", path}, {"bipartitions", bipartitions}};

    ReportSection input;
    input.title = "input state";
    input.columns = {"property", "value"};
    input.rows.push_back({"particles", std::to_string(particles)});
    input.rows.push_back({"levels", std::to_string(levels)});
    input.rows.push_back({"terms", std::to_string(parsed.term_count)});
    input.rows.push_back({"input norm", format_double(parsed.input_norm)});
    input.rows.push_back({"state", format_state_expansion(phase_fixed_largest(v))});
    if (parsed.renormalized)
        input.notes.push_back("input norm deviated from 1 by more than 1e-6; state renormalized");
    report.sections.push_back(std::move(input));

    const BipartitionMode mode =
        bipartitions == "all" ? BipartitionMode::all : BipartitionMode::singles;
    const EntropyReport entropy = build_entropy_report(v, mode);
    ReportSection per;
    per.title = "per-particle entropies";
    per.columns = {"particle", "entropy"};
    for (unsigned k = 0; k < particles; ++k)
        per.rows.push_back({std::to_string(k + 1), format_double(entropy.per_particle[k])});
    report.sections.push_back(std::move(per));

    ReportSection cuts;
    cuts.title = "bipartition entropies";
    cuts.columns = {"subset", "entropy"};
    for (const BipartitionEntry& e : entropy.bipartitions)
        cuts.rows.push_back({format_id_list(e.subset), format_double(e.entropy)});
    report.sections.push_back(std::move(cuts));

    ReportSection con;
    con.title = "concurrences";
    con.columns = {"pair", "value"};
    if (levels == 2 && particles >= 2) {
        const ConcurrenceReport c = build_concurrence_report(v);
        for (const PairConcurrence& p : c.pairwise)
            con.rows.push_back({format_id_list({p.first, p.second}), format_double(p.value)});
        con.rows.push_back({"spin-flip (global)", format_double(c.global)});
    } else {
        con.notes.push_back("concurrence is defined for two or more two-level particles only");
    }
    report.sections.push_back(std::move(con));

    ReportSection proj;
    proj.title = "sector projections";
    proj.columns = {"shape", "copy", "j", "weight"};
    if (levels == 2 && particles <= kMaxCoupledParticles) {
        const std::vector<SymmetrySector> sectors = couple_spins(particles);
        for (const SectorWeight& w : sector_projections(v, sectors))
            proj.rows.push_back({format_shape(w.shape), std::to_string(w.copy_index),
                                 format_half(int(w.shape.parts().front()) -
                                             int(particles - w.shape.parts().front())),
                                 format_double(w.weight)});
    } else if (particles <= kMaxSymmetrizerParticles && v.dim() <= kMaxSymmetrizerDimension) {
        const std::vector<SymmetrySector> sectors = build_decomposition(v.shape);
        for (const SectorWeight& w : sector_projections(v, sectors))
            proj.rows.push_back({format_shape(w.shape), std::to_string(w.copy_index), "-",
                                 format_double(w.weight)});
    } else {
        proj.notes.push_back("omitted: system exceeds the decomposition caps");
    }
    report.sections.push_back(std::move(proj));

    ReportSection prod;
    prod.title = "product structure";
    prod.columns = {"block", "particles", "state"};
    if (particles <= kMaxProductParticles) {
        const std::vector<ProductBlock> blocks = product_structure(v);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            prod.rows.push_back({std::to_string(i + 1), format_id_list(blocks[i].particles),
                                 format_state_expansion(blocks[i].state)});
        prod.notes.push_back(blocks.size() == 1 ? "state does not factor"
                                                : "state factors into " +
                                                      std::to_string(blocks.size()) + " blocks");
    } else {
        prod.notes.push_back("omitted: particle count exceeds the factorization cap");
    }
    report.sections.push_back(std::move(prod));
    return report;
}

struct VerifyOutcome {
    Report report;
    bool structural_ok = false;
    bool claims_ok = false;
};

bool basis_orthonormal(const std::vector<const StateVector*>& states, double tolerance) {
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner_product(*states[i], *states[j]) - expected) > tolerance)
                return false;
        }
    return true;
}

VerifyOutcome run_verify() {
    VerifyOutcome outcome;
    Report& report = outcome.report;
    report.command = "verify";

    bool ok_fd = true, ok_f2 = true, ok_class = true, ok_coupled = true, ok_mes = true;
    for (unsigned particles = 1; particles <= 6; ++particles) {
        std::uint64_t factorial = 1;
        for (unsigned k = 2; k <= particles; ++k) factorial *= k;

        std::uint64_t sum_f2 = 0, sum_class = 0;
        for (const Partition& p : enumerate_partitions(particles)) {
            const std::uint64_t f = dim_symmetric(p);
            sum_f2 += f * f;
            sum_class += class_size(p);
        }
        ok_f2 = ok_f2 && sum_f2 == factorial;
        ok_class = ok_class && sum_class == factorial;

        for (unsigned levels = 1; levels <= 4; ++levels) {
            const DecompositionTable table = decomposition_table(particles, levels);
            std::uint64_t total = 0;
            for (const DecompositionRecord& r : table.rows) total += r.multiplicity * r.block_dim;
            ok_fd = ok_fd && total == table.space_dim && table.total == table.space_dim;
        }

        const std::vector<SymmetrySector> sectors = couple_spins(particles);
        std::vector<const StateVector*> members;
        for (const SymmetrySector& sector : sectors)
            for (const SectorMember& member : sector.members) members.push_back(&member.state);
        ok_coupled = ok_coupled && members.size() == (std::size_t(1) << particles) &&
                     basis_orthonormal(members, 1e-10);

        const MESBasis mes = generate_mes_basis(particles);
        std::vector<const StateVector*> mes_members;
        for (const MESState& m : mes.states) mes_members.push_back(&m.state);
        ok_mes = ok_mes && mes_members.size() == (std::size_t(1) << particles) &&
                 basis_orthonormal(mes_members, 1e-10);
    }

    ReportSection structural;
    structural.title = "structural identities";
    structural.columns = {"identity", "result"};
    structural.rows.push_back({"sum of f*d equals n^N (N<=6, n<=4)", pass_fail(ok_fd)});
    structural.rows.push_back({"sum of f^2 equals N! (N<=6)", pass_fail(ok_f2)});
    structural.rows.push_back({"class sizes sum to N! (N<=6)", pass_fail(ok_class)});
    structural.rows.push_back({"coupled basis complete and orthonormal (N<=6)", pass_fail(ok_coupled)});
    structural.rows.push_back({"combination basis complete and orthonormal (N<=6)", pass_fail(ok_mes)});
    report.sections.push_back(std::move(structural));
    outcome.structural_ok = ok_fd && ok_f2 && ok_class && ok_coupled && ok_mes;

    const std::vector<ClaimReport> claims = verify_claims_three_qubit();
    outcome.claims_ok = true;

    ReportSection summary;
    summary.title = "claims";
    summary.columns = {"id", "status", "best convention"};
    for (const ClaimReport& claim : claims) {
        summary.rows.push_back({claim.id, to_string(claim.status), claim.best_convention});
        if (claim.status == ClaimStatus::not_reproduced) outcome.claims_ok = false;
    }
    report.sections.push_back(std::move(summary));

    for (const ClaimReport& claim : claims) {
        ReportSection detail;
        detail.title = "claim " + claim.id;
        detail.columns = {"convention", "matched", "residual", "entropies", "blocks",
                          "pair concurrence"};
        for (const ConventionOutcome& c : claim.conventions) {
            std::string entropies;
            for (std::size_t i = 0; i < c.entropies.size(); ++i) {
                if (i) entropies += ", ";
                entropies += format_double(c.entropies[i]);
            }
            std::string blocks;
            for (const std::vector<unsigned>& b : c.blocks) blocks += format_id_list(b);
            detail.rows.push_back({c.descriptor, yes_no(c.matched), format_double(c.residual),
                                   entropies.empty() ? "-" : entropies,
                                   blocks.empty() ? "-" : blocks,
                                   format_double(c.pair_concurrence)});
        }
        detail.notes.push_back(claim.statement);
        report.sections.push_back(std::move(detail));
    }
    return outcome;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json-like-structured") return ReportFormat::structured;
    return ReportFormat::csv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetry-sector decomposition and entanglement diagnostics for N identical "
                 "n-level particles"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string output_path;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json-like-structured", "csv"}));
        cmd->add_option("--output", output_path, "write the report to this file");
    };
    add_common(&app);

    unsigned dec_N = 0, dec_n = 0;
    CLI::App* dec = app.add_subcommand("decompose", "shape-by-shape dimension table");
    dec->add_option("--N", dec_N, "particle count")->required();
    dec->add_option("--n", dec_n, "levels per particle")->required();
    add_common(dec);

    unsigned cls_N = 0;
    CLI::App* cls = app.add_subcommand("classes", "conjugacy classes and their sizes");
    cls->add_option("--N", cls_N, "particle count")->required();
    add_common(cls);

    unsigned bas_N = 0, bas_n = 0;
    bool bas_coupled = false;
    CLI::App* bas = app.add_subcommand("basis", "symmetry-adapted basis states");
    bas->add_option("--N", bas_N, "particle count")->required();
    bas->add_option("--n", bas_n, "levels per particle")->required();
    bas->add_flag("--coupled", bas_coupled, "use the sequentially coupled two-level basis");
    add_common(bas);

    unsigned mes_N = 0;
    CLI::App* mes = app.add_subcommand("mes", "maximally entangled combination basis");
    mes->add_option("--N", mes_N, "particle count")->required();
    add_common(mes);

    std::string measure_path, measure_bipartitions = "singles";
    CLI::App* mea = app.add_subcommand("measure", "entanglement diagnostics for a state file");
    mea->add_option("--state", measure_path, "state file to analyze")->required();
    mea->add_option("--bipartitions", measure_bipartitions, "bipartition coverage")
        ->check(CLI::IsMember({"all", "singles"}));
    add_common(mea);

    unsigned dic_N = 0;
    CLI::App* dic = app.add_subcommand("dicke-profile", "entropy profile of the symmetric ladder");
    dic->add_option("--N", dic_N, "particle count")->required();
    add_common(dic);

    bool strict = false;
    CLI::App* ver = app.add_subcommand("verify", "structural identities and claim re-derivation");
    ver->add_flag("--strict", strict, "exit 4 if any claim is not reproduced");
    add_common(ver);

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("schurweyl");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    Report report;
    int code = 0;
    try {
        if (*dec) report = run_decompose(dec_N, dec_n);
        else if (*cls) report = run_classes(cls_N);
        else if (*bas) report = run_basis(bas_N, bas_n, bas_coupled);
        else if (*mes) report = run_mes(mes_N);
        else if (*mea) report = run_measure(measure_path, measure_bipartitions);
        else if (*dic) report = run_dicke_profile(dic_N);
        else if (*ver) {
            VerifyOutcome outcome = run_verify();
            report = std::move(outcome.report);
            if (!outcome.structural_ok) code = 3;
            else if (strict && !outcome.claims_ok) code = 4;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    const std::string rendered = render(report, parse_format(format));
    if (!output_path.empty()) {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write \"" << output_path << "\"\n";
            return 3;
        }
        file << rendered;
    } else {
        out << rendered;
    }
    return code;
}

}  // namespace schurweyl
