#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "schurweyl/cli.hpp"
#include "schurweyl/errors.hpp"
#include "schurweyl/stateio.hpp"

using namespace schurweyl;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Writes content to a unique temp file and removes it on scope exit.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path(fs::temp_directory_path() / name) {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
    std::string str() const { return path.string(); }
};

const std::string kGhz3 =
    "{\"n\": 2, \"N\": 3, \"terms\": ["
    "{\"re\": 0.7071067811865476, \"im\": 0, \"digits\": [1,1,1]},"
    "{\"re\": 0.7071067811865476, \"im\": 0, \"digits\": [2,2,2]}]}";

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("state text parses terms, sums duplicates, and tracks the input norm") {
    ParsedState p = parse_state_text(
        "{\"n\": 2, \"N\": 2, \"terms\": ["
        "{\"re\": 0.5, \"im\": 0, \"digits\": [1,2]},"
        "{\"re\": 0.5, \"im\": 0, \"digits\": [1,2]},"
        "{\"re\": 0, \"im\": 1, \"digits\": [2,1]}]}");
    CHECK(p.state.shape.particles == 2);
    CHECK(p.state.shape.levels == 2);
    CHECK(p.term_count == 3);
    CHECK(p.renormalized);
    CHECK(p.input_norm == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    // duplicates summed to 1.0 before renormalization
    CHECK(std::abs(p.state.amplitudes[1] - cplx(1.0 / std::sqrt(2.0), 0)) < 1e-12);
    CHECK(std::abs(p.state.amplitudes[2] - cplx(0, 1.0 / std::sqrt(2.0))) < 1e-12);

    ParsedState unit = parse_state_text(
        "{\"n\": 2, \"N\": 1, \"terms\": [{\"re\": 1, \"im\": 0, \"digits\": [1]}]}");
    CHECK_FALSE(unit.renormalized);
    CHECK(unit.input_norm == doctest::Approx(1.0));
}

TEST_CASE("state text rejects malformed documents and invalid contents") {
    CHECK_THROWS_AS(parse_state_text("not json"), parse_error);
    CHECK_THROWS_AS(parse_state_text("[1,2]"), parse_error);
    CHECK_THROWS_AS(parse_state_text("{\"n\": 2, \"terms\": []}"), parse_error);
    CHECK_THROWS_AS(
        parse_state_text("{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 1, \"digits\": [1,1]}]}"),
        parse_error);
    CHECK_THROWS_AS(
        parse_state_text(
            "{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 1, \"im\": 0, \"digits\": \"11\"}]}"),
        parse_error);
    // structurally valid, semantically wrong
    CHECK_THROWS_AS(
        parse_state_text(
            "{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 1, \"im\": 0, \"digits\": [1,3]}]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        parse_state_text(
            "{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 1, \"im\": 0, \"digits\": [1]}]}"),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_state_text("{\"n\": 2, \"N\": 2, \"terms\": []}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        parse_state_text(
            "{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 0, \"im\": 0, \"digits\": [1,1]}]}"),
        std::invalid_argument);
}

TEST_CASE("exit codes distinguish usage, parse, validation, and verification failures") {
    CHECK(run({"decompose", "--N", "3", "--n", "2"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"decompose", "--N", "3"}).code == 1);
    CHECK(run({"decompose", "--N", "3", "--n", "2", "--format", "yaml"}).code == 1);

    TempFile bad("schurweyl_cli_bad.json", "not json at all");
    CHECK(run({"measure", "--state", bad.str()}).code == 2);
    CHECK(run({"measure", "--state", bad.str() + ".does-not-exist"}).code == 2);

    TempFile zero("schurweyl_cli_zero.json",
                  "{\"n\": 2, \"N\": 2, \"terms\": [{\"re\": 0, \"im\": 0, \"digits\": [1,1]}]}");
    CHECK(run({"measure", "--state", zero.str()}).code == 3);
    CHECK(run({"decompose", "--N", "25", "--n", "2"}).code == 3);
    CHECK(run({"basis", "--N", "2", "--n", "3", "--coupled"}).code == 3);

    CHECK(run({"verify"}).code == 0);
    CHECK(run({"verify", "--strict"}).code == 4);

    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"decompose", "--N", "4", "--n", "3"},
          std::vector<std::string>{"mes", "--N", "3", "--format", "csv"},
          std::vector<std::string>{"verify", "--format", "json-like-structured"}}) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("the three formats carry identical cell content") {
    const CliResult text = run({"mes", "--N", "2", "--format", "text"});
    const CliResult csv = run({"mes", "--N", "2", "--format", "csv"});
    const CliResult json = run({"mes", "--N", "2", "--format", "json-like-structured"});
    REQUIRE(text.code == 0);
    REQUIRE(csv.code == 0);
    REQUIRE(json.code == 0);
    for (const std::string cell :
         {"0.707106781187|11> + 0.707106781187|22>", "0.707106781187|11> - 0.707106781187|22>",
          "0.707106781187|12> + 0.707106781187|21>", "0.707106781187|12> - 0.707106781187|21>"}) {
        CHECK(contains(text.out, cell));
        CHECK(contains(csv.out, cell));
        CHECK(contains(json.out, cell));
    }
    CHECK(contains(csv.out, "row,1,1,1,1,+,"));
    CHECK(contains(csv.out, "row,4,0,0,1,self,"));
}

TEST_CASE("decompose prints the frozen two-level three-particle table") {
    const CliResult r = run({"decompose", "--N", "3", "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "# command: decompose"));
    CHECK(contains(r.out, "[3]      1  4  4"));
    CHECK(contains(r.out, "[2,1]    2  2  4"));
    CHECK(contains(r.out, "[1,1,1]  1  0  0"));
    CHECK(contains(r.out, "note: sum of f*d: 8"));
    CHECK(contains(r.out, "note: space dimension n^N: 8"));
    CHECK(contains(r.out, "note: sum of class sizes: 6"));
}

TEST_CASE("classes reports cycle types with sizes summing to the group order") {
    const CliResult r = run({"classes", "--N", "4"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "[2,1,1]     6"));
    CHECK(contains(r.out, "[4]         6"));
    CHECK(contains(r.out, "note: sum of class sizes: 24"));
}

TEST_CASE("coupled basis lists the mixed-symmetry states with spin labels") {
    const CliResult r = run({"basis", "--N", "3", "--n", "2", "--coupled"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "3/2  3/2   1     1|111>"));
    CHECK(contains(r.out,
                   "-0.408248290464|112> - 0.408248290464|121> + 0.816496580928|211>"));
    CHECK(contains(r.out, "0.707106781187|112> - 0.707106781187|121>"));
    CHECK(contains(r.out, "note: basis states: 8"));

    const CliResult plain = run({"basis", "--N", "2", "--n", "3"});
    REQUIRE(plain.code == 0);
    CHECK(contains(plain.out, "shape"));
    CHECK(contains(plain.out, "occupancy"));
    CHECK(contains(plain.out, "note: basis states: 9"));
}

TEST_CASE("dicke-profile prints the symmetric ladder entropies") {
    const CliResult r = run({"dicke-profile", "--N", "3"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "3/2   0"));
    CHECK(contains(r.out, "1/2   0.918295834054"));
    CHECK(contains(r.out, "-1/2  0.918295834054"));
    CHECK(contains(r.out, "-3/2  0"));
}

TEST_CASE("measure reports entropies, concurrences, projections, and factor blocks") {
    TempFile ghz("schurweyl_cli_ghz3.json", kGhz3);
    const CliResult r = run({"measure", "--state", ghz.str(), "--bipartitions", "all"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "input norm  1"));
    CHECK(contains(r.out, "0.707106781187|111> + 0.707106781187|222>"));
    CHECK_FALSE(contains(r.out, "renormalized"));

    // every cut of a three-particle GHZ state is maximally mixed
    CHECK(contains(r.out, "1         1"));
    CHECK(contains(r.out, "[1]     1"));
    CHECK(contains(r.out, "[3]     1"));
    CHECK(contains(r.out, "spin-flip (global)  0"));
    CHECK(contains(r.out, "[3]    1     3/2  1"));
    CHECK(contains(r.out, "[2,1]  1     1/2  0"));
    CHECK(contains(r.out, "note: state does not factor"));
}

TEST_CASE("measure renormalizes loud inputs and factors product states") {
    TempFile f("schurweyl_cli_product.json",
               "{\"n\": 2, \"N\": 3, \"terms\": ["
               "{\"re\": 1, \"im\": 0, \"digits\": [1,1,2]},"
               "{\"re\": 1, \"im\": 0, \"digits\": [1,2,1]},"
               "{\"re\": -1, \"im\": 0, \"digits\": [2,1,2]},"
               "{\"re\": -1, \"im\": 0, \"digits\": [2,2,1]}]}");
    const CliResult r = run({"measure", "--state", f.str()});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "input norm  2"));
    CHECK(contains(r.out, "state renormalized"));
    // (|1>-|2>)_1 x (|12>+|21>)_23 up to the phase convention
    CHECK(contains(r.out, "state factors into 2 blocks"));
    CHECK(contains(r.out, "1      [1]"));
    CHECK(contains(r.out, "2      [2,3]"));
    CHECK(contains(r.out, "0.707106781187|12> + 0.707106781187|21>"));
}

TEST_CASE("measure notes skipped diagnostics instead of failing on them") {
    TempFile f("schurweyl_cli_qutrit.json",
               "{\"n\": 3, \"N\": 2, \"terms\": ["
               "{\"re\": 1, \"im\": 0, \"digits\": [1,2]},"
               "{\"re\": 1, \"im\": 0, \"digits\": [2,3]}]}");
    const CliResult r = run({"measure", "--state", f.str()});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "concurrence is defined for two or more two-level particles only"));
    // qutrit pair still gets symmetrizer-based projections
    CHECK(contains(r.out, "[2]"));
    CHECK(contains(r.out, "[1,1]"));
}

TEST_CASE("verify summarizes structural identities and claim statuses") {
    const CliResult r = run({"verify"});
    REQUIRE(r.code == 0);
    for (const std::string line :
         {"sum of f*d equals n^N (N<=6, n<=4)                 pass",
          "sum of f^2 equals N! (N<=6)                        pass",
          "class sizes sum to N! (N<=6)                       pass",
          "coupled basis complete and orthonormal (N<=6)      pass",
          "combination basis complete and orthonormal (N<=6)  pass"})
        CHECK(contains(r.out, line));

    CHECK(contains(r.out, "ghz-pair-entropy         verified "));
    CHECK(contains(r.out, "z-pair-expansion         verified-under-convention"));
    CHECK(contains(r.out, "y-pair-expansion         verified-under-convention"));
    CHECK(contains(r.out, "x-pair-product           verified-under-convention"));
    CHECK(contains(r.out, "combined-yx-max-entropy  not-reproduced"));
    CHECK(contains(r.out, "combined-z-ghz-product   not-reproduced"));

    // evidence tables list every swept convention with a numeric residual
    CHECK(contains(r.out, "== claim z-pair-expansion =="));
    CHECK(contains(r.out, "plus combination, unnormalized Bell pair"));
    CHECK(contains(r.out, "minus combination, psi-minus = (|21>-|12>)/sqrt2"));
    CHECK(contains(r.out, "== claim combined-yx-max-entropy =="));
    CHECK(contains(r.out, "1, 1, 0"));
    CHECK(contains(r.out, "0.811278124459, 0.600876036693, 0.600876036693"));
    CHECK(contains(r.out, "== claim combined-z-ghz-product =="));
    CHECK(contains(r.out, "[1][2][3]"));
}

TEST_CASE("--output writes the report to a file instead of the stream") {
    TempFile ghz("schurweyl_cli_ghz3b.json", kGhz3);
    const fs::path out_path = fs::temp_directory_path() / "schurweyl_cli_report.txt";
    const CliResult direct = run({"measure", "--state", ghz.str()});
    const CliResult filed =
        run({"measure", "--state", ghz.str(), "--output", out_path.string()});
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());

    std::ifstream in(out_path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == direct.out);
    fs::remove(out_path);

    CHECK(run({"decompose", "--N", "2", "--n", "2", "--output",
               "/nonexistent-dir/schurweyl.txt"}).code == 3);
}
