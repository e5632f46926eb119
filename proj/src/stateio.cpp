#include "schurweyl/stateio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "schurweyl/errors.hpp"

namespace schurweyl {

namespace {

using nlohmann::json;

unsigned read_count(const json& doc, const char* field) {
    if (!doc.contains(field))
        throw parse_error(std::string("state file: missing field \"") + field + "\"");
    const json& value = doc.at(field);
    if (!value.is_number_integer() || value.get<long long>() <= 0)
        throw parse_error(std::string("state file: field \"") + field +
                          "\" must be a positive integer");
    return value.get<unsigned>();
}

double read_real(const json& term, const char* field) {
    if (!term.contains(field))
        throw parse_error(std::string("state file: term missing field \"") + field + "\"");
    if (!term.at(field).is_number())
        throw parse_error(std::string("state file: term field \"") + field +
                          "\" must be a number");
    return term.at(field).get<double>();
}

}  // namespace

ParsedState parse_state_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("state file: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("state file: top level must be an object");

    const unsigned levels = read_count(doc, "n");
    const unsigned particles = read_count(doc, "N");
    if (!doc.contains("terms") || !doc.at("terms").is_array())
        throw parse_error("state file: field \"terms\" must be a list");
    const json& terms = doc.at("terms");
    if (terms.empty()) throw std::invalid_argument("state file: terms list is empty");

    const SystemShape shape{particles, levels};
    StateVector v{shape, std::vector<cplx>(dimension(shape))};
    for (const json& term : terms) {
        if (!term.is_object()) throw parse_error("state file: each term must be an object");
        const double re = read_real(term, "re");
        const double im = read_real(term, "im");
        if (!term.contains("digits") || !term.at("digits").is_array())
            throw parse_error("state file: term field \"digits\" must be a list");
        std::vector<unsigned> digits;
        for (const json& d : term.at("digits")) {
            if (!d.is_number_integer())
                throw parse_error("state file: digits must be integers");
            const long long raw = d.get<long long>();
            if (raw < 1 || raw > static_cast<long long>(levels))
                throw std::invalid_argument("state file: digit " + std::to_string(raw) +
                                            " is outside 1.." + std::to_string(levels));
            digits.push_back(unsigned(raw));
        }
        if (digits.size() != particles)
            throw std::invalid_argument("state file: a term has " +
                                        std::to_string(digits.size()) + " digits, expected " +
                                        std::to_string(particles));
        v.amplitudes[index_of(shape, digits)] += cplx(re, im);
    }

    ParsedState parsed;
    parsed.term_count = terms.size();
    parsed.input_norm = norm(v);
    if (parsed.input_norm < 1e-12)
        throw std::invalid_argument("state file: terms sum to the zero vector");
    parsed.renormalized = std::abs(parsed.input_norm - 1.0) > 1e-6;
    parsed.state = normalize(v);
    return parsed;
}

ParsedState parse_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("state file: cannot read \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_text(buffer.str());
}

}  // namespace schurweyl
