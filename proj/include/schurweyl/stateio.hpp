#pragma once

#include <string>

#include "schurweyl/statespace.hpp"

namespace schurweyl {

// State-file ingestion. The format is a structured text object with fields
//   n      levels per particle
//   N      particle count
//   terms  list of {re, im, digits}, digits a length-N list of 1..n
// Duplicate digit strings are summed. The vector is normalized on ingest;
// `renormalized` flags inputs whose norm deviated from 1 by more than 1e-6.

struct ParsedState {
    StateVector state;          // normalized
    double input_norm = 0.0;    // norm before normalization
    bool renormalized = false;
    std::size_t term_count = 0;
};

// Throws parse_error for malformed text or wrong field types,
// std::invalid_argument for well-formed input with invalid content
// (bad digits, empty terms, zero vector).
ParsedState parse_state_text(const std::string& text);

// Reads the file and parses it; unreadable files are parse errors.
ParsedState parse_state_file(const std::string& path);

}  // namespace schurweyl
