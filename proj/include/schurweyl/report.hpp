#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schurweyl/statespace.hpp"

namespace schurweyl {

// Report assembly and rendering. Commands build a Report out of pre-formatted
// string cells; the three renderers lay out the same cells, so numeric
// content is identical across formats and output is byte-stable.

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kConventionDescriptor =
    "digits 1-based, particle 1 leftmost; sector members ordered by descending projection; "
    "basis and factor states phase-fixed so the largest amplitude is real positive";

enum class ReportFormat { text, structured, csv };

struct ReportSection {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;   // echoed flag/value pairs
    std::vector<ReportSection> sections;
};

// 12 significant digits, "."-decimal, no locale; NaN renders as "-".
std::string format_double(double x);

// "<re>" for real values, "<re>+<im>i" / "<re>-<im>i" otherwise.
std::string format_complex(cplx a);

// "j" for integers, "j/2" otherwise (value passed as twice the number).
std::string format_half(int twice_value);

// "[2,1]" style list formatting.
std::string format_id_list(const std::vector<unsigned>& values);

// Ket expansion "0.707106781187|112> - 0.707106781187|121>"; terms in basis
// index order, amplitudes below 1e-12 dropped.
std::string format_state_expansion(const StateVector& v);

std::string render(const Report& report, ReportFormat format);

}  // namespace schurweyl
