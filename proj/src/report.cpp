#include "schurweyl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace schurweyl {

std::string format_double(double x) {
    if (std::isnan(x)) return "-";
    if (x == 0.0) return "0";   // merge the signed zeros
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::string format_complex(cplx a) {
    if (a.imag() == 0.0) return format_double(a.real());
    std::string out = format_double(a.real());
    out += a.imag() < 0.0 ? "-" : "+";
    out += format_double(std::abs(a.imag()));
    out += "i";
    return out;
}

std::string format_half(int twice_value) {
    if (twice_value % 2 == 0) return std::to_string(twice_value / 2);
    return std::to_string(twice_value) + "/2";
}

std::string format_id_list(const std::vector<unsigned>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string format_state_expansion(const StateVector& v) {
    std::string out;
    for (std::size_t idx = 0; idx < v.dim(); ++idx) {
        const cplx a = v.amplitudes[idx];
        if (std::abs(a) <= 1e-12) continue;

        std::string ket = "|";
        const std::vector<unsigned> digits = label_of(v.shape, idx);
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (k && v.shape.levels > 9) ket += ",";
            ket += std::to_string(digits[k]);
        }
        ket += ">";

        if (a.imag() == 0.0) {
            if (out.empty()) out += a.real() < 0.0 ? "-" : "";
            else out += a.real() < 0.0 ? " - " : " + ";
            out += format_double(std::abs(a.real()));
        } else {
            if (!out.empty()) out += " + ";
            out += "(" + format_complex(a) + ")";
        }
        out += ket;
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "# command: " << report.command << "\n";
    out << "# version: " << kToolVersion << "\n";
    out << "# convention: " << kConventionDescriptor << "\n";
    for (const auto& [key, value] : report.inputs)
        out << "# input " << key << ": " << value << "\n";

    for (const ReportSection& section : report.sections) {
        out << "\n== " << section.title << " ==\n";
        std::vector<std::size_t> width(section.columns.size());
        for (std::size_t c = 0; c < section.columns.size(); ++c)
            width[c] = section.columns[c].size();
        for (const auto& row : section.rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());

        auto emit_row = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c) line += "  ";
                line += cells[c];
                if (c + 1 < cells.size())
                    line.append(width[c] > cells[c].size() ? width[c] - cells[c].size() : 0, ' ');
            }
            out << line << "\n";
        };
        if (!section.columns.empty()) emit_row(section.columns);
        for (const auto& row : section.rows) emit_row(row);
        for (const std::string& note : section.notes) out << "note: " << note << "\n";
    }
    return out.str();
}

std::string csv_quote(const std::string& cell) {
    bool needs = false;
    for (char ch : cell)
        if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r') needs = true;
    if (!needs) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render_csv(const Report& report) {
    std::ostringstream out;
    auto emit = [&](std::initializer_list<std::string> head, const std::vector<std::string>& tail = {}) {
        bool first = true;
        for (const std::string& cell : head) {
            if (!first) out << ",";
            out << csv_quote(cell);
            first = false;
        }
        for (const std::string& cell : tail) out << "," << csv_quote(cell);
        out << "\n";
    };
    emit({"command", report.command});
    emit({"version", kToolVersion});
    emit({"convention", kConventionDescriptor});
    for (const auto& [key, value] : report.inputs) emit({"input", key, value});
    for (const ReportSection& section : report.sections) {
        emit({"section", section.title});
        if (!section.columns.empty()) emit({"columns"}, section.columns);
        for (const auto& row : section.rows) emit({"row"}, row);
        for (const std::string& note : section.notes) emit({"note", note});
    }
    return out.str();
}

std::string render_structured(const Report& report) {
    nlohmann::ordered_json doc;
    doc["command"] = report.command;
    doc["version"] = kToolVersion;
    doc["convention"] = kConventionDescriptor;
    doc["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.inputs) doc["inputs"][key] = value;
    doc["sections"] = nlohmann::ordered_json::array();
    for (const ReportSection& section : report.sections) {
        nlohmann::ordered_json s;
        s["title"] = section.title;
        s["columns"] = section.columns;
        s["rows"] = section.rows;
        s["notes"] = section.notes;
        doc["sections"].push_back(std::move(s));
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: return render_text(report);
        case ReportFormat::structured: return render_structured(report);
        case ReportFormat::csv: return render_csv(report);
    }
    return {};
}

}  // namespace schurweyl
