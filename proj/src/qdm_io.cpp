#include "qpsep/qdm_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qpsep/errors.hpp"

namespace qpsep {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

// Splits input into whitespace-separated tokens, dropping comment lines.
std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            eol = text.size();
        }
        ++line_no;
        const std::string_view line(text.data() + pos, eol - pos);
        if (!line.empty() && line.front() != '#') {
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() &&
                       std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                }
                const std::size_t start = i;
                while (i < line.size() &&
                       !std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                }
                if (i > start) {
                    tokens.push_back(
                        Token{line.substr(start, i - start), line_no, start + 1});
                }
            }
        }
        pos = eol + 1;
    }
    return tokens;
}

double parse_real(std::string_view text, const Token& tok, std::size_t offset,
                  const char** end) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() || !std::isfinite(value)) {
        throw ParseError("malformed complex token '" + std::string(tok.text) + "'",
                         tok.line, tok.column + offset);
    }
    *end = ptr;
    return value;
}

Complex parse_complex_token(const Token& tok) {
    const std::string_view text = tok.text;
    const char* cursor = nullptr;
    const double re = parse_real(text, tok, 0, &cursor);

    std::size_t used = static_cast<std::size_t>(cursor - text.data());
    if (used >= text.size() || (text[used] != '+' && text[used] != '-')) {
        throw ParseError("expected sign before imaginary part in '" +
                             std::string(text) + "'",
                         tok.line, tok.column + used);
    }
    const double sign = text[used] == '-' ? -1.0 : 1.0;
    ++used;

    const char* im_end = nullptr;
    const double im_mag =
        parse_real(text.substr(used), tok, used, &im_end);
    used = static_cast<std::size_t>(im_end - text.data());
    if (used + 1 != text.size() || text[used] != 'i') {
        throw ParseError("expected trailing 'i' in complex token '" +
                             std::string(text) + "'",
                         tok.line, tok.column + used);
    }
    return Complex(re, sign * im_mag);
}

void expect_keyword(const std::vector<Token>& tokens, std::size_t index,
                    std::string_view keyword) {
    if (index >= tokens.size()) {
        throw ParseError("unexpected end of input, expected '" +
                             std::string(keyword) + "'",
                         tokens.empty() ? 1 : tokens.back().line, 1);
    }
    if (tokens[index].text != keyword) {
        throw ParseError("expected '" + std::string(keyword) + "', got '" +
                             std::string(tokens[index].text) + "'",
                         tokens[index].line, tokens[index].column);
    }
}

} // namespace

std::string format_double(double value) {
    if (value == 0.0) {
        return "0";  // folds away the sign of -0
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

namespace {

std::string format_complex_token(const Complex& z) {
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string out = format_double(z.real());
    if (im < 0.0) {
        out += "-";
        out += format_double(-im);
    } else {
        out += "+";
        out += format_double(im);
    }
    out += "i";
    return out;
}

} // namespace

std::string matrix_to_qdm(const DensityMatrix& rho) {
    std::string out = "qdm 1\nqubits " + std::to_string(rho.num_qubits()) + "\n";
    const std::size_t d = rho.dim();
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            if (c != 0) {
                out += ' ';
            }
            out += format_complex_token(rho.mat()(r, c));
        }
        out += '\n';
    }
    return out;
}

DensityMatrix matrix_from_qdm(const std::string& text, double tol) {
    const std::vector<Token> tokens = tokenize(text);
    expect_keyword(tokens, 0, "qdm");
    expect_keyword(tokens, 1, "1");
    expect_keyword(tokens, 2, "qubits");
    if (tokens.size() < 4) {
        throw ParseError("missing qubit count", tokens[2].line, tokens[2].column);
    }
    int n = 0;
    {
        const Token& tok = tokens[3];
        const auto [ptr, ec] =
            std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), n);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
            throw ParseError("bad qubit count '" + std::string(tok.text) + "'",
                             tok.line, tok.column);
        }
    }
    if (n < 1 || n > 10) {
        throw ParseError("qubit count must be 1..10", tokens[3].line,
                         tokens[3].column);
    }

    const std::size_t d = std::size_t{1} << n;
    const std::size_t expected = 4 + d * d;
    if (tokens.size() < expected) {
        const Token& last = tokens.back();
        throw ParseError("matrix data ends early: expected " +
                             std::to_string(d * d) + " entries",
                         last.line, last.column);
    }
    if (tokens.size() > expected) {
        const Token& extra = tokens[expected];
        throw ParseError("unexpected trailing content '" +
                             std::string(extra.text) + "'",
                         extra.line, extra.column);
    }

    ComplexMatrix m(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = parse_complex_token(tokens[4 + r * d + c]);
        }
    }
    return validate_density(std::move(m), tol);
}

void save_matrix(const DensityMatrix& rho, const std::filesystem::path& path) {
    const std::string text = matrix_to_qdm(rho);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

DensityMatrix load_matrix(const std::filesystem::path& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return matrix_from_qdm(buffer.str(), tol);
}

std::string format_verdict_line(const Verdict& v) {
    const char* label =
        v.kind == VerdictKind::Inseparable ? "INSEPARABLE" : "UNDETERMINED";
    return format_partition(v.partition) + ": " + label + " (min PT eig " +
           format_double(v.min_pt_eigenvalue) + ")";
}

std::string write_report(const SeparabilityReport& report, ReportFormat format) {
    if (format == ReportFormat::Text) {
        std::string out;
        for (const Verdict& v : report.verdicts) {
            out += format_verdict_line(v);
            out += '\n';
        }
        out += "entangled: ";
        out += report.entangled ? "yes" : "no";
        out += '\n';
        return out;
    }

    nlohmann::ordered_json doc;
    doc["num_qubits"] = report.num_qubits;
    doc["tolerance"] = report.tolerance;
    doc["partitions"] = nlohmann::ordered_json::array();
    for (const Verdict& v : report.verdicts) {
        nlohmann::ordered_json entry;
        entry["partition"] = format_partition(v.partition);
        entry["min_pt_eigenvalue"] = v.min_pt_eigenvalue;
        entry["reduced_separable"] = v.reduced_separable;
        entry["verdict"] =
            v.kind == VerdictKind::Inseparable ? "inseparable" : "undetermined";
        doc["partitions"].push_back(std::move(entry));
    }
    doc["entangled"] = report.entangled;
    return doc.dump();
}

} // namespace qpsep
