#include "birkhoff/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace birkhoff {
namespace {

std::optional<Rational> parse_entry(const std::string& tok) { return parse_rational(tok); }

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("matrix parse error at line " + std::to_string(line) + ": " + what);
}

// Reads the next record, skipping comments and blank lines; returns nullopt at
// a clean end of stream.
std::optional<ExactMatrix> next_record(std::istream& in, std::size_t& lineno) {
    std::string line;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag != "n") fail(lineno, "expected header 'n <dim>'");
        long d = 0;
        if (!(ls >> d) || d <= 0) fail(lineno, "bad dimension");
        std::string extra;
        if (ls >> extra) fail(lineno, "trailing tokens after header");
        dim = static_cast<std::size_t>(d);
        break;
    }
    if (dim == 0) return std::nullopt;

    ExactMatrix m(dim, dim);
    std::size_t row = 0;
    while (row < dim) {
        if (!std::getline(in, line)) fail(lineno, "unexpected end of input inside record");
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> entries;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            auto r = parse_entry(tok);
            if (!r) fail(lineno, "bad entry '" + tok + "'");
            entries.push_back(*r);
        }
        if (entries.empty()) continue;  // blank or comment line inside record
        if (entries.size() != dim) fail(lineno, "expected " + std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j) m.at(row, j) = entries[j];
        ++row;
    }
    return m;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer num(text);
            return Rational(num);
        }
        const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty() || ds.find('/') != std::string::npos) return std::nullopt;
        Integer num(ns), den(ds);
        if (den == 0) return std::nullopt;
        return rational(num, den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

ExactMatrix parse_matrix(std::istream& in) {
    std::size_t lineno = 0;
    auto m = next_record(in, lineno);
    if (!m) throw std::runtime_error("matrix parse error: empty input");
    return *m;
}

ExactMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

ExactMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_matrix(in);
}

std::vector<ExactMatrix> parse_matrices(std::istream& in) {
    std::vector<ExactMatrix> out;
    std::size_t lineno = 0;
    while (auto m = next_record(in, lineno)) out.push_back(std::move(*m));
    if (out.empty()) throw std::runtime_error("matrix parse error: empty input");
    return out;
}

std::string write_matrix(const ExactMatrix& m) {
    std::ostringstream out;
    out << "n " << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace birkhoff
