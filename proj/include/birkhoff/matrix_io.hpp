#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "birkhoff/exact_matrix.hpp"

namespace birkhoff {

// Text format for exact matrices:
//
//   # optional comment lines
//   n 4
//   1/2 0 0 1/2
//   ...
//
// Entries are integers or p/q fractions separated by whitespace. Several
// records may follow each other in one stream, separated by blank lines.
// Writing always emits lowest-terms entries, so write(parse(f)) == f for
// normalized files.

struct MatrixParseError {
    std::string message;
};

// Parses exactly one record; throws std::runtime_error with a line-numbered
// message on malformed input.
ExactMatrix parse_matrix(std::istream& in);
ExactMatrix parse_matrix_text(const std::string& text);
ExactMatrix load_matrix_file(const std::string& path);

// Parses every record in the stream (at least one).
std::vector<ExactMatrix> parse_matrices(std::istream& in);

std::string write_matrix(const ExactMatrix& m);

}  // namespace birkhoff
