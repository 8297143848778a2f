#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "symtoep/analysis.hpp"
#include "symtoep/lattice.hpp"
#include "symtoep/operators.hpp"
#include "symtoep/symbols.hpp"

namespace symtoep {

// Deterministic serialization: fixed key order, %.17g floats, sorted-map
// iteration. Identical values produce byte-identical text.
std::string format_double(double x);  // throws on non-finite values
std::string json_escape(const std::string& text);

std::string to_json(const IndexWindow& w);
std::string to_json(const FourierSymbol& f);   // symbol-file format, round-trips
std::string to_json(const OperatorMatrix& A);  // window descriptors + [re,im] pairs
std::string to_json(const CheckReport& r);

// Parses both symbol-file formats:
//   {"format":"fourier","symmetrize":false,"coefficients":[{"m","n","re","im"},...]}
//   {"format":"sp-poly","terms":[{"s","p","sbar","pbar","re","im"},...]}
// With symmetrize, fourier coefficients listed once per unordered pair {m,n}
// are mirrored; sp-poly input is converted through the symmetrization map.
FourierSymbol parse_symbol(const std::string& text);

// Matrix input: either the full form written by to_json(OperatorMatrix) or
// the abstract square form {"dim":n,"entries":[[re,im],...]}.
struct ParsedMatrix {
    std::optional<IndexWindow> rows;
    std::optional<IndexWindow> cols;
    Eigen::MatrixXcd entries;
    std::string label;
};
ParsedMatrix parse_matrix(const std::string& text);

// Pair input for the certifiers: {"T": <matrix>, "V": <matrix>}.
std::pair<ParsedMatrix, ParsedMatrix> parse_matrix_pair(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace symtoep
