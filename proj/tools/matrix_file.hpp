#ifndef IMAG_TOOLS_MATRIX_FILE_HPP
#define IMAG_TOOLS_MATRIX_FILE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace imagcli {

// JSON matrix container used by the CLI.
//
// Schema: {"kind": "state"|"pure"|"choi"|"unitary",
//          "dims": [rows, cols]            (for choi: [dim_out, dim_in]),
//          "data": [[[re, im], ...], ...]  (row-major)}
// plus an optional "phase" written by `imag canonicalize`.
//
// Data shape: kind "choi" stores a (dim_out*dim_in)^2 square matrix; every
// other kind stores dims[0] x dims[1] directly.
struct MatrixFile {
  std::string kind;
  std::size_t dims[2] = {0, 0};
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> data;  // row-major, rows*cols entries
  std::optional<double> phase;
};

// Throws ParseError on unreadable, malformed, or schema-violating files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MatrixFile read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFile& mf);

}  // namespace imagcli

#endif  // IMAG_TOOLS_MATRIX_FILE_HPP
