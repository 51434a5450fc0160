#include "matrix_file.hpp"

#include <cmath>
#include <fstream>

#include "json.hpp"

namespace imagcli {

namespace {

using nlohmann::json;

bool known_kind(const std::string& kind) {
  return kind == "state" || kind == "pure" || kind == "choi" ||
         kind == "unitary";
}

[[noreturn]] void bail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

}  // namespace

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream input(path);
  if (!input) bail(path, "cannot open file");
  json doc;
  try {
    input >> doc;
  } catch (const json::exception& e) {
    bail(path, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("dims") ||
      !doc.contains("data")) {
    bail(path, "expected an object with kind, dims, data");
  }

  MatrixFile mf;
  try {
    mf.kind = doc.at("kind").get<std::string>();
    const auto& dims = doc.at("dims");
    if (!dims.is_array() || dims.size() != 2) bail(path, "dims must be [m, n]");
    mf.dims[0] = dims.at(0).get<std::size_t>();
    mf.dims[1] = dims.at(1).get<std::size_t>();
    if (doc.contains("phase")) mf.phase = doc.at("phase").get<double>();
  } catch (const json::exception& e) {
    bail(path, std::string("bad header field: ") + e.what());
  }
  if (!known_kind(mf.kind)) bail(path, "unknown kind '" + mf.kind + "'");
  if (mf.dims[0] == 0 || mf.dims[1] == 0) bail(path, "dims must be positive");

  if (mf.kind == "choi") {
    mf.rows = mf.cols = mf.dims[0] * mf.dims[1];
  } else {
    mf.rows = mf.dims[0];
    mf.cols = mf.dims[1];
  }

  const auto& data = doc.at("data");
  if (!data.is_array() || data.size() != mf.rows) {
    bail(path, "data row count does not match dims");
  }
  mf.data.reserve(mf.rows * mf.cols);
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != mf.cols) {
      bail(path, "data column count does not match dims");
    }
    for (const auto& entry : row) {
      if (!entry.is_array() || entry.size() != 2 ||
          !entry.at(0).is_number() || !entry.at(1).is_number()) {
        bail(path, "entries must be [re, im] number pairs");
      }
      const double re = entry.at(0).get<double>();
      const double im = entry.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        bail(path, "entries must be finite");
      }
      mf.data.emplace_back(re, im);
    }
  }
  return mf;
}

void write_matrix_file(const std::string& path, const MatrixFile& mf) {
  json doc;
  doc["kind"] = mf.kind;
  doc["dims"] = {mf.dims[0], mf.dims[1]};
  json rows = json::array();
  for (std::size_t i = 0; i < mf.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < mf.cols; ++j) {
      const auto& z = mf.data[i * mf.cols + j];
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(std::move(row));
  }
  doc["data"] = std::move(rows);
  if (mf.phase.has_value()) doc["phase"] = *mf.phase;

  std::ofstream output(path);
  if (!output) throw ParseError(path + ": cannot open for writing");
  output << doc.dump(2) << '\n';
  if (!output) throw ParseError(path + ": write failed");
}

}  // namespace imagcli
