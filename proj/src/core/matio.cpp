/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "core/matio.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qomega {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; convert to line/column for the error text.
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

RMat parse_grid(const json& j, const char* key, int d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d)
    throw Error(Err::ParseError, std::string(key) + " must be a " + std::to_string(d) + "-row array");
  RMat out(d, d);
  for (int r = 0; r < d; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw Error(Err::ParseError, std::string(key) + " row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < d; ++c) out(r, c) = row.at(c).get<double>();
  }
  return out;
}

}  // namespace

HermOp matrix_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(Err::ParseError, "matrix JSON parse error at line " + std::to_string(line) +
                                     ", column " + std::to_string(col) + ": " + e.what());
  }
  try {
    const int da = j.at("dim_a").get<int>();
    const int db = j.at("dim_b").get<int>();
    if (da < 1 || db < 1) throw Error(Err::ParseError, "dim_a/dim_b must be positive");
    const int d = da * db;
    RMat re = parse_grid(j.at("re"), "re", d);
    RMat im = j.contains("im") ? parse_grid(j.at("im"), "im", d) : RMat::Zero(d, d);
    Mat m = re.cast<cxd>() + cxd(0, 1) * im.cast<cxd>();
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-9)
      throw Error(Err::InvalidOperator,
                  "matrix entries are not Hermitian (deviation " + std::to_string(dev) + ")");
    return HermOp(da, db, hermitize(m));
  } catch (const json::exception& e) {
    throw Error(Err::ParseError, std::string("matrix JSON is missing or mistypes a field: ") + e.what());
  }
}

std::string matrix_to_json(const HermOp& h) {
  json j;
  j["dim_a"] = h.da;
  j["dim_b"] = h.db;
  const int d = h.dim();
  json re = json::array(), im = json::array();
  for (int r = 0; r < d; ++r) {
    json rr = json::array(), ri = json::array();
    for (int c = 0; c < d; ++c) {
      rr.push_back(h.m(r, c).real());
      ri.push_back(h.m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

HermOp matrix_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::IoError, "cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return matrix_from_json(buf.str());
}

void matrix_write(const std::string& path, const HermOp& h) {
  std::ofstream out(path);
  if (!out) throw Error(Err::IoError, "cannot open matrix file for writing: " + path);
  out << matrix_to_json(h) << "\n";
}

}  // namespace qomega
