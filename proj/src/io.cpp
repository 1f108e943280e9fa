// Copyright 2026 The subentropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subentropy/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "subentropy/error.hpp"

namespace subentropy {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

std::vector<Block> parse_blocks(const Json& j) {
  std::vector<Block> out;
  for (const Json& b : j.at("blocks")) {
    if (!b.is_array() || b.size() != 2) fail(ErrorKind::ParseError, "block must be [dim, weight]");
    out.push_back({b.at(0).get<int>(), b.at(1).get<double>()});
  }
  return out;
}

Json blocks_to_json(const DirectSumAlgebra& alg) {
  Json blocks = Json::array();
  for (const Block& b : alg.blocks()) blocks.push_back({b.dim, json_number(b.weight)});
  return {{"blocks", blocks}};
}

cplx parse_entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2) return {e.at(0).get<double>(), e.at(1).get<double>()};
  fail(ErrorKind::ParseError, "matrix entry must be a number or [re, im]");
}

Matrix parse_matrix(const Json& rows) {
  if (!rows.is_array() || rows.empty()) fail(ErrorKind::ParseError, "matrix must be a nonempty list of rows");
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.at(0).size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const Json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) fail(ErrorKind::ParseError, "ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = parse_entry(row.at(static_cast<std::size_t>(k)));
  }
  return m;
}

RealMatrix parse_real_matrix(const Json& rows) {
  const Matrix m = parse_matrix(rows);
  if (m.imag().cwiseAbs().maxCoeff() != 0.0) fail(ErrorKind::ParseError, "matrix must be real");
  return m.real();
}

Json matrix_to_json(const Matrix& m, bool complex) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (complex) {
        row.push_back({json_number(m(i, k).real()), json_number(m(i, k).imag())});
      } else {
        row.push_back(json_number(m(i, k).real()));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

Json curve(const std::vector<double>& v, double scale) {
  Json out = Json::array();
  for (double x : v) out.push_back(json_number(x * scale));
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json json_number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return v;
}

Json parse_json_text(std::string_view text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

RawInclusion parse_inclusion(const Json& j) {
  return guarded("inclusion", [&] {
    RawInclusion raw;
    raw.sub = parse_blocks(j.at("sub"));
    raw.amb = parse_blocks(j.at("amb"));
    raw.a = j.at("inclusion_matrix").get<IntMatrix>();
    raw.normalize = j.value("normalize", true);
    return raw;
  });
}

Json inclusion_to_json(const Inclusion& inc) {
  return {{"sub", blocks_to_json(inc.sub())},
          {"amb", blocks_to_json(inc.amb())},
          {"inclusion_matrix", inc.inclusion_matrix()},
          {"normalize", false}};
}

AlgebraElement parse_state(const Json& j, const Inclusion& inc) {
  return guarded("state", [&] {
    const std::string which = j.value("algebra", std::string("amb"));
    if (which != "sub" && which != "amb") fail(ErrorKind::ParseError, "state algebra must be \"sub\" or \"amb\"");
    return parse_state(j, which == "sub" ? inc.sub() : inc.amb());
  });
}

AlgebraElement parse_state(const Json& j, const DirectSumAlgebra& alg) {
  return guarded("state", [&] {
    std::vector<Matrix> blocks;
    for (const Json& b : j.at("blocks")) blocks.push_back(parse_matrix(b));
    return AlgebraElement(alg, std::move(blocks));
  });
}

Json state_to_json(const AlgebraElement& x, std::string_view which) {
  Json blocks = Json::array();
  for (const Matrix& m : x.blocks()) blocks.push_back(matrix_to_json(m, true));
  return {{"algebra", std::string(which)}, {"blocks", blocks}};
}

GeneratorInput parse_generator(const Json& j) {
  return guarded("generator", [&] {
    GeneratorInput g;
    g.type = j.at("type").get<std::string>();
    if (g.type == "schur") {
      g.schur.emplace(parse_real_matrix(j.at("b")));
    } else if (g.type == "schur_map") {
      g.map.emplace(parse_real_matrix(j.at("a")));
    } else if (g.type == "superop") {
      g.general.emplace(DirectSumAlgebra(parse_blocks(j.at("algebra")), j.value("normalize", true)),
                        parse_matrix(j.at("matrix")));
    } else {
      fail(ErrorKind::ParseError, "unknown generator type " + g.type);
    }
    return g;
  });
}

Json generator_to_json(const GeneratorInput& g) {
  if (g.schur) return {{"type", "schur"}, {"b", matrix_to_json(g.schur->b().cast<cplx>(), false)}};
  if (g.map) return {{"type", "schur_map"}, {"a", matrix_to_json(g.map->a().cast<cplx>(), false)}};
  if (g.general) {
    return {{"type", "superop"},
            {"algebra", blocks_to_json(g.general->algebra())},
            {"normalize", false},
            {"matrix", matrix_to_json(g.general->superoperator(), true)}};
  }
  fail(ErrorKind::Internal, "empty generator");
}

Json index_report_to_json(const IndexReport& r, double scale) {
  Json per_block = Json::array();
  for (const auto& [l, v] : r.per_block) per_block.push_back({l, json_number(v)});
  return {{"neg_log_lambda", json_number(r.neg_log_lambda * scale)},
          {"dcb", json_number(r.dcb * scale)},
          {"per_block", per_block},
          {"argmax_block", r.argmax_block}};
}

Json decay_report_to_json(const DecayReport& r, double scale) {
  Json j = {{"t", curve(r.t_grid, 1.0)},
            {"d1", curve(r.d1_curve, scale)},
            {"d2", curve(r.d2_curve, scale)},
            {"bound", curve(r.bound_curve, scale)},
            {"trace_dist", curve(r.trace_dist_curve, 1.0)},
            {"gap", json_number(r.gap)},
            {"violations", r.violations},
            {"refined_slack", json_number(r.refined_slack)}};
  if (r.threshold_step >= 0) {
    j["threshold_step"] = r.threshold_step;
    j["target_violations"] = r.target_violations;
  }
  return j;
}

std::string decay_report_csv(const DecayReport& r, double scale) {
  std::ostringstream out;
  out << "t,d1,d2,bound,trace_dist\n";
  for (std::size_t i = 0; i < r.t_grid.size(); ++i) {
    out << format_number(r.t_grid[i]) << ',' << format_number(r.d1_curve[i] * scale) << ','
        << format_number(r.d2_curve[i] * scale) << ',' << format_number(r.bound_curve[i] * scale) << ','
        << format_number(r.trace_dist_curve[i]) << '\n';
  }
  return out.str();
}

}  // namespace subentropy
