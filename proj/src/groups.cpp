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

#include <charconv>
#include <string>

#include "subentropy/algebra.hpp"
#include "subentropy/error.hpp"

namespace subentropy {

namespace {

struct GroupData {
  std::vector<int> irrep_dims;  // irreps of G
  std::vector<int> sub_dims;    // irreps of H
  IntMatrix branching;          // rows: irreps of H, columns: irreps of G
};

// Returns n for ids of the form "Z<n>", 0 otherwise.
int cyclic_order(std::string_view id) {
  if (id.size() < 2 || id[0] != 'Z') return 0;
  int n = 0;
  const auto* end = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(id.data() + 1, end, n);
  if (ec != std::errc() || ptr != end || n < 1) return 0;
  return n;
}

GroupData cyclic(int n, int d) {
  GroupData g;
  g.irrep_dims.assign(static_cast<std::size_t>(n), 1);
  g.sub_dims.assign(static_cast<std::size_t>(d), 1);
  g.branching.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), 0));
  // χ_j of Z_n restricts to χ_{j mod d} of the index-(n/d) subgroup Z_d.
  for (int j = 0; j < n; ++j) g.branching[j % d][j] = 1;
  return g;
}

GroupData trivial_subgroup(const std::vector<int>& dims) {
  return {dims, {1}, {dims}};
}

GroupData whole_group(const std::vector<int>& dims) {
  GroupData g{dims, dims, {}};
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::vector<int> row(dims.size(), 0);
    row[i] = 1;
    g.branching.push_back(row);
  }
  return g;
}

// S3 irreps: trivial, sign, standard.
const std::vector<int> kS3 = {1, 1, 2};
// D4 irreps: A1, A2, B1, B2, E.
const std::vector<int> kD4 = {1, 1, 1, 1, 2};

GroupData lookup(std::string_view group, std::string_view subgroup) {
  if (const int n = cyclic_order(group); n > 0) {
    if (n > 12) fail(ErrorKind::UnsupportedGroup, "cyclic groups are supported up to order 12");
    if (subgroup == "1") return cyclic(n, 1);
    const int d = cyclic_order(subgroup);
    if (d > 0 && n % d == 0) return cyclic(n, d);
    fail(ErrorKind::UnsupportedGroup, std::string(subgroup) + " is not a subgroup of " + std::string(group));
  }
  if (group == "S3") {
    if (subgroup == "1") return trivial_subgroup(kS3);
    if (subgroup == "S3") return whole_group(kS3);
    if (subgroup == "Z3") return {kS3, {1, 1, 1}, {{1, 1, 0}, {0, 0, 1}, {0, 0, 1}}};
    if (subgroup == "Z2") return {kS3, {1, 1}, {{1, 0, 1}, {0, 1, 1}}};
    fail(ErrorKind::UnsupportedGroup, "unsupported subgroup of S3: " + std::string(subgroup));
  }
  if (group == "D4") {
    if (subgroup == "1") return trivial_subgroup(kD4);
    if (subgroup == "D4") return whole_group(kD4);
    if (subgroup == "Z4") {
      return {kD4, {1, 1, 1, 1}, {{1, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 0}, {0, 0, 0, 0, 1}}};
    }
    if (subgroup == "Z2") return {kD4, {1, 1}, {{1, 1, 1, 1, 0}, {0, 0, 0, 0, 2}}};
    if (subgroup == "Z2r") return {kD4, {1, 1}, {{1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}}};
    if (subgroup == "V4") {
      return {kD4, {1, 1, 1, 1}, {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}}};
    }
    fail(ErrorKind::UnsupportedGroup, "unsupported subgroup of D4: " + std::string(subgroup));
  }
  fail(ErrorKind::UnsupportedGroup, "unsupported group: " + std::string(group));
}

int sum_of_squares(const std::vector<int>& dims) {
  int total = 0;
  for (int d : dims) total += d * d;
  return total;
}

}  // namespace

int group_order(std::string_view group) { return sum_of_squares(lookup(group, "1").irrep_dims); }

int subgroup_order(std::string_view group, std::string_view subgroup) {
  return sum_of_squares(lookup(group, subgroup).sub_dims);
}

Inclusion group_inclusion(std::string_view group, std::string_view subgroup) {
  const GroupData g = lookup(group, subgroup);
  const double order_g = sum_of_squares(g.irrep_dims);
  const double order_h = sum_of_squares(g.sub_dims);
  RawInclusion raw;
  for (int d : g.sub_dims) raw.sub.push_back({d, d / order_h});
  for (int d : g.irrep_dims) raw.amb.push_back({d, d / order_g});
  raw.a = g.branching;
  return validate_inclusion(raw);
}

std::vector<std::pair<std::string, std::string>> supported_subgroups() {
  std::vector<std::pair<std::string, std::string>> out;
  for (int n = 1; n <= 12; ++n) {
    const std::string g = "Z" + std::to_string(n);
    out.emplace_back(g, "1");
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) out.emplace_back(g, "Z" + std::to_string(d));
  }
  for (const char* h : {"1", "Z2", "Z3", "S3"}) out.emplace_back("S3", h);
  for (const char* h : {"1", "Z2", "Z2r", "Z4", "V4", "D4"}) out.emplace_back("D4", h);
  return out;
}

}  // namespace subentropy
