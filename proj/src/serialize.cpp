// Copyright 2026 The hoqc developers
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

#include "hoqc/serialize.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace hoqc {

namespace {

Json factors_to_json(const std::vector<SystemLabel>& factors) {
  Json arr = Json::array();
  for (const SystemLabel& f : factors) {
    arr.push_back(Json{{"label", f.name}, {"dim", f.dim}});
  }
  return arr;
}

std::vector<SystemLabel> factors_from_json(const Json& arr) {
  if (!arr.is_array()) {
    throw FormatError("matrix JSON: \"factors\" must be an array");
  }
  std::vector<SystemLabel> factors;
  std::set<std::string> seen;
  for (const Json& item : arr) {
    if (!item.is_object() || !item.contains("label") ||
        !item.contains("dim") || !item["label"].is_string() ||
        !item["dim"].is_number_integer()) {
      throw FormatError(
          "matrix JSON: each factor needs a string \"label\" and an "
          "integer \"dim\"");
    }
    const std::string name = item["label"].get<std::string>();
    const long dim = item["dim"].get<long>();
    if (name.empty()) {
      throw FormatError("matrix JSON: empty factor label");
    }
    if (dim < 1) {
      throw FormatError("matrix JSON: factor \"" + name +
                        "\" has dimension " + std::to_string(dim));
    }
    if (!seen.insert(name).second) {
      throw FormatError("matrix JSON: duplicate factor label \"" + name +
                        "\"");
    }
    factors.push_back(SystemLabel{name, dim});
  }
  return factors;
}

}  // namespace

Json signature_to_json(const Signature& sig) {
  Json j;
  j["factors"] = factors_to_json(sig.factors);
  j["lambda"] = Json{{"num", sig.lambda.num()}, {"den", sig.lambda.den()}};
  Json strings = Json::array();
  for (const std::string& s : sig.rendered_strings()) {
    strings.push_back(s);
  }
  j["strings"] = std::move(strings);
  return j;
}

Json matrix_to_json(const DenseOp& op) {
  check_op(op, "matrix_to_json");
  Json j;
  j["factors"] = factors_to_json(op.factors);
  Json data = Json::array();
  const Eigen::Index n = op.mat.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::complex<double> v = op.mat(r, c);
      data.push_back(Json::array({v.real(), v.imag()}));
    }
  }
  j["data"] = std::move(data);
  return j;
}

DenseOp matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("data")) {
    throw FormatError(
        "matrix JSON: expected an object with \"factors\" and \"data\"");
  }
  DenseOp op;
  op.factors = factors_from_json(j["factors"]);

  long total = 1;
  for (const SystemLabel& f : op.factors) {
    total *= f.dim;
    if (total > kMaxMatrixDim) {
      throw FormatError("matrix JSON: total dimension exceeds " +
                        std::to_string(kMaxMatrixDim));
    }
  }

  const Json& data = j["data"];
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(total) *
                         static_cast<std::size_t>(total)) {
    throw FormatError("matrix JSON: \"data\" must hold exactly " +
                      std::to_string(total * total) + " entries");
  }
  op.mat.resize(total, total);
  std::size_t idx = 0;
  for (long r = 0; r < total; ++r) {
    for (long c = 0; c < total; ++c, ++idx) {
      const Json& cell = data[idx];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw FormatError("matrix JSON: entry " + std::to_string(idx) +
                          " is not a [re, im] pair");
      }
      op.mat(r, c) = std::complex<double>(cell[0].get<double>(),
                                          cell[1].get<double>());
    }
  }
  op.hermitian = false;
  return op;
}

DenseOp read_matrix(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("matrix JSON: ") + e.what());
  }
  if (in.bad()) {
    throw FormatError("matrix JSON: stream read failure");
  }
  return matrix_from_json(j);
}

void write_matrix(std::ostream& out, const DenseOp& op) {
  out << matrix_to_json(op).dump() << '\n';
}

Json report_to_json(const MembershipReport& report) {
  Json j;
  j["verdict"] = report.verdict;
  j["psd_deficit"] = report.psd_deficit;
  j["trace_deviation"] = report.trace_deviation;
  j["forbidden_mass"] = report.forbidden_mass;
  j["tolerance"] = report.tolerance;
  j["iterations"] = report.iterations;
  j["gap"] = report.gap;
  return j;
}

Json report_to_json(const TheoremReport& report) {
  Json j;
  j["claim"] = report.claim;
  Json params = Json::object();
  if (report.m >= 1) {
    params["m"] = report.m;
  }
  params["n"] = report.n;
  j["params"] = std::move(params);
  j["equal"] = report.equal;
  j["lhs_size"] = report.lhs_size;
  j["rhs_size"] = report.rhs_size;
  if (report.witness.has_value()) {
    j["witness"] = *report.witness;
  }
  if (report.pair_equal.has_value()) {
    j["pair_equal"] = *report.pair_equal;
  }
  return j;
}

Json report_to_json(const SwitchReport& report) {
  Json j;
  j["d"] = report.d;
  j["arrow_type"] = report_to_json(report.arrow_type);
  j["mass_first_order"] = report.mass_first_order;
  j["mass_second_order"] = report.mass_second_order;
  j["union_span"] = report_to_json(report.union_span);
  j["union_matches_arrow"] = report.union_matches_arrow;
  return j;
}

}  // namespace hoqc
