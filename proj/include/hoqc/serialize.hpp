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

#ifndef HOQC_SERIALIZE_HPP_
#define HOQC_SERIALIZE_HPP_

//============================================================================
// JSON exchange formats.
//
// Signature:  {"factors":[{"label","dim"},...],
//              "lambda":{"num","den"},
//              "strings":["01...", ...]}        strings in canonical order
//
// Matrix:     {"factors":[{"label","dim"},...],
//              "data":[[re,im],...]}            N*N entries, row-major,
//                                               leftmost factor most
//                                               significant; N <= 512
//
// Reports carry every residual; keys are stable per report kind.
//============================================================================

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hoqc/combs.hpp"
#include "hoqc/linops.hpp"
#include "hoqc/membership.hpp"
#include "hoqc/signature.hpp"

namespace hoqc {

using Json = nlohmann::ordered_json;

/** Total dimension ceiling for matrix exchange files. */
constexpr long kMaxMatrixDim = 512;

/** Malformed external data (matrix files and similar); distinct from
 *  expression syntax errors so callers can map it to its own exit code. */
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& message)
      : std::runtime_error(message) {}
};

Json signature_to_json(const Signature& sig);

Json matrix_to_json(const DenseOp& op);

/** Parse a matrix object already decoded from JSON text.  Throws
 *  FormatError on any structural defect (missing keys, wrong entry
 *  counts, non-positive dimensions, duplicate labels, N > 512). */
DenseOp matrix_from_json(const Json& j);

/** Read one matrix JSON document from the stream.  FormatError on
 *  unreadable streams, invalid JSON, or an invalid matrix object. */
DenseOp read_matrix(std::istream& in);

/** Write op in matrix JSON, compact, one line plus a trailing newline.
 *  Deterministic: equal operators produce byte-identical output. */
void write_matrix(std::ostream& out, const DenseOp& op);

Json report_to_json(const MembershipReport& report);

Json report_to_json(const TheoremReport& report);

Json report_to_json(const SwitchReport& report);

}  // namespace hoqc

#endif  // HOQC_SERIALIZE_HPP_
