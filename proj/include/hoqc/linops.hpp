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

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hoqc/signature.hpp"

namespace hoqc {

/**
 * Dense operator on a tensor product of labeled systems.  The matrix is
 * indexed row-major with the leftmost factor most significant.  The
 * `hermitian` flag marks operators constructed to satisfy
 * ‖X − X†‖_max ≤ 1e−12; it is advisory and preserved by the operations
 * that cannot break it.
 */
struct DenseOp {
  std::vector<SystemLabel> factors;
  Eigen::MatrixXcd mat;
  bool hermitian = false;

  /** Product of factor dimensions; equals the matrix size. */
  Eigen::Index dim() const { return mat.rows(); }

  /** Display position of a factor, -1 if absent. */
  int factor_index(const std::string& name) const;
};

/**
 * Per-cell Hilbert-Schmidt weights of an operator, relative to a
 * signature.  `coefficients` maps each non-identity cell mask (in the
 * signature's factor order) to ‖Π_b X‖²_HS, and `components` holds the
 * projected parts themselves, so X = identity_coeff·I + Σ components.
 * `allowed_mass`/`forbidden_mass` split the cell weights by membership in
 * the signature's string set.
 */
struct Decomposition {
  std::vector<SystemLabel> factors;
  double identity_coeff = 0.0;
  std::map<std::uint64_t, double> coefficients;
  std::map<std::uint64_t, DenseOp> components;
  double allowed_mass = 0.0;
  double forbidden_mass = 0.0;
};

/** Validate factor/matrix consistency; throws std::invalid_argument. */
void check_op(const DenseOp& op, const char* where);

/** Identity operator with the given factors, flagged Hermitian. */
DenseOp identity_op(const std::vector<SystemLabel>& factors);

/** Copy without dimension-1 factors; the matrix is unchanged. */
DenseOp strip_trivial(const DenseOp& op);

/** Tensor product; factors(A) then factors(B). Labels must not clash. */
DenseOp kron(const DenseOp& a, const DenseOp& b);

/** Permute the factor order; `order` must match factors up to order. */
DenseOp reorder_op(const DenseOp& op, const std::vector<SystemLabel>& order);

/** Tensor with identities so the result has exactly `full` as factors. */
DenseOp embed(const DenseOp& op, const std::vector<SystemLabel>& full);

/** Trace out the named factors; remaining factor order is preserved. */
DenseOp partial_trace(const DenseOp& op, const std::set<std::string>& drop);

/**
 * Choi operator Σ_k (K_k ⊗ I)|Ω⟩⟨Ω|(K_k ⊗ I)† of the map with the given
 * Kraus operators (each d_out×d_in), |Ω⟩ = Σ_n |n⟩|n⟩ in the canonical
 * basis.  Factors are [out, in].
 */
DenseOp choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        const SystemLabel& in_label,
                        const SystemLabel& out_label);

/**
 * Choi operator of an arbitrary linear map given as a callable on input
 * matrices: Σ_{ij} fn(E_ij) ⊗ E_ij over matrix units of the input space.
 * Factors are out_factors then in_factors.
 */
DenseOp choi_of_map(
    const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& fn,
    const std::vector<SystemLabel>& in_factors,
    const std::vector<SystemLabel>& out_factors);

/**
 * Apply a map through its Choi operator: Tr_in[(I_out ⊗ ρ^T) R], with the
 * transpose taken in the canonical basis.  in_labels and out_labels must
 * partition factors(R); rho must live on in_labels.
 */
DenseOp apply_choi(const DenseOp& R, const DenseOp& rho,
                   const std::vector<std::string>& in_labels,
                   const std::vector<std::string>& out_labels);

/**
 * Cell projector Π_b: factor by factor, the identity-average
 * P₁ = (I/d)·Tr_factor where b names the factor with 1, and P₀ = id − P₁
 * where it names it with 0.  b must be keyed on exactly factors(X).
 */
DenseOp project_component(const DenseOp& op, const BitString& b);

/**
 * Split an operator into its cell components relative to sig.  The
 * operator must carry the signature's factors (dimension-1 factors are
 * ignored on the operator side); its cells are computed in the
 * signature's factor order.
 */
Decomposition decompose(const DenseOp& op, const Signature& sig);

/**
 * Sum of the cell components of a matrix over the signature's allowed
 * strings (the projection onto span{L_b : b allowed}; the identity cell
 * is not included).  The matrix must already be indexed in the
 * signature's factor order.
 */
Eigen::MatrixXcd sum_allowed_cells(const Eigen::MatrixXcd& m,
                                   const Signature& sig);

/**
 * Choi operator of a multi-slot supermap given only as an evaluator from
 * slot Choi matrices (one per slot, in each slot signature's factor
 * order) to the output Choi matrix (in out_sig's factor order).  The
 * evaluator must be linear in every slot; the assembled operator must
 * come out Hermitian to 1e−10 or the call throws.  Factors are
 * out_sig.factors followed by each slot's factors in turn.
 */
DenseOp supermap_choi(
    const std::function<Eigen::MatrixXcd(
        const std::vector<Eigen::MatrixXcd>&)>& evaluator,
    const std::vector<Signature>& slot_sigs, const Signature& out_sig);

}  // namespace hoqc
