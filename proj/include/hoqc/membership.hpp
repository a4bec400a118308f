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

#include <cstdint>

#include "hoqc/linops.hpp"
#include "hoqc/signature.hpp"

namespace hoqc {

/**
 * Result of one membership check.  For the deterministic and cascade
 * checks the verdict is psd_deficit, trace_deviation and forbidden_mass
 * all within tolerance.  For the event check the feasibility gap of the
 * projection iteration is reported in both `gap` and `forbidden_mass`, so
 * the same verdict rule applies; `iterations` counts projection sweeps.
 */
struct MembershipReport {
  bool verdict = false;
  double psd_deficit = 0.0;      // -min eigenvalue, clipped at 0
  double trace_deviation = 0.0;  // |Tr X - lambda*d|, or the cascade residual
  double forbidden_mass = 0.0;   // HS mass outside the allowed cells
  double tolerance = 0.0;
  int iterations = 0;            // event check only
  double gap = 0.0;              // event check only
};

/** Outcome of the causal-order demonstration built by switch_demo. */
struct SwitchReport {
  int d = 2;
  MembershipReport arrow_type;    // membership in the full map type
  double mass_first_order = 0.0;  // forbidden mass, first slot applied first
  double mass_second_order = 0.0;
  MembershipReport union_span;    // membership in the two-order union span
  bool union_matches_arrow = false;
};

/**
 * Decide whether X is a deterministic event of the type described by sig:
 * positive semidefinite, trace lambda*d, and supported on the allowed
 * cells.  The Hermitian part of X is analyzed.
 */
MembershipReport check_deterministic(const DenseOp& X, const Signature& sig,
                                     double tol);

/**
 * Decide comb membership through the partial-trace cascade instead of the
 * cell decomposition: wires A_0..A_{2n-1} are `labels` in causal order,
 * and for j = n-1 down to 1 the check accumulates the squared deviation of
 * Tr_{A_{2j+1}}[R^(j)] from I_{A_{2j}} ⊗ R^(j-1), with R^(j-1) read off as
 * partial_trace(R^(j), {A_{2j+1}, A_{2j}})/d_{2j}, ending with
 * Tr_{A_1}[R^(0)] = I_{A_0}.  The total lands in trace_deviation.
 */
MembershipReport check_cascade(const DenseOp& X,
                               const std::vector<SystemLabel>& labels, int n,
                               double tol);

/**
 * Sample a deterministic event of the type: X = lambda*I + mu*T with T a
 * Gaussian Hermitian sample projected onto the allowed cells and
 * mu = 0.9*lambda/|min eig T|, so the spectrum stays above lambda/10.
 * Identical seeds give identical operators.
 */
DenseOp random_deterministic(const Signature& sig, std::uint64_t seed);

/**
 * Hilbert-Schmidt pairing Tr[XY], real part.  Operators sharing factor
 * names are aligned first.  For Hermitian-flagged inputs an imaginary
 * part above 1e-10 throws.
 */
double pairing(const DenseOp& X, const DenseOp& Y);

/**
 * Decide whether the positive operator X is dominated by some
 * deterministic event of the type: whether {R : R >= X} meets the affine
 * set lambda*I + span of allowed cells.  Dykstra alternating projections
 * between the two sets; feasible iff the gap falls below tol within
 * max_iter sweeps, and a gap plateau (relative change below 1e-12 across
 * 100 sweeps) ends the search early as infeasible.
 */
MembershipReport check_event(const DenseOp& X, const Signature& sig,
                             double tol, int max_iter);

/**
 * Build the two-slot supermap that runs its first slot channel before the
 * second when the control is |0> and after it when the control is |1>,
 * take its Choi operator by tomography, and test it against three types:
 * the full map type ((A->B) ⊗ (C->D)) -> (E->F) with d_E = d_F = 2d,
 * each of the two fixed-order comb readings alone, and the span of their
 * union.  The operator passes the first and third and leaves strictly
 * positive forbidden mass in each fixed order.
 */
SwitchReport switch_demo(int d, double tol = 1e-9);

}  // namespace hoqc
