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

#include "hoqc/membership.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hoqc/combs.hpp"

namespace hoqc {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;

constexpr double kPi = 3.14159265358979323846;

// Hermitian part of an operator aligned to the signature's factor order.
DenseOp aligned_hermitian(const DenseOp& X, const Signature& sig,
                          const char* where) {
  DenseOp stripped = strip_trivial(X);
  check_op(stripped, where);
  std::vector<SystemLabel> a = stripped.factors;
  std::vector<SystemLabel> b = sig.factors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw std::invalid_argument(std::string(where) +
                                ": operator factors do not match the type");
  }
  DenseOp out = reorder_op(stripped, sig.factors);
  out.mat = 0.5 * (out.mat + out.mat.adjoint().eval());
  out.hermitian = true;
  return out;
}

double min_eigenvalue(const MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// Deterministic standard normal stream: 53-bit uniforms through the
// Box-Muller transform, so a seed pins the sampled operator exactly.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform() {
    // (0,1): never 0, so the logarithm stays finite
    return (static_cast<double>(rng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

MatrixXcd gaussian_hermitian(Index n, NormalStream& normals) {
  MatrixXcd m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      m(i, j) = std::complex<double>(normals.next(), normals.next());
    }
  }
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

MembershipReport check_deterministic(const DenseOp& X, const Signature& sig,
                                     double tol) {
  if (tol <= 0) {
    throw std::invalid_argument("check_deterministic: tolerance must be > 0");
  }
  const DenseOp H = aligned_hermitian(X, sig, "check_deterministic");
  MembershipReport report;
  report.tolerance = tol;
  report.psd_deficit = std::max(0.0, -min_eigenvalue(H.mat));
  const double expected_trace =
      sig.lambda.to_double() * static_cast<double>(sig.total_dim());
  report.trace_deviation = std::abs(H.mat.trace().real() - expected_trace);
  report.forbidden_mass = decompose(H, sig).forbidden_mass;
  report.verdict = report.psd_deficit <= tol &&
                   report.trace_deviation <= tol &&
                   report.forbidden_mass <= tol;
  return report;
}

MembershipReport check_cascade(const DenseOp& X,
                               const std::vector<SystemLabel>& labels, int n,
                               double tol) {
  if (tol <= 0) {
    throw std::invalid_argument("check_cascade: tolerance must be > 0");
  }
  if (n < 1 || labels.size() != static_cast<std::size_t>(2 * n)) {
    throw std::invalid_argument("check_cascade: expected " +
                                std::to_string(2 * n) + " wire labels");
  }
  check_op(X, "check_cascade");
  {
    std::vector<SystemLabel> a = X.factors;
    std::vector<SystemLabel> b = labels;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw std::invalid_argument(
          "check_cascade: operator factors do not match the wire labels");
    }
  }

  DenseOp R = X;
  R.mat = 0.5 * (R.mat + R.mat.adjoint().eval());
  R.hermitian = true;

  MembershipReport report;
  report.tolerance = tol;
  report.psd_deficit = std::max(0.0, -min_eigenvalue(R.mat));

  // Squared deviations keep the residual on the same quadratic scale as
  // forbidden_mass, so the two comb checks flip at comparable thresholds.
  double residual = 0.0;
  for (int j = n - 1; j >= 1; --j) {
    const DenseOp lhs = partial_trace(R, {labels[2 * j + 1].name});
    DenseOp next =
        partial_trace(R, {labels[2 * j + 1].name, labels[2 * j].name});
    next.mat /= static_cast<double>(labels[2 * j].dim);
    const DenseOp expected = embed(next, lhs.factors);
    residual += (lhs.mat - expected.mat).squaredNorm();
    R = std::move(next);
  }
  const DenseOp last = partial_trace(R, {labels[1].name});
  residual +=
      (last.mat - MatrixXcd::Identity(last.mat.rows(), last.mat.cols()))
          .squaredNorm();

  report.trace_deviation = residual;
  report.forbidden_mass = 0.0;
  report.verdict = report.psd_deficit <= tol && residual <= tol;
  return report;
}

DenseOp random_deterministic(const Signature& sig, std::uint64_t seed) {
  const double lambda = sig.lambda.to_double();
  const Index n = sig.total_dim();
  DenseOp out;
  out.factors = sig.factors;
  out.hermitian = true;
  if (sig.strings.empty()) {
    out.mat = lambda * MatrixXcd::Identity(n, n);
    return out;
  }

  NormalStream normals(seed);
  const MatrixXcd g = gaussian_hermitian(n, normals);
  const MatrixXcd t = sum_allowed_cells(g, sig);
  const double min_eig = min_eigenvalue(t);
  if (t.norm() < 1e-14 || min_eig >= -1e-14) {
    // a nonzero traceless sample always dips negative; guard regardless
    out.mat = lambda * MatrixXcd::Identity(n, n);
    return out;
  }
  const double mu = 0.9 * lambda / std::abs(min_eig);
  out.mat = lambda * MatrixXcd::Identity(n, n) + mu * t;
  return out;
}

double pairing(const DenseOp& X, const DenseOp& Y) {
  const DenseOp xs = strip_trivial(X);
  DenseOp ys = strip_trivial(Y);
  check_op(xs, "pairing");
  check_op(ys, "pairing");
  if (xs.mat.rows() != ys.mat.rows()) {
    throw std::invalid_argument("pairing: total dimension mismatch");
  }
  std::set<std::string> xn;
  std::set<std::string> yn;
  for (const SystemLabel& f : xs.factors) xn.insert(f.name);
  for (const SystemLabel& f : ys.factors) yn.insert(f.name);
  if (xn == yn) {
    ys = reorder_op(ys, xs.factors);
  }
  const std::complex<double> value = (xs.mat * ys.mat).trace();
  if (xs.hermitian && ys.hermitian && std::abs(value.imag()) > 1e-10) {
    throw std::runtime_error(
        "pairing: Hermitian inputs produced an imaginary trace of " +
        std::to_string(value.imag()));
  }
  return value.real();
}

MembershipReport check_event(const DenseOp& X, const Signature& sig,
                             double tol, int max_iter) {
  if (tol <= 0 || max_iter < 1) {
    throw std::invalid_argument("check_event: tol > 0 and max_iter >= 1");
  }
  const DenseOp H = aligned_hermitian(X, sig, "check_event");
  MembershipReport report;
  report.tolerance = tol;
  report.psd_deficit = std::max(0.0, -min_eigenvalue(H.mat));
  if (report.psd_deficit > tol) {
    return report;  // not a positive operator, so not an event
  }

  // Feasibility of {R : R >= X} ∩ {lambda*I + span of allowed cells} by
  // Dykstra's algorithm: alternate the affine projection and the shifted
  // PSD-cone projection with their correction terms.
  const double lambda = sig.lambda.to_double();
  const Index n = H.mat.rows();
  const MatrixXcd identity = MatrixXcd::Identity(n, n);

  MatrixXcd x = H.mat;
  MatrixXcd p = MatrixXcd::Zero(n, n);
  MatrixXcd q = MatrixXcd::Zero(n, n);
  std::vector<double> gaps;
  gaps.reserve(static_cast<std::size_t>(std::min(max_iter, 4096)));
  double gap = 0.0;

  for (int iter = 1; iter <= max_iter; ++iter) {
    const MatrixXcd y = lambda * identity + sum_allowed_cells(x + p, sig);
    p = x + p - y;

    MatrixXcd excess = y + q - H.mat;
    excess = 0.5 * (excess + excess.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(excess);
    const Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
    const MatrixXcd xnew = H.mat + solver.eigenvectors() *
                                       clipped.asDiagonal() *
                                       solver.eigenvectors().adjoint();
    q = y + q - xnew;
    x = xnew;

    gap = (x - y).norm();
    report.iterations = iter;
    if (gap <= tol) {
      report.verdict = true;
      break;
    }
    gaps.push_back(gap);
    const std::size_t window = 100;
    if (gaps.size() > window) {
      const double before = gaps[gaps.size() - 1 - window];
      if (std::abs(before - gap) <= 1e-12 * std::max(gap, 1e-300)) {
        break;  // stalled above tolerance: infeasible
      }
    }
  }
  report.gap = gap;
  report.forbidden_mass = gap;
  return report;
}

SwitchReport switch_demo(int d, double tol) {
  if (d < 2) {
    throw std::invalid_argument("switch_demo: d >= 2 required");
  }
  const SystemLabel A{"A", d}, B{"B", d}, C{"C", d}, D{"D", d};
  const SystemLabel E{"E", 2 * d}, F{"F", 2 * d};

  const Signature slot1 = arrow_sig(elementary_sig(A), elementary_sig(B));
  const Signature slot2 = arrow_sig(elementary_sig(C), elementary_sig(D));
  const Signature out_sig = arrow_sig(elementary_sig(E), elementary_sig(F));

  // Output Choi of the control-ordered composition as a bilinear map of
  // the slot Chois.  Slot matrices live on [out, in] with the output most
  // significant; E and F indices split as system*2 + control.
  const Index dd = d;
  const auto evaluator =
      [dd](const std::vector<MatrixXcd>& slots) -> MatrixXcd {
    const MatrixXcd& ra = slots[0];
    const MatrixXcd& rc = slots[1];
    const Index two_d = 2 * dd;
    MatrixXcd out = MatrixXcd::Zero(two_d * two_d, two_d * two_d);
    for (Index s = 0; s < dd; ++s) {
      for (Index c = 0; c < 2; ++c) {
        for (Index t = 0; t < dd; ++t) {
          for (Index s2 = 0; s2 < dd; ++s2) {
            for (Index c2 = 0; c2 < 2; ++c2) {
              for (Index t2 = 0; t2 < dd; ++t2) {
                std::complex<double> sum = 0.0;
                for (Index k = 0; k < dd; ++k) {
                  for (Index k2 = 0; k2 < dd; ++k2) {
                    if (c == 0 && c2 == 0) {
                      sum += ra(s * dd + k, s2 * dd + k2) *
                             rc(k * dd + t, k2 * dd + t2);
                    } else if (c == 0 && c2 == 1) {
                      sum += ra(s * dd + k, k2 * dd + t2) *
                             rc(k * dd + t, s2 * dd + k2);
                    } else if (c == 1 && c2 == 0) {
                      sum += ra(k * dd + t, s2 * dd + k2) *
                             rc(s * dd + k, k2 * dd + t2);
                    } else {
                      sum += ra(k * dd + t, k2 * dd + t2) *
                             rc(s * dd + k, s2 * dd + k2);
                    }
                  }
                }
                const Index f = s * 2 + c;
                const Index e = t * 2 + c;
                const Index f2 = s2 * 2 + c2;
                const Index e2 = t2 * 2 + c2;
                out(f * two_d + e, f2 * two_d + e2) = sum;
              }
            }
          }
        }
      }
    }
    return out;
  };

  const DenseOp S = supermap_choi(evaluator, {slot1, slot2}, out_sig);

  const Signature arrow = arrow_sig(tensor_sig(slot1, slot2), out_sig);
  const Signature first =
      permuted_comb_sig(CombSpec{3, {E, A, B, C, D, F}, {}});
  const Signature second =
      permuted_comb_sig(CombSpec{3, {E, C, D, A, B, F}, {}});

  Signature union_span;
  union_span.factors = first.factors;
  union_span.lambda = first.lambda;
  const Signature second_aligned = reorder(second, first.factors);
  std::set_union(
      first.strings.begin(), first.strings.end(),
      second_aligned.strings.begin(), second_aligned.strings.end(),
      std::inserter(union_span.strings, union_span.strings.begin()));

  SwitchReport report;
  report.d = d;
  report.arrow_type = check_deterministic(S, arrow, tol);
  report.mass_first_order = check_deterministic(S, first, tol).forbidden_mass;
  report.mass_second_order =
      check_deterministic(S, second, tol).forbidden_mass;
  report.union_span = check_deterministic(S, union_span, tol);
  report.union_matches_arrow = types_equal(union_span, arrow);
  return report;
}

}  // namespace hoqc
