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

#ifndef HOQC_TESTS_SUPPORT_HPP_
#define HOQC_TESTS_SUPPORT_HPP_

//============================================================================
// Test-local helpers and independent oracles.
//
// Everything here is written against raw Eigen matrices with explicit index
// arithmetic, deliberately sharing no code with the library under test, so
// that dimension counts and channel constructions cross-check it.
//============================================================================

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

namespace testsup {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

//----------------------------------------------------------------------------
// elementary constructions

inline MatrixXcd kron2(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b;
    }
  }
  return out;
}

// trace out the most significant (leftmost) tensor factor of dimension dd
inline MatrixXcd ptrace_msb(const MatrixXcd& m, Index dd) {
  const Index keep = m.rows() / dd;
  MatrixXcd out = MatrixXcd::Zero(keep, keep);
  for (Index k = 0; k < dd; ++k) {
    out += m.block(k * keep, k * keep, keep, keep);
  }
  return out;
}

// trace out the least significant (rightmost) tensor factor of dimension dd
inline MatrixXcd ptrace_lsb(const MatrixXcd& m, Index dd) {
  const Index keep = m.rows() / dd;
  MatrixXcd out = MatrixXcd::Zero(keep, keep);
  for (Index i = 0; i < keep; ++i) {
    for (Index j = 0; j < keep; ++j) {
      cplx s = 0.0;
      for (Index k = 0; k < dd; ++k) {
        s += m(i * dd + k, j * dd + k);
      }
      out(i, j) = s;
    }
  }
  return out;
}

//----------------------------------------------------------------------------
// randomness

inline MatrixXcd gaussian_matrix(Index rows, Index cols,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = cplx(normal(rng), normal(rng));
    }
  }
  return m;
}

inline MatrixXcd random_psd(Index n, std::mt19937_64& rng) {
  const MatrixXcd g = gaussian_matrix(n, n, rng);
  return g * g.adjoint();
}

inline MatrixXcd random_density(Index n, std::mt19937_64& rng) {
  MatrixXcd p = random_psd(n, rng);
  return p / p.trace().real();
}

/**
 * Stinespring sampling of a CPTP map: QR of a Gaussian
 * (d_out * d_env) x d_in matrix yields an isometry V whose row blocks are
 * the Kraus operators K_e, so sum_e K_e^dag K_e = V^dag V = I exactly.
 */
inline std::vector<MatrixXcd> random_kraus(Index d_in, Index d_out,
                                           Index d_env,
                                           std::mt19937_64& rng) {
  const MatrixXcd g = gaussian_matrix(d_out * d_env, d_in, rng);
  const Eigen::HouseholderQR<MatrixXcd> qr(g);
  const MatrixXcd v =
      qr.householderQ() * MatrixXcd::Identity(d_out * d_env, d_in);
  std::vector<MatrixXcd> kraus;
  for (Index e = 0; e < d_env; ++e) {
    kraus.push_back(v.block(e * d_out, 0, d_out, d_in));
  }
  return kraus;
}

inline MatrixXcd apply_kraus(const std::vector<MatrixXcd>& kraus,
                             const MatrixXcd& rho) {
  MatrixXcd out =
      MatrixXcd::Zero(kraus.front().rows(), kraus.front().rows());
  for (const MatrixXcd& k : kraus) {
    out += k * rho * k.adjoint();
  }
  return out;
}

/**
 * Choi matrix of the Kraus family, computed here from first principles:
 * R = sum_nm L(|n><m|) (x) |n><m| with the output factor most significant,
 * matching the [out, in] exchange convention.
 */
inline MatrixXcd kraus_choi(const std::vector<MatrixXcd>& kraus) {
  const Index d_in = kraus.front().cols();
  const Index d_out = kraus.front().rows();
  MatrixXcd r = MatrixXcd::Zero(d_out * d_in, d_out * d_in);
  for (Index n = 0; n < d_in; ++n) {
    for (Index m = 0; m < d_in; ++m) {
      MatrixXcd e = MatrixXcd::Zero(d_in, d_in);
      e(n, m) = 1.0;
      const MatrixXcd block = apply_kraus(kraus, e);
      for (Index o = 0; o < d_out; ++o) {
        for (Index p = 0; p < d_out; ++p) {
          r(o * d_in + n, p * d_in + m) += block(o, p);
        }
      }
    }
  }
  return r;
}

//----------------------------------------------------------------------------
// dimension-count oracles
//
// Each oracle reduces a dimension claim to the numeric rank of an explicit
// real matrix, decided by singular values with a relative threshold.

inline Index real_rank(const Eigen::MatrixXd& m) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const VectorXd sv = svd.singularValues();
  if (sv.size() == 0) {
    return 0;
  }
  const double cutoff = 1e-8 * sv(0);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff) {
      ++rank;
    }
  }
  return rank;
}

// real coordinates of a Hermitian matrix: diagonal, then re/im above it
inline VectorXd hermitian_coords(const MatrixXcd& h) {
  const Index n = h.rows();
  VectorXd v(n * n);
  Index at = 0;
  for (Index i = 0; i < n; ++i) {
    v(at++) = h(i, i).real();
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      v(at++) = h(i, j).real();
      v(at++) = h(i, j).imag();
    }
  }
  return v;
}

/** Rank of the affine span of a sample family: rank of the differences
 *  from the first sample. */
inline Index affine_rank(const std::vector<MatrixXcd>& samples) {
  const Index coords = samples.front().rows() * samples.front().rows();
  Eigen::MatrixXd diffs(static_cast<Index>(samples.size()) - 1, coords);
  const VectorXd base = hermitian_coords(samples.front());
  for (std::size_t k = 1; k < samples.size(); ++k) {
    diffs.row(static_cast<Index>(k) - 1) =
        (hermitian_coords(samples[k]) - base).transpose();
  }
  return real_rank(diffs);
}

/** Affine dimension of qubit states, from sampled density matrices. */
inline Index state_dim_oracle(std::mt19937_64& rng) {
  std::vector<MatrixXcd> samples;
  for (int k = 0; k < 24; ++k) {
    samples.push_back(random_density(2, rng));
  }
  return affine_rank(samples);
}

/** Affine dimension of qubit-channel Choi matrices, from sampled CPTP
 *  maps with environments of several sizes. */
inline Index channel_dim_oracle(std::mt19937_64& rng) {
  std::vector<MatrixXcd> samples;
  for (int k = 0; k < 40; ++k) {
    samples.push_back(kraus_choi(random_kraus(2, 2, 2 + k % 3, rng)));
  }
  return affine_rank(samples);
}

// full Hermitian operator basis of an n x n space, n*n elements
inline std::vector<MatrixXcd> hermitian_basis(Index n) {
  std::vector<MatrixXcd> basis;
  for (Index i = 0; i < n; ++i) {
    MatrixXcd e = MatrixXcd::Zero(n, n);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      MatrixXcd s = MatrixXcd::Zero(n, n);
      s(i, j) = 1.0;
      s(j, i) = 1.0;
      basis.push_back(s);
      MatrixXcd a = MatrixXcd::Zero(n, n);
      a(i, j) = cplx(0.0, 1.0);
      a(j, i) = cplx(0.0, -1.0);
      basis.push_back(a);
    }
  }
  return basis;
}

/**
 * Translation dimension of the all-qubit 2-comb set, as the kernel
 * dimension of the linearized cascade constraints on wires
 * A3 (x) A2 (x) A1 (x) A0 (A3 most significant):
 *
 *   C1(T) = Tr_{A3}[T] - I_{A2} (x) (Tr_{A3,A2}[T] / 2)     (64 rows)
 *   C2(T) = Tr_{A3,A2,A1}[T]                                 (4 rows)
 *
 * Result: 256 - rank[C1; C2].
 */
inline Index two_comb_dim_oracle() {
  const std::vector<MatrixXcd> basis = hermitian_basis(16);
  const MatrixXcd eye2 = MatrixXcd::Identity(2, 2);
  Eigen::MatrixXd constraints(68, 256);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const MatrixXcd tr3 = ptrace_msb(basis[col], 2);        // on A2 A1 A0
    const MatrixXcd tr32 = ptrace_msb(tr3, 2);              // on A1 A0
    const MatrixXcd c1 = tr3 - kron2(eye2, tr32 / 2.0);
    const MatrixXcd c2 = ptrace_msb(tr32, 2);               // on A0
    constraints.col(static_cast<Index>(col))
        << hermitian_coords(c1), hermitian_coords(c2);
  }
  return 256 - real_rank(constraints);
}

}  // namespace testsup

#endif  // HOQC_TESTS_SUPPORT_HPP_
