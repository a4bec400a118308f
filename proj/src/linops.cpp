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

#include "hoqc/linops.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoqc {

namespace {

using Eigen::Index;
using Eigen::MatrixXcd;

// Row-major mixed-radix layout of a factor list: factor i has stride
// equal to the product of the dimensions to its right.
std::vector<Index> strides_of(const std::vector<SystemLabel>& factors) {
  std::vector<Index> strides(factors.size(), 1);
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * factors[i + 1].dim;
  }
  return strides;
}

Index total_dim(const std::vector<SystemLabel>& factors) {
  Index n = 1;
  for (const SystemLabel& f : factors) n *= f.dim;
  return n;
}

// Flat offsets contributed by a subset of factor positions, enumerated
// row-major over that subset.  offsets[sub_index] = Σ idx_p · stride[p].
std::vector<Index> subset_offsets(const std::vector<int>& positions,
                                  const std::vector<SystemLabel>& factors,
                                  const std::vector<Index>& strides) {
  Index count = 1;
  for (int p : positions) count *= factors[p].dim;
  std::vector<Index> offsets(count, 0);
  Index repeat = count;
  for (int p : positions) {
    const Index d = factors[p].dim;
    repeat /= d;
    // digit for position p cycles with period `repeat` within each block
    for (Index i = 0; i < count; ++i) {
      offsets[i] += ((i / repeat) % d) * strides[p];
    }
  }
  return offsets;
}

int find_factor(const std::vector<SystemLabel>& factors,
                const std::string& name) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

// Replace the component at factor position p by its identity average
// (I/d) ⊗ Tr_p, leaving all other factors untouched.
MatrixXcd identity_average(const MatrixXcd& m,
                           const std::vector<SystemLabel>& factors, int p) {
  const std::vector<Index> strides = strides_of(factors);
  const Index d = factors[p].dim;
  const Index stride = strides[p];
  const Index left = m.rows() / (d * stride);
  MatrixXcd out = MatrixXcd::Zero(m.rows(), m.cols());
  for (Index lr = 0; lr < left; ++lr) {
    for (Index rr = 0; rr < stride; ++rr) {
      const Index row_base = lr * d * stride + rr;
      for (Index lc = 0; lc < left; ++lc) {
        for (Index rc = 0; rc < stride; ++rc) {
          const Index col_base = lc * d * stride + rc;
          std::complex<double> sum = 0.0;
          for (Index t = 0; t < d; ++t) {
            sum += m(row_base + t * stride, col_base + t * stride);
          }
          sum /= static_cast<double>(d);
          for (Index a = 0; a < d; ++a) {
            out(row_base + a * stride, col_base + a * stride) = sum;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

int DenseOp::factor_index(const std::string& name) const {
  return find_factor(factors, name);
}

void check_op(const DenseOp& op, const char* where) {
  std::set<std::string> names;
  for (const SystemLabel& f : op.factors) {
    if (f.dim < 1) {
      throw std::invalid_argument(std::string(where) + ": dimension of '" +
                                  f.name + "' must be at least 1");
    }
    if (!names.insert(f.name).second) {
      throw std::invalid_argument(std::string(where) + ": duplicate factor '" +
                                  f.name + "'");
    }
  }
  const Index n = total_dim(op.factors);
  if (op.mat.rows() != n || op.mat.cols() != n) {
    throw std::invalid_argument(
        std::string(where) + ": matrix is " + std::to_string(op.mat.rows()) +
        "x" + std::to_string(op.mat.cols()) + " but factors give " +
        std::to_string(n));
  }
}

DenseOp identity_op(const std::vector<SystemLabel>& factors) {
  DenseOp op;
  op.factors = factors;
  const Index n = total_dim(factors);
  op.mat = MatrixXcd::Identity(n, n);
  op.hermitian = true;
  check_op(op, "identity_op");
  return op;
}

DenseOp strip_trivial(const DenseOp& op) {
  DenseOp out;
  out.mat = op.mat;
  out.hermitian = op.hermitian;
  for (const SystemLabel& f : op.factors) {
    if (f.dim >= 2) out.factors.push_back(f);
  }
  return out;
}

DenseOp kron(const DenseOp& a, const DenseOp& b) {
  check_op(a, "kron");
  check_op(b, "kron");
  for (const SystemLabel& f : b.factors) {
    if (find_factor(a.factors, f.name) >= 0) {
      throw std::invalid_argument("kron: factor '" + f.name +
                                  "' appears in both operands");
    }
  }
  DenseOp out;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  const Index na = a.mat.rows();
  const Index nb = b.mat.rows();
  out.mat.resize(na * nb, na * nb);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < na; ++j) {
      out.mat.block(i * nb, j * nb, nb, nb) = a.mat(i, j) * b.mat;
    }
  }
  out.hermitian = a.hermitian && b.hermitian;
  return out;
}

DenseOp reorder_op(const DenseOp& op, const std::vector<SystemLabel>& order) {
  check_op(op, "reorder_op");
  if (order.size() != op.factors.size()) {
    throw std::invalid_argument("reorder_op: factor count mismatch");
  }
  const std::vector<Index> strides = strides_of(op.factors);
  std::vector<int> src(order.size());
  std::vector<char> used(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int p = find_factor(op.factors, order[i].name);
    if (p < 0 || used[p]) {
      throw std::invalid_argument("reorder_op: '" + order[i].name +
                                  "' does not match the operator's factors");
    }
    if (op.factors[p].dim != order[i].dim) {
      throw std::invalid_argument("reorder_op: dimension mismatch for '" +
                                  order[i].name + "'");
    }
    used[p] = 1;
    src[i] = p;
  }
  std::vector<int> positions(src.begin(), src.end());
  const std::vector<Index> offsets =
      subset_offsets(positions, op.factors, strides);
  DenseOp out;
  out.factors = order;
  out.hermitian = op.hermitian;
  const Index n = op.mat.rows();
  out.mat.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      out.mat(i, j) = op.mat(offsets[i], offsets[j]);
    }
  }
  return out;
}

DenseOp embed(const DenseOp& op, const std::vector<SystemLabel>& full) {
  check_op(op, "embed");
  const std::vector<Index> strides = strides_of(full);
  std::vector<int> op_positions;
  for (const SystemLabel& f : op.factors) {
    const int p = find_factor(full, f.name);
    if (p < 0) {
      throw std::invalid_argument("embed: factor '" + f.name +
                                  "' missing from the target space");
    }
    if (full[p].dim != f.dim) {
      throw std::invalid_argument("embed: dimension mismatch for '" + f.name +
                                  "'");
    }
    op_positions.push_back(p);
  }
  std::vector<int> rest_positions;
  for (std::size_t p = 0; p < full.size(); ++p) {
    if (std::find(op_positions.begin(), op_positions.end(),
                  static_cast<int>(p)) == op_positions.end()) {
      rest_positions.push_back(static_cast<int>(p));
    }
  }
  const std::vector<Index> op_off = subset_offsets(op_positions, full, strides);
  const std::vector<Index> rest_off =
      subset_offsets(rest_positions, full, strides);

  DenseOp out;
  out.factors = full;
  out.hermitian = op.hermitian;
  const Index n = total_dim(full);
  out.mat = MatrixXcd::Zero(n, n);
  for (Index i = 0; i < op.mat.rows(); ++i) {
    for (Index j = 0; j < op.mat.cols(); ++j) {
      const std::complex<double> v = op.mat(i, j);
      if (v == std::complex<double>(0.0, 0.0)) continue;
      for (Index t : rest_off) {
        out.mat(op_off[i] + t, op_off[j] + t) = v;
      }
    }
  }
  return out;
}

DenseOp partial_trace(const DenseOp& op, const std::set<std::string>& drop) {
  check_op(op, "partial_trace");
  std::vector<int> drop_pos;
  for (const std::string& name : drop) {
    const int p = find_factor(op.factors, name);
    if (p < 0) {
      throw std::invalid_argument("partial_trace: unknown factor '" + name +
                                  "'");
    }
    drop_pos.push_back(p);
  }
  std::sort(drop_pos.begin(), drop_pos.end());
  std::vector<int> keep_pos;
  for (std::size_t p = 0; p < op.factors.size(); ++p) {
    if (!std::binary_search(drop_pos.begin(), drop_pos.end(),
                            static_cast<int>(p))) {
      keep_pos.push_back(static_cast<int>(p));
    }
  }
  const std::vector<Index> strides = strides_of(op.factors);
  const std::vector<Index> keep_off =
      subset_offsets(keep_pos, op.factors, strides);
  const std::vector<Index> drop_off =
      subset_offsets(drop_pos, op.factors, strides);

  DenseOp out;
  for (int p : keep_pos) out.factors.push_back(op.factors[p]);
  out.hermitian = op.hermitian;
  const Index n = static_cast<Index>(keep_off.size());
  out.mat.resize(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      std::complex<double> sum = 0.0;
      for (Index t : drop_off) {
        sum += op.mat(keep_off[i] + t, keep_off[j] + t);
      }
      out.mat(i, j) = sum;
    }
  }
  return out;
}

DenseOp choi_from_kraus(const std::vector<Eigen::MatrixXcd>& kraus,
                        const SystemLabel& in_label,
                        const SystemLabel& out_label) {
  if (kraus.empty()) {
    throw std::invalid_argument("choi_from_kraus: empty Kraus list");
  }
  const Index d_out = kraus.front().rows();
  const Index d_in = kraus.front().cols();
  if (d_out != out_label.dim || d_in != in_label.dim) {
    throw std::invalid_argument(
        "choi_from_kraus: Kraus shape does not match the labels");
  }
  DenseOp out;
  out.factors = {out_label, in_label};
  out.mat = MatrixXcd::Zero(d_out * d_in, d_out * d_in);
  for (const MatrixXcd& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw std::invalid_argument("choi_from_kraus: inconsistent Kraus shape");
    }
    // ch(K·K†) entry [(i,m),(j,n)] = K(i,m) · conj(K(j,n)): a rank-one
    // update by the row-major vectorization of K.
    Eigen::VectorXcd v(d_out * d_in);
    for (Index i = 0; i < d_out; ++i) {
      for (Index m = 0; m < d_in; ++m) v(i * d_in + m) = k(i, m);
    }
    out.mat += v * v.adjoint();
  }
  out.hermitian = true;
  return out;
}

DenseOp choi_of_map(
    const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& fn,
    const std::vector<SystemLabel>& in_factors,
    const std::vector<SystemLabel>& out_factors) {
  const Index d_in = total_dim(in_factors);
  const Index d_out = total_dim(out_factors);
  DenseOp out;
  out.factors = out_factors;
  out.factors.insert(out.factors.end(), in_factors.begin(), in_factors.end());
  out.mat.resize(d_out * d_in, d_out * d_in);
  MatrixXcd unit = MatrixXcd::Zero(d_in, d_in);
  for (Index i = 0; i < d_in; ++i) {
    for (Index j = 0; j < d_in; ++j) {
      unit(i, j) = 1.0;
      const MatrixXcd m = fn(unit);
      unit(i, j) = 0.0;
      if (m.rows() != d_out || m.cols() != d_out) {
        throw std::invalid_argument("choi_of_map: wrong output shape");
      }
      for (Index o = 0; o < d_out; ++o) {
        for (Index p = 0; p < d_out; ++p) {
          out.mat(o * d_in + i, p * d_in + j) = m(o, p);
        }
      }
    }
  }
  check_op(out, "choi_of_map");
  return out;
}

DenseOp apply_choi(const DenseOp& R, const DenseOp& rho,
                   const std::vector<std::string>& in_labels,
                   const std::vector<std::string>& out_labels) {
  check_op(R, "apply_choi");
  check_op(rho, "apply_choi");
  if (in_labels.size() + out_labels.size() != R.factors.size()) {
    throw std::invalid_argument(
        "apply_choi: in/out labels do not partition the Choi factors");
  }
  std::vector<SystemLabel> out_f;
  std::vector<SystemLabel> in_f;
  for (const std::string& name : out_labels) {
    const int p = find_factor(R.factors, name);
    if (p < 0) {
      throw std::invalid_argument("apply_choi: unknown output label '" + name +
                                  "'");
    }
    out_f.push_back(R.factors[p]);
  }
  for (const std::string& name : in_labels) {
    const int p = find_factor(R.factors, name);
    if (p < 0) {
      throw std::invalid_argument("apply_choi: unknown input label '" + name +
                                  "'");
    }
    in_f.push_back(R.factors[p]);
  }
  std::vector<SystemLabel> choi_order = out_f;
  choi_order.insert(choi_order.end(), in_f.begin(), in_f.end());
  const DenseOp R2 = reorder_op(R, choi_order);
  const DenseOp rho2 = reorder_op(rho, in_f);

  const Index d_in = total_dim(in_f);
  const Index d_out = total_dim(out_f);
  DenseOp out;
  out.factors = out_f;
  out.mat = MatrixXcd::Zero(d_out, d_out);
  for (Index o = 0; o < d_out; ++o) {
    for (Index p = 0; p < d_out; ++p) {
      std::complex<double> sum = 0.0;
      for (Index i = 0; i < d_in; ++i) {
        for (Index j = 0; j < d_in; ++j) {
          // Tr_in[(I ⊗ ρ^T) R]: the transpose cancels against the trace
          // pairing, leaving Σ_ij ρ(i,j) R[(o,i),(p,j)]
          sum += R2.mat(o * d_in + i, p * d_in + j) * rho2.mat(i, j);
        }
      }
      out.mat(o, p) = sum;
    }
  }
  out.hermitian = R.hermitian && rho.hermitian;
  return out;
}

DenseOp project_component(const DenseOp& op, const BitString& b) {
  check_op(op, "project_component");
  if (b.size() != op.factors.size()) {
    throw std::invalid_argument(
        "project_component: bit string does not cover the factors");
  }
  MatrixXcd m = op.mat;
  for (std::size_t p = 0; p < op.factors.size(); ++p) {
    const auto it = b.find(op.factors[p].name);
    if (it == b.end()) {
      throw std::invalid_argument("project_component: no bit for factor '" +
                                  op.factors[p].name + "'");
    }
    const MatrixXcd avg =
        identity_average(m, op.factors, static_cast<int>(p));
    m = it->second ? avg : MatrixXcd(m - avg);
  }
  DenseOp out;
  out.factors = op.factors;
  out.mat = std::move(m);
  out.hermitian = op.hermitian;
  return out;
}

Decomposition decompose(const DenseOp& op, const Signature& sig) {
  const DenseOp stripped = strip_trivial(op);
  check_op(stripped, "decompose");
  std::vector<SystemLabel> a = stripped.factors;
  std::vector<SystemLabel> b = sig.factors;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) {
    throw std::invalid_argument(
        "decompose: operator factors do not match the signature");
  }
  const DenseOp aligned = reorder_op(stripped, sig.factors);
  const std::size_t k = sig.factors.size();
  const Index d = aligned.mat.rows();

  Decomposition dec;
  dec.factors = sig.factors;
  dec.identity_coeff = aligned.mat.trace().real() / static_cast<double>(d);

  // Depth-first split: at display position p, the identity-average child
  // takes bit 1 and the complement child bit 0.
  struct Walker {
    const Signature& sig;
    const DenseOp& aligned;
    Decomposition& dec;
    std::size_t k;

    void split(const MatrixXcd& m, std::size_t p, std::uint64_t mask) {
      if (p == k) {
        if (mask == sig.ones_mask()) return;  // identity cell, held as coeff
        const double mass = m.squaredNorm();
        dec.coefficients[mask] = mass;
        DenseOp part;
        part.factors = sig.factors;
        part.mat = m;
        part.hermitian = aligned.hermitian;
        dec.components[mask] = std::move(part);
        if (sig.strings.count(mask)) {
          dec.allowed_mass += mass;
        } else {
          dec.forbidden_mass += mass;
        }
        return;
      }
      const MatrixXcd avg =
          identity_average(m, sig.factors, static_cast<int>(p));
      split(avg, p + 1, mask | (std::uint64_t{1} << (k - 1 - p)));
      split(m - avg, p + 1, mask);
    }
  };
  Walker{sig, aligned, dec, k}.split(aligned.mat, 0, 0);
  return dec;
}

Eigen::MatrixXcd sum_allowed_cells(const Eigen::MatrixXcd& m,
                                   const Signature& sig) {
  const std::size_t k = sig.factors.size();
  const Index n = m.rows();
  if (n != sig.total_dim() || m.cols() != n) {
    throw std::invalid_argument(
        "sum_allowed_cells: matrix does not match the signature");
  }
  struct Walker {
    const Signature& sig;
    std::size_t k;
    MatrixXcd sum;

    void split(const MatrixXcd& part, std::size_t p, std::uint64_t mask) {
      if (p == k) {
        if (sig.strings.count(mask)) sum += part;
        return;
      }
      const MatrixXcd avg =
          identity_average(part, sig.factors, static_cast<int>(p));
      split(avg, p + 1, mask | (std::uint64_t{1} << (k - 1 - p)));
      split(part - avg, p + 1, mask);
    }
  };
  Walker walker{sig, k, MatrixXcd::Zero(n, n)};
  walker.split(m, 0, 0);
  return walker.sum;
}

DenseOp supermap_choi(
    const std::function<Eigen::MatrixXcd(
        const std::vector<Eigen::MatrixXcd>&)>& evaluator,
    const std::vector<Signature>& slot_sigs, const Signature& out_sig) {
  const std::size_t num_slots = slot_sigs.size();
  std::vector<Index> slot_dim(num_slots);
  Index slots_total = 1;
  for (std::size_t s = 0; s < num_slots; ++s) {
    slot_dim[s] = slot_sigs[s].total_dim();
    slots_total *= slot_dim[s];
  }
  const Index d_out = out_sig.total_dim();
  const Index n = d_out * slots_total;

  DenseOp out;
  out.factors = out_sig.factors;
  for (const Signature& s : slot_sigs) {
    out.factors.insert(out.factors.end(), s.factors.begin(), s.factors.end());
  }
  out.mat.resize(n, n);

  // One matrix-unit combination per slot: rows pick I_s, columns J_s.
  std::vector<Index> is(num_slots, 0);
  std::vector<Index> js(num_slots, 0);
  std::vector<MatrixXcd> units(num_slots);
  for (std::size_t s = 0; s < num_slots; ++s) {
    units[s] = MatrixXcd::Zero(slot_dim[s], slot_dim[s]);
  }
  while (true) {
    for (std::size_t s = 0; s < num_slots; ++s) units[s](is[s], js[s]) = 1.0;
    const MatrixXcd m = evaluator(units);
    for (std::size_t s = 0; s < num_slots; ++s) units[s](is[s], js[s]) = 0.0;
    if (m.rows() != d_out || m.cols() != d_out) {
      throw std::invalid_argument("supermap_choi: wrong evaluator shape");
    }
    Index row_tail = 0;
    Index col_tail = 0;
    for (std::size_t s = 0; s < num_slots; ++s) {
      row_tail = row_tail * slot_dim[s] + is[s];
      col_tail = col_tail * slot_dim[s] + js[s];
    }
    for (Index o = 0; o < d_out; ++o) {
      for (Index p = 0; p < d_out; ++p) {
        out.mat(o * slots_total + row_tail, p * slots_total + col_tail) =
            m(o, p);
      }
    }
    // advance the (I, J) multi-index
    int pos = static_cast<int>(2 * num_slots) - 1;
    for (; pos >= 0; --pos) {
      const std::size_t s = pos / 2;
      Index& digit = (pos % 2 == 0) ? is[s] : js[s];
      if (++digit < slot_dim[s]) break;
      digit = 0;
    }
    if (pos < 0) break;
  }

  const double herm_defect =
      (out.mat - out.mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-10) {
    throw std::runtime_error(
        "supermap_choi: tomography produced a non-Hermitian operator "
        "(defect " +
        std::to_string(herm_defect) + "); evaluator is not a valid supermap");
  }
  out.hermitian = true;
  check_op(out, "supermap_choi");
  return out;
}

}  // namespace hoqc
