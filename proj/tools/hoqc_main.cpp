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

//============================================================================
// hoqc command-line front end.
//
// Subcommands: sig, eq, check, verify, random, switch.
// Exit codes: 0 pass/true, 1 fail/false, 2 usage or syntax error,
// 3 data-format error.
//============================================================================

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hoqc/combs.hpp"
#include "hoqc/linops.hpp"
#include "hoqc/membership.hpp"
#include "hoqc/serialize.hpp"
#include "hoqc/signature.hpp"
#include "hoqc/typegen.hpp"
#include "hoqc/typelang.hpp"

namespace {

using hoqc::Json;

constexpr std::uint64_t kDefaultSeed = 1;

/** Parameter combinations the option parser cannot rule out; exit 2. */
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& message)
      : std::runtime_error(message) {}
};

struct Config {
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  int max_iter = 5000;
  int size_limit = 6;
  std::string output = "human";
  bool full = false;

  bool json() const { return output == "json"; }
  std::uint64_t base_seed() const { return seed.value_or(kDefaultSeed); }

  void note_seed() const {
    if (!seed.has_value()) {
      std::cerr << "seed: " << kDefaultSeed << " (default)\n";
    }
  }
};

// splitmix64 step: derive decorrelated per-sample seeds from one base seed
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--tol", cfg.tol, "Numeric tolerance (default 1e-9)")
      ->envname("HOQC_TOL")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed,
                  "RNG seed (default 1; the default is announced on stderr)");
  cmd->add_option("--max-iter", cfg.max_iter,
                  "Iteration cap for the event check (default 5000)")
      ->check(CLI::Range(1, 100000000));
  cmd->add_option("--size-limit", cfg.size_limit,
                  "Largest verified instance, as m+n or wire count "
                  "(default 6)")
      ->check(CLI::Range(1, 18));
  cmd->add_option("--output", cfg.output, "Report style: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  cmd->add_flag("--full", cfg.full, "List all strings, however many");
}

hoqc::DenseOp load_matrix(const std::string& path) {
  if (path == "-") {
    return hoqc::read_matrix(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw hoqc::FormatError("cannot open file: " + path);
  }
  return hoqc::read_matrix(in);
}

void print_membership(const hoqc::MembershipReport& report,
                      const Config& cfg) {
  if (cfg.json()) {
    std::cout << hoqc::report_to_json(report).dump(2) << '\n';
    return;
  }
  std::cout << "verdict: " << (report.verdict ? "pass" : "fail") << '\n'
            << "psd_deficit: " << fmt(report.psd_deficit) << '\n'
            << "trace_deviation: " << fmt(report.trace_deviation) << '\n'
            << "forbidden_mass: " << fmt(report.forbidden_mass) << '\n'
            << "tolerance: " << fmt(report.tolerance) << '\n';
  if (report.iterations > 0) {
    std::cout << "iterations: " << report.iterations << '\n'
              << "gap: " << fmt(report.gap) << '\n';
  }
}

//============================================================================
// sig
//============================================================================

int cmd_sig(const std::string& expr_text, const Config& cfg) {
  const hoqc::TypeExprPtr expr = hoqc::parse(expr_text);
  const hoqc::Signature sig = hoqc::signature_of(expr);
  std::optional<std::int64_t> dd;
  try {
    dd = hoqc::delta_dim(sig);
  } catch (const std::overflow_error&) {
    // reported as unavailable below
  }

  if (cfg.json()) {
    const Json base = hoqc::signature_to_json(sig);
    Json out;
    out["factors"] = base["factors"];
    out["lambda"] = base["lambda"];
    out["string_count"] = sig.strings.size();
    if (dd.has_value()) {
      out["delta_dim"] = *dd;
    } else {
      out["delta_dim"] = nullptr;
    }
    out["strings"] = base["strings"];
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "lambda: " << sig.lambda.to_string() << '\n';
  std::cout << "factors:";
  if (sig.factors.empty()) {
    std::cout << " (none)";
  }
  for (const hoqc::SystemLabel& f : sig.factors) {
    std::cout << ' ' << f.name << ':' << f.dim;
  }
  std::cout << '\n';
  std::cout << "string count: " << sig.strings.size() << '\n';
  std::cout << "delta_dim: ";
  if (dd.has_value()) {
    std::cout << *dd;
  } else {
    std::cout << "(too large for 64 bits)";
  }
  std::cout << '\n';
  if (sig.strings.size() > 64 && !cfg.full) {
    std::cout << "strings: (" << sig.strings.size()
              << " strings; rerun with --full to list them)\n";
  } else {
    std::cout << "strings:\n";
    for (const std::string& s : sig.rendered_strings()) {
      std::cout << "  " << s << '\n';
    }
  }
  return 0;
}

//============================================================================
// eq
//============================================================================

std::string eq_witness(const hoqc::Signature& a, const hoqc::Signature& b) {
  std::vector<hoqc::SystemLabel> fa = a.factors;
  std::vector<hoqc::SystemLabel> fb = b.factors;
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  if (fa != fb) {
    return "factor multisets differ";
  }
  if (!(a.lambda == b.lambda)) {
    return "lambda " + a.lambda.to_string() + " vs " + b.lambda.to_string();
  }
  const hoqc::Signature b2 = hoqc::reorder(b, a.factors);
  for (const std::uint64_t mask : a.strings) {
    if (b2.strings.count(mask) == 0) {
      return "string " + a.render_mask(mask) + " only in the left type";
    }
  }
  for (const std::uint64_t mask : b2.strings) {
    if (a.strings.count(mask) == 0) {
      return "string " + a.render_mask(mask) + " only in the right type";
    }
  }
  return "";
}

int cmd_eq(const std::string& text_a, const std::string& text_b,
           const Config& cfg) {
  const hoqc::Signature sa = hoqc::signature_of(hoqc::parse(text_a));
  const hoqc::Signature sb = hoqc::signature_of(hoqc::parse(text_b));
  const bool equal = hoqc::types_equal(sa, sb);
  const std::string witness = equal ? "" : eq_witness(sa, sb);
  if (cfg.json()) {
    Json out;
    out["equal"] = equal;
    if (!equal) {
      out["witness"] = witness;
    }
    std::cout << out.dump(2) << '\n';
  } else if (equal) {
    std::cout << "equal\n";
  } else {
    std::cout << "unequal: " << witness << '\n';
  }
  return equal ? 0 : 1;
}

//============================================================================
// check
//============================================================================

int cmd_check(const std::string& path, const std::string& expr_text,
              bool event_mode, const Config& cfg) {
  const hoqc::Signature sig = hoqc::signature_of(hoqc::parse(expr_text));
  const hoqc::DenseOp op = load_matrix(path);
  hoqc::MembershipReport report;
  try {
    report = event_mode
                 ? hoqc::check_event(op, sig, cfg.tol, cfg.max_iter)
                 : hoqc::check_deterministic(op, sig, cfg.tol);
  } catch (const std::invalid_argument& e) {
    // well-formed file, but its factors do not fit the type
    throw hoqc::FormatError(e.what());
  }
  print_membership(report, cfg);
  return report.verdict ? 0 : 1;
}

//============================================================================
// verify
//============================================================================

std::string render_bit_string(const std::vector<hoqc::SystemLabel>& order,
                              const hoqc::BitString& bits) {
  std::string out;
  for (const hoqc::SystemLabel& f : order) {
    const auto it = bits.find(f.name);
    out += (it != bits.end() && it->second) ? '1' : '0';
  }
  return out;
}

bool theorem_pass(const hoqc::TheoremReport& report) {
  return report.equal && report.pair_equal.value_or(true);
}

void print_theorem_line(const hoqc::TheoremReport& report) {
  std::cout << report.claim;
  if (report.m >= 1) {
    std::cout << " m=" << report.m;
  }
  std::cout << " n=" << report.n << ": "
            << (theorem_pass(report) ? "pass" : "FAIL") << " (lhs "
            << report.lhs_size << " strings, rhs " << report.rhs_size
            << " strings";
  if (report.pair_equal.has_value()) {
    std::cout << ", minimal pair "
              << (*report.pair_equal ? "agrees" : "DISAGREES");
  }
  if (report.witness.has_value()) {
    std::cout << ", witness " << *report.witness;
  }
  std::cout << ")\n";
}

int finish_theorem_suite(const std::string& claim,
                         const std::vector<hoqc::TheoremReport>& cases,
                         const Config& cfg) {
  bool pass = true;
  for (const hoqc::TheoremReport& r : cases) {
    pass = pass && theorem_pass(r);
  }
  if (cfg.json()) {
    Json out;
    out["claim"] = claim;
    out["pass"] = pass;
    Json arr = Json::array();
    for (const hoqc::TheoremReport& r : cases) {
      arr.push_back(hoqc::report_to_json(r));
    }
    out["cases"] = std::move(arr);
    std::cout << out.dump(2) << '\n';
  } else {
    for (const hoqc::TheoremReport& r : cases) {
      print_theorem_line(r);
    }
    std::cout << claim << ": " << (pass ? "pass" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

std::vector<std::pair<int, int>> two_comb_cases(std::optional<int> m,
                                                std::optional<int> n,
                                                int size_limit) {
  if (m.has_value() != n.has_value()) {
    throw UsageError("give --m and --n together, or neither for the sweep");
  }
  std::vector<std::pair<int, int>> cases;
  if (m.has_value()) {
    if (*m < 1 || *n < 1) {
      throw UsageError("--m and --n must be at least 1");
    }
    if (*m + *n > size_limit) {
      throw UsageError("m+n exceeds --size-limit " +
                       std::to_string(size_limit));
    }
    cases.emplace_back(*m, *n);
    return cases;
  }
  for (int mm = 1; mm < size_limit; ++mm) {
    for (int nn = 1; mm + nn <= size_limit; ++nn) {
      cases.emplace_back(mm, nn);
    }
  }
  return cases;
}

int verify_two_comb(const std::string& claim, std::optional<int> m,
                    std::optional<int> n, const Config& cfg) {
  std::vector<hoqc::TheoremReport> reports;
  for (const auto& [mm, nn] : two_comb_cases(m, n, cfg.size_limit)) {
    reports.push_back(claim == "interst"
                          ? hoqc::verify_interleaving_intersection(mm, nn)
                          : hoqc::verify_tombstone(mm, nn));
  }
  return finish_theorem_suite(claim, reports, cfg);
}

int verify_comb_strings(std::optional<int> n, const Config& cfg) {
  std::vector<int> ns;
  if (n.has_value()) {
    if (*n < 1 || *n > cfg.size_limit) {
      throw UsageError("--n must lie in [1, size-limit]");
    }
    ns.push_back(*n);
  } else {
    for (int i = 1; i <= cfg.size_limit; ++i) {
      ns.push_back(i);
    }
  }

  std::vector<hoqc::TheoremReport> reports;
  for (const int teeth : ns) {
    std::vector<hoqc::SystemLabel> wires;
    for (int i = 0; i < 2 * teeth; ++i) {
      wires.push_back(hoqc::SystemLabel{"A" + std::to_string(i), 2});
    }
    const std::set<hoqc::BitString> direct = hoqc::comb_strings(teeth, wires);
    const hoqc::Signature sig =
        hoqc::signature_of(hoqc::make_comb(teeth, wires));
    const std::set<hoqc::BitString> recursive = sig.bit_strings();

    hoqc::TheoremReport report;
    report.claim = "comb-strings";
    report.m = 0;
    report.n = teeth;
    report.equal = direct == recursive;
    report.lhs_size = direct.size();
    report.rhs_size = recursive.size();
    if (!report.equal) {
      std::vector<hoqc::BitString> diff;
      std::set_symmetric_difference(direct.begin(), direct.end(),
                                    recursive.begin(), recursive.end(),
                                    std::back_inserter(diff));
      if (!diff.empty()) {
        report.witness = render_bit_string(sig.factors, diff.front());
      }
    }
    reports.push_back(std::move(report));
  }
  return finish_theorem_suite("comb-strings", reports, cfg);
}

int verify_duality(int samples, const Config& cfg) {
  cfg.note_seed();
  const std::uint64_t base = cfg.base_seed();
  const int types = 10;
  long checked = 0;
  long failures = 0;
  std::string witness;

  for (int t = 0; t < types; ++t) {
    hoqc::TypeExprPtr ty;
    hoqc::Signature sig;
    for (std::uint64_t attempt = 0;; ++attempt) {
      ty = hoqc::random_type(mix_seed(base, 7000 + 131 * t + attempt), 4, 3);
      sig = hoqc::signature_of(ty);
      if (sig.total_dim() <= 16) {
        break;  // keep sampled carriers small enough for dense checks
      }
    }
    const hoqc::Signature dual = hoqc::bar_sig(sig);
    for (int s = 0; s < samples; ++s) {
      const std::uint64_t salt =
          (static_cast<std::uint64_t>(t) * 1000003ULL + s) * 2ULL;
      const hoqc::DenseOp X =
          hoqc::random_deterministic(sig, mix_seed(base, salt));
      const hoqc::DenseOp Y =
          hoqc::random_deterministic(dual, mix_seed(base, salt + 1));
      const double p = hoqc::pairing(X, Y);
      ++checked;
      if (std::abs(p - 1.0) > cfg.tol) {
        ++failures;
        if (witness.empty()) {
          witness = "type " + hoqc::render(ty) + ", sample " +
                    std::to_string(s) + ", pairing " + fmt(p);
        }
      }
    }
  }

  const bool pass = failures == 0;
  if (cfg.json()) {
    Json out;
    out["claim"] = "duality";
    out["params"] = Json{{"types", types},
                         {"samples", samples},
                         {"seed", base},
                         {"tol", cfg.tol}};
    out["pass"] = pass;
    out["checked"] = checked;
    out["failures"] = failures;
    if (!witness.empty()) {
      out["witness"] = witness;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "duality: " << (checked - failures) << '/' << checked
              << " pairings at 1 +/- " << fmt(cfg.tol) << ": "
              << (pass ? "pass" : "FAIL") << '\n';
    if (!witness.empty()) {
      std::cout << "first failure: " << witness << '\n';
    }
  }
  return pass ? 0 : 1;
}

int verify_cascade_agreement(std::optional<int> n, int samples,
                             const Config& cfg) {
  cfg.note_seed();
  const std::uint64_t base = cfg.base_seed();
  std::vector<int> ns;
  if (n.has_value()) {
    if (*n < 1 || 2 * *n > cfg.size_limit) {
      throw UsageError("cascade-agreement needs 2n <= size-limit");
    }
    ns.push_back(*n);
  } else {
    ns = {1, 2, 3};
  }

  long checked = 0;
  long failures = 0;
  std::string witness;

  for (const int teeth : ns) {
    std::vector<hoqc::SystemLabel> wires;
    for (int i = 0; i < 2 * teeth; ++i) {
      wires.push_back(hoqc::SystemLabel{"A" + std::to_string(i), 2});
    }
    const hoqc::Signature sig =
        hoqc::signature_of(hoqc::make_comb(teeth, wires));
    const double lambda = sig.lambda.to_double();
    const Eigen::Index dim = sig.total_dim();
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(dim, dim);

    // one known-forbidden cell: identity on the last wire, traceless
    // below, i.e. the rendered string 10...0
    hoqc::Signature forbidden;
    forbidden.factors = sig.factors;
    forbidden.lambda = sig.lambda;
    forbidden.strings = {std::uint64_t{1} << (sig.num_factors() - 1)};

    for (int s = 0; s < samples; ++s) {
      const std::uint64_t seed_s =
          mix_seed(base, static_cast<std::uint64_t>(teeth) * 1000003ULL + s);
      hoqc::DenseOp X;
      switch (s % 4) {
        case 0:
          X = hoqc::random_deterministic(sig, seed_s);
          break;
        case 1:
          X = hoqc::random_deterministic(sig, seed_s);
          X.mat *= 0.9;
          break;
        case 2: {
          X = hoqc::random_deterministic(sig, seed_s);
          const hoqc::DenseOp bad =
              hoqc::random_deterministic(forbidden, mix_seed(seed_s, 7));
          X.mat += bad.mat - lambda * identity;
          break;
        }
        default:
          X.factors = sig.factors;
          X.mat = lambda * identity;
          X.hermitian = true;
          break;
      }
      const hoqc::MembershipReport det =
          hoqc::check_deterministic(X, sig, cfg.tol);
      const hoqc::MembershipReport cas =
          hoqc::check_cascade(X, wires, teeth, cfg.tol);
      ++checked;
      if (det.verdict != cas.verdict) {
        ++failures;
        if (witness.empty()) {
          witness = "n " + std::to_string(teeth) + ", sample " +
                    std::to_string(s) + ": deterministic says " +
                    (det.verdict ? "yes" : "no") + ", cascade says " +
                    (cas.verdict ? "yes" : "no");
        }
      }
    }
  }

  const bool pass = failures == 0;
  if (cfg.json()) {
    Json out;
    out["claim"] = "cascade-agreement";
    Json params = Json{{"samples", samples}, {"seed", base},
                       {"tol", cfg.tol}};
    if (n.has_value()) {
      params["n"] = *n;
    }
    out["params"] = std::move(params);
    out["pass"] = pass;
    out["checked"] = checked;
    out["failures"] = failures;
    if (!witness.empty()) {
      out["witness"] = witness;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "cascade-agreement: " << (checked - failures) << '/'
              << checked << " verdict pairs agree: "
              << (pass ? "pass" : "FAIL") << '\n';
    if (!witness.empty()) {
      std::cout << "first failure: " << witness << '\n';
    }
  }
  return pass ? 0 : 1;
}

int cmd_verify(const std::string& claim, std::optional<int> m,
               std::optional<int> n, int samples, const Config& cfg) {
  if (claim == "interst" || claim == "tombstone") {
    return verify_two_comb(claim, m, n, cfg);
  }
  if (claim == "comb-strings") {
    return verify_comb_strings(n, cfg);
  }
  if (claim == "duality") {
    return verify_duality(samples, cfg);
  }
  return verify_cascade_agreement(n, samples, cfg);
}

//============================================================================
// random
//============================================================================

int cmd_random(const std::string& expr_text, const Config& cfg) {
  const hoqc::Signature sig = hoqc::signature_of(hoqc::parse(expr_text));
  if (sig.total_dim() > hoqc::kMaxMatrixDim) {
    throw UsageError("type carrier exceeds the matrix exchange ceiling of " +
                     std::to_string(hoqc::kMaxMatrixDim));
  }
  cfg.note_seed();
  const hoqc::DenseOp X = hoqc::random_deterministic(sig, cfg.base_seed());
  hoqc::write_matrix(std::cout, X);
  return 0;
}

//============================================================================
// switch
//============================================================================

int cmd_switch(int d, const Config& cfg) {
  const hoqc::SwitchReport report = hoqc::switch_demo(d, cfg.tol);
  const bool pass = report.arrow_type.verdict && report.union_span.verdict &&
                    report.union_matches_arrow;
  if (cfg.json()) {
    std::cout << hoqc::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "switch demo, d=" << report.d << '\n';
    std::cout << "map type ((A->B)*(C->D))->(E->F): "
              << (report.arrow_type.verdict ? "pass" : "FAIL")
              << " (psd_deficit " << fmt(report.arrow_type.psd_deficit)
              << ", trace_deviation "
              << fmt(report.arrow_type.trace_deviation) << ", forbidden_mass "
              << fmt(report.arrow_type.forbidden_mass) << ")\n";
    std::cout << "forbidden mass, first order fixed: "
              << fmt(report.mass_first_order) << '\n';
    std::cout << "forbidden mass, second order fixed: "
              << fmt(report.mass_second_order) << '\n';
    std::cout << "union of the two orders: "
              << (report.union_span.verdict ? "pass" : "FAIL")
              << " (forbidden_mass " << fmt(report.union_span.forbidden_mass)
              << ")\n";
    std::cout << "union span equals the map type: "
              << (report.union_matches_arrow ? "yes" : "no") << '\n';
  }
  return pass ? 0 : 1;
}

}  // namespace

//============================================================================
// entry point
//============================================================================

int main(int argc, char** argv) {
  CLI::App app{"hoqc: exact type signatures and numeric membership checks "
               "for higher-order quantum maps"};
  app.require_subcommand(1);
  Config cfg;

  std::string sig_expr;
  CLI::App* c_sig =
      app.add_subcommand("sig", "Print the structural signature of a type");
  c_sig->add_option("expr", sig_expr, "Type expression")->required();
  add_common(c_sig, cfg);

  std::string eq_a, eq_b;
  CLI::App* c_eq =
      app.add_subcommand("eq", "Decide whether two types are equal");
  c_eq->add_option("expr1", eq_a, "First type expression")->required();
  c_eq->add_option("expr2", eq_b, "Second type expression")->required();
  add_common(c_eq, cfg);

  std::string check_file, check_expr;
  bool check_det = false, check_event = false;
  CLI::App* c_check = app.add_subcommand(
      "check", "Check a matrix file against a type (file '-' reads stdin)");
  c_check->add_option("file", check_file, "Matrix JSON file")->required();
  c_check->add_option("expr", check_expr, "Type expression")->required();
  c_check->add_flag("--det", check_det, "Deterministic-event membership");
  c_check->add_flag("--event", check_event, "Event (dominance) membership");
  add_common(c_check, cfg);

  std::string verify_claim;
  std::optional<int> verify_m, verify_n;
  int verify_samples = 100;
  CLI::App* c_verify = app.add_subcommand(
      "verify", "Re-prove a structural claim at configurable size");
  c_verify
      ->add_option("claim", verify_claim,
                   "One of: interst, tombstone, comb-strings, duality, "
                   "cascade-agreement")
      ->required()
      ->check(CLI::IsMember({"interst", "tombstone", "comb-strings",
                             "duality", "cascade-agreement"}));
  c_verify->add_option("--m", verify_m, "Teeth of the first comb");
  c_verify->add_option("--n", verify_n,
                       "Teeth of the second (or only) comb");
  c_verify->add_option("--samples", verify_samples,
                       "Samples per type or per n (default 100)")
      ->check(CLI::Range(1, 1000000));
  add_common(c_verify, cfg);

  std::string random_expr;
  CLI::App* c_random = app.add_subcommand(
      "random", "Emit a random deterministic event as matrix JSON");
  c_random->add_option("expr", random_expr, "Type expression")->required();
  add_common(c_random, cfg);

  int switch_d = 2;
  CLI::App* c_switch = app.add_subcommand(
      "switch", "Run the causal-order switch demonstration");
  c_switch->add_option("--d", switch_d, "Slot system dimension (default 2)")
      ->check(CLI::Range(2, 3));
  add_common(c_switch, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_sig->parsed()) {
      return cmd_sig(sig_expr, cfg);
    }
    if (c_eq->parsed()) {
      return cmd_eq(eq_a, eq_b, cfg);
    }
    if (c_check->parsed()) {
      if (check_det == check_event) {
        throw UsageError("give exactly one of --det or --event");
      }
      return cmd_check(check_file, check_expr, check_event, cfg);
    }
    if (c_verify->parsed()) {
      return cmd_verify(verify_claim, verify_m, verify_n, verify_samples,
                        cfg);
    }
    if (c_random->parsed()) {
      return cmd_random(random_expr, cfg);
    }
    return cmd_switch(switch_d, cfg);
  } catch (const hoqc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const hoqc::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
