// Copyright 2026 The mginv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mginv/cli.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mginv/errors.hpp"
#include "mginv/ginv.hpp"
#include "mginv/io.hpp"
#include "mginv/laws.hpp"
#include "mginv/solver.hpp"

namespace mginv::cli {

namespace {

struct CommonFlags {
  double tol = ToleranceConfig{}.residual_tol;
  double rank_tol = ToleranceConfig{}.rank_tol_factor;
  bool quiet = false;
  std::string m_path;
  std::string m_preset;

  ToleranceConfig tolerance() const {
    ToleranceConfig cfg;
    cfg.residual_tol = tol;
    cfg.rank_tol_factor = rank_tol;
    cfg.validate();
    return cfg;
  }
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--tol", flags.tol, "Residual tolerance")->capture_default_str();
  sub->add_option("--rank-tol", flags.rank_tol, "Relative rank threshold factor")
      ->capture_default_str();
  sub->add_flag("--quiet", flags.quiet, "Suppress the summary line");
  auto* m = sub->add_option("--m", flags.m_path, "Transform matrix (MatrixFile)");
  auto* preset = sub->add_option("--m-preset", flags.m_preset, "Transform preset")
                     ->check(CLI::IsMember({"identity", "dft"}));
  m->excludes(preset);
  preset->excludes(m);
}

TransformMatrix load_transform(const CommonFlags& flags, Index tubes) {
  if (!flags.m_path.empty()) {
    const Matrix mat = io::read_matrix_file(flags.m_path);
    if (mat.rows() != tubes || mat.cols() != tubes) {
      throw DimensionError("transform matrix must be " + std::to_string(tubes) + "x" +
                           std::to_string(tubes));
    }
    return TransformMatrix(mat);
  }
  if (flags.m_preset == "identity") return TransformMatrix::identity(tubes);
  if (flags.m_preset == "dft") return TransformMatrix::normalized_dft(tubes);
  throw ContractError("one of --m or --m-preset is required");
}

std::string dims_text(const Tensor3& t) {
  std::ostringstream s;
  s << t.rows() << 'x' << t.cols() << 'x' << t.tubes();
  return s.str();
}

void print_failures(const ResidualReport& report, std::ostream& err) {
  for (const auto& e : report.failures()) {
    err << "failed: " << e.label << " (residual " << e.residual << ")\n";
  }
}

ResidualReport verify_inverse(const Tensor3& a, const Tensor3& x, const TransformMatrix& m,
                              const ToleranceConfig& tol) {
  const Tensor3 id = identity_tensor(a.rows(), a.tubes(), m);
  ResidualReport r(tol.residual_tol);
  r.add("A*X = I", m_product(a, x, m), id);
  r.add("X*A = I", m_product(x, a, m), id);
  return r;
}

ResidualReport verify_kind(const std::string& kind, const Tensor3& a, const Tensor3& x,
                           const TransformMatrix& m, const ToleranceConfig& tol) {
  if (kind == "gd") return verify_gd(a, x, m, tol);
  if (kind == "gdmp") return verify_gdmp(a, x, m, tol);
  if (kind == "gdstar") return verify_gdstar(a, x, m, tol);
  if (kind == "mp") return verify_mp(a, x, m, tol);
  if (kind == "drazin") return verify_drazin(a, x, m, tol);
  return verify_inverse(a, x, m, tol);
}

Tensor3 compute_kind(const std::string& kind, const Tensor3& a, const TransformMatrix& m,
                     const ToleranceConfig& tol) {
  if (kind == "gd") return gd_inverse(a, m, tol);
  if (kind == "gdmp") return gdmp_inverse(a, m, tol);
  if (kind == "gdstar") return gdstar_inverse(a, m, tol);
  if (kind == "mp") return mp_inverse(a, m, tol);
  if (kind == "drazin") return drazin_inverse(a, m, tol);
  return tensor_inverse(a, m, tol);
}

struct ComputeArgs {
  CommonFlags common;
  std::string kind, input, output;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = args.common.tolerance();
  const Tensor3 a = io::read_tensor_file(args.input);
  const TransformMatrix m = load_transform(args.common, a.tubes());
  const Tensor3 x = compute_kind(args.kind, a, m, tol);
  const ResidualReport report = verify_kind(args.kind, a, x, m, tol);
  io::write_tensor_file(args.output, x, args.kind + " inverse");
  if (!args.common.quiet) {
    out << "kind=" << args.kind << " dims=" << dims_text(a);
    if (a.is_square()) out << " k=" << tensor_index(a, m, tol);
    out << " max_residual=" << report.max_residual() << '\n';
  }
  if (!report.pass()) {
    print_failures(report, err);
    return kNumericalFailure;
  }
  return kOk;
}

struct VerifyArgs {
  CommonFlags common;
  std::string kind, input, candidate;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = args.common.tolerance();
  const Tensor3 a = io::read_tensor_file(args.input);
  const Tensor3 x = io::read_tensor_file(args.candidate);
  const TransformMatrix m = load_transform(args.common, a.tubes());
  const ResidualReport report = verify_kind(args.kind, a, x, m, tol);
  out << io::report_to_json(report).dump(2) << '\n';
  if (!report.pass()) {
    if (!args.common.quiet) print_failures(report, err);
    return kNumericalFailure;
  }
  return kOk;
}

struct SolveArgs {
  CommonFlags common;
  std::string kind, a, b, z, output;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, SolveKind> kinds = {
      {"gd", SolveKind::kGd}, {"gdmp", SolveKind::kGdmp}, {"gdstar", SolveKind::kGdstar}};
  const ToleranceConfig tol = args.common.tolerance();
  SolveRequest req;
  req.kind = kinds.at(args.kind);
  req.a = io::read_tensor_file(args.a);
  req.b = io::read_tensor_file(args.b);
  if (!args.z.empty()) req.z = io::read_tensor_file(args.z);
  const TransformMatrix m = load_transform(args.common, req.a.tubes());
  const SolveResult result = assemble_solution(req, solve_inverses(req, m, tol), m, tol);
  io::write_tensor_file(args.output, result.x, args.kind + " solution");
  const bool rhs_consistent = result.rhs_residual <= tol.residual_tol;
  if (!args.common.quiet) {
    out << "kind=" << args.kind << " residual=" << result.residual
        << " rhs_residual=" << result.rhs_residual
        << " rhs_consistent=" << (rhs_consistent ? "true" : "false") << '\n';
  }
  if (!(result.residual <= tol.residual_tol)) {
    err << "solve: residual " << result.residual << " exceeds tolerance " << tol.residual_tol
        << '\n';
    return kNumericalFailure;
  }
  return kOk;
}

struct IndexArgs {
  CommonFlags common;
  std::string input;
};

int cmd_index(const IndexArgs& args, std::ostream& out) {
  const ToleranceConfig tol = args.common.tolerance();
  const Tensor3 a = io::read_tensor_file(args.input);
  const TransformMatrix m = load_transform(args.common, a.tubes());
  out << tensor_index(a, m, tol) << '\n';
  return kOk;
}

struct LawsArgs {
  CommonFlags common;
  std::string check, kind, a, b, variant;
};

LawOutcome evaluate_law(const LawsArgs& args, const Tensor3& a, const Tensor3& b,
                        const TransformMatrix& m, const ToleranceConfig& tol) {
  if (args.check == "additive") {
    if (!args.variant.empty()) throw ContractError("--variant applies to order laws only");
    const InverseKind kind = args.kind == "gd"     ? InverseKind::kGd
                             : args.kind == "gdmp" ? InverseKind::kGdmp
                                                   : InverseKind::kGdstar;
    return check_additive_law(a, b, m, tol, kind);
  }
  const bool reverse = args.check == "reverse-order";
  if (args.kind == "gd") {
    std::string variant = args.variant.empty() ? (reverse ? "T6" : "tt7") : args.variant;
    if ((variant == "tt7") == reverse) {
      throw ContractError("variant " + variant + " does not match --check " + args.check);
    }
    const ReverseOrderVariant v = variant == "T5"   ? ReverseOrderVariant::kT5
                                  : variant == "T6" ? ReverseOrderVariant::kT6
                                                    : ReverseOrderVariant::kTt7;
    return check_gd_reverse_order(a, b, m, tol, v);
  }
  if (!args.variant.empty()) throw ContractError("--variant applies to --kind gd only");
  const ProductDirection dir = reverse ? ProductDirection::kReverse : ProductDirection::kForward;
  return args.kind == "gdmp" ? check_gdmp_product_laws(a, b, m, tol, dir)
                             : check_gdstar_product_laws(a, b, m, tol, dir);
}

int cmd_laws(const LawsArgs& args, std::ostream& out, std::ostream& err) {
  const ToleranceConfig tol = args.common.tolerance();
  const Tensor3 a = io::read_tensor_file(args.a);
  const Tensor3 b = io::read_tensor_file(args.b);
  const TransformMatrix m = load_transform(args.common, a.tubes());
  const LawOutcome outcome = evaluate_law(args, a, b, m, tol);
  out << io::law_outcome_to_json(outcome).dump(2) << '\n';
  if (!outcome.consistent()) {
    err << "laws: hypotheses hold but the conclusion fails\n";
    print_failures(outcome.conclusion, err);
    return kLawViolation;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Generalized inverses of third-order tensors under the M-product", "mginv");
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute an inverse and write it as a TensorFile");
  c->add_option("--kind", compute.kind)
      ->required()
      ->check(CLI::IsMember({"gd", "gdmp", "gdstar", "mp", "drazin", "inverse"}));
  c->add_option("--input", compute.input, "Input TensorFile")->required();
  c->add_option("--output", compute.output, "Output TensorFile")->required();
  add_common(c, compute.common);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a candidate inverse; JSON report on stdout");
  v->add_option("--kind", verify.kind)
      ->required()
      ->check(CLI::IsMember({"gd", "gdmp", "gdstar", "mp", "drazin"}));
  v->add_option("--input", verify.input, "Tensor A")->required();
  v->add_option("--candidate", verify.candidate, "Candidate inverse")->required();
  add_common(v, verify.common);

  SolveArgs solve_args;
  auto* s = app.add_subcommand("solve", "Solve A*X = target(B) with optional Z");
  s->add_option("--kind", solve_args.kind)
      ->required()
      ->check(CLI::IsMember({"gd", "gdmp", "gdstar"}));
  s->add_option("--a", solve_args.a, "Coefficient tensor")->required();
  s->add_option("--b", solve_args.b, "Right-hand side")->required();
  s->add_option("--z", solve_args.z, "Free parameter (default zero)");
  s->add_option("--output", solve_args.output, "Output TensorFile")->required();
  add_common(s, solve_args.common);

  IndexArgs index;
  auto* i = app.add_subcommand("index", "Print the tensor index");
  i->add_option("--input", index.input, "Square tensor")->required();
  add_common(i, index.common);

  LawsArgs laws;
  auto* l = app.add_subcommand("laws", "Check a reverse-order, forward-order or additive law");
  l->add_option("--check", laws.check)
      ->required()
      ->check(CLI::IsMember({"reverse-order", "forward-order", "additive"}));
  l->add_option("--kind", laws.kind)->required()->check(CLI::IsMember({"gd", "gdmp", "gdstar"}));
  l->add_option("--a", laws.a, "First square tensor")->required();
  l->add_option("--b", laws.b, "Second square tensor")->required();
  l->add_option("--variant", laws.variant, "T5, T6 or tt7 (gd only)")
      ->check(CLI::IsMember({"T5", "T6", "tt7"}));
  add_common(l, laws.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "mginv: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out, err);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (s->parsed()) return cmd_solve(solve_args, out, err);
    if (i->parsed()) return cmd_index(index, out);
    return cmd_laws(laws, out, err);
  } catch (const NumericalError& e) {
    err << "mginv: numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "mginv: " << e.what() << '\n';
    return kInputError;
  } catch (const SingularError& e) {
    err << "mginv: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "mginv: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace mginv::cli
