// pcp: build and analyze unital twisted partial actions and their crossed
// products from instance files, construct enveloping actions, and run the
// theorem-lab suites.
//
// Exit codes: 0 success, 1 validation/claim failure, 2 usage, 3 parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pcp/io.hpp"

namespace {

using namespace pcp;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kParse = 3;

FieldSpec parse_field_flag(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("GF:", 0) == 0) return FieldSpec::prime_field(std::stoul(s.substr(3)));
  fail("bad --field value '" + s + "' (use Q or GF:p)");
}

void print_warnings(const InstanceData& inst) {
  for (const auto& w : inst.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_validate(const std::string& path, bool lenient) {
  InstanceData inst = load_instance(path, lenient);
  print_warnings(inst);
  bool ok = true;
  if (inst.group) {
    auto rep = validate_group(*inst.group);
    std::cout << "group: " << rep.str() << (rep.ok() ? "\n" : "");
    ok = ok && rep.ok();
  }
  if (inst.algebra) {
    auto rep = validate_algebra(*inst.algebra);
    std::cout << "algebra(dim " << inst.algebra->dim << "): " << rep.str() << (rep.ok() ? "\n" : "");
    ok = ok && rep.ok();
  }
  if (inst.triangular) {
    std::cout << "triangular: assembled (" << inst.triangular->r_dim() << ","
              << inst.triangular->n_dim() << "," << inst.triangular->s_dim() << ")\n";
  }
  if (inst.action) {
    auto rep = validate_action(*inst.action);
    std::cout << "action: " << rep.str() << (rep.ok() ? "\n" : "");
    ok = ok && rep.ok();
  }
  if (inst.global) {
    auto rep = validate_global(*inst.global);
    std::cout << "global_action: " << rep.str() << (rep.ok() ? "\n" : "");
    ok = ok && rep.ok();
  }
  if (!inst.group && !inst.algebra && !inst.action && !inst.global && !inst.triangular) {
    std::cerr << "nothing to validate (empty instance)\n";
    return kUsage;
  }
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? kOk : kFail;
}

int cmd_build(const std::string& path, const std::string& out_path, bool lenient) {
  InstanceData inst = load_instance(path, lenient);
  print_warnings(inst);
  if (!inst.action) {
    std::cerr << "error: instance has no action block to build from\n";
    return kUsage;
  }
  auto rep = validate_action(*inst.action);
  if (!rep.ok()) {
    std::cerr << "error: action does not satisfy the axioms:\n" << rep.str();
    return kFail;
  }
  CrossedProduct cp = build_crossed(*inst.action);
  auto arep = validate_algebra(cp.algebra);
  if (!arep.ok()) {
    std::cerr << "error: built crossed product fails associativity:\n" << arep.str();
    return kFail;
  }
  std::cout << "dimension: " << cp.dim() << "\n";
  std::cout << "unit: " << cp.algebra.describe(cp.algebra.unit) << "\n";
  std::cout << "support:";
  for (GElem g : inst.action->support) std::cout << " " << inst.action->group.label(g);
  std::cout << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kFail;
    }
    out << serialize_algebra_instance(cp.algebra.field, cp.algebra);
    std::cout << "wrote " << out_path << "\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& path, bool lenient, bool want_radical, bool want_center,
                bool want_frobenius, bool want_symmetric, bool want_fixed_ring, uint64_t seed) {
  InstanceData inst = load_instance(path, lenient);
  print_warnings(inst);
  if (!inst.algebra) {
    std::cerr << "error: no algebra to analyze\n";
    return kUsage;
  }
  const StructureAlgebra& a = *inst.algebra;
  bool any = want_radical || want_center || want_frobenius || want_symmetric || want_fixed_ring;
  if (!any) want_radical = want_center = want_frobenius = want_symmetric = true;

  if (want_radical) {
    auto rad = jacobson_radical(a);  // throws for unsupported fields
    std::cout << "radical: dim " << rad.size() << "\n";
    for (const auto& v : rad) std::cout << "  " << a.describe(v) << "\n";
    std::cout << "semisimple: " << (rad.empty() ? "yes" : "no") << "\n";
  }
  if (want_center) {
    auto z = center(a);
    std::cout << "center: dim " << z.size() << "\n";
    for (const auto& v : z) std::cout << "  " << a.describe(v) << "\n";
  }
  if (want_frobenius) {
    FormSearch fs = frobenius_form(a, seed);
    if (fs.form) {
      std::cout << "frobenius: form [";
      for (size_t i = 0; i < fs.form->coords.size(); ++i)
        std::cout << (i ? " " : "") << fs.form->coords[i].str();
      std::cout << "] (" << fs.method << ")\n";
    } else {
      std::cout << "frobenius: none (" << fs.method << (fs.exact ? ", exact" : ", probabilistic")
                << ")" << (fs.note.empty() ? "" : "; " + fs.note) << "\n";
    }
  }
  if (want_symmetric) {
    FormSearch fs = symmetric_form(a, seed);
    if (fs.form) {
      std::cout << "symmetric: form [";
      for (size_t i = 0; i < fs.form->coords.size(); ++i)
        std::cout << (i ? " " : "") << fs.form->coords[i].str();
      std::cout << "] (" << fs.method << ")\n";
    } else {
      std::cout << "symmetric: none (" << fs.method << (fs.exact ? ", exact" : ", probabilistic")
                << ")" << (fs.note.empty() ? "" : "; " + fs.note) << "\n";
    }
  }
  if (want_fixed_ring) {
    if (!inst.action) {
      std::cerr << "error: --fixed-ring needs an action block\n";
      return kUsage;
    }
    auto fr = fixed_ring(*inst.action);
    std::cout << "fixed-ring: dim " << fr.size() << "\n";
    for (const auto& v : fr) std::cout << "  " << inst.action->R().describe(v) << "\n";
  }
  return kOk;
}

int cmd_globalize(const std::string& path, const std::string& out_prefix, bool lenient) {
  InstanceData inst = load_instance(path, lenient);
  print_warnings(inst);
  if (!inst.action) {
    std::cerr << "error: instance has no action block\n";
    return kUsage;
  }
  auto rep = validate_action(*inst.action);
  if (!rep.ok()) {
    std::cerr << "error: action does not satisfy the axioms:\n" << rep.str();
    return kFail;
  }
  GlobalizeResult gr = globalize(*inst.action);
  std::cout << "dim T: " << gr.pair.global.T().dim << "\n";
  std::cout << "T identity: " << gr.pair.global.T().describe(gr.t_identity) << "\n";
  auto ft = is_finite_type(*inst.action);
  std::cout << "finite type: " << (ft.finite_type ? "yes" : "no") << "\n";
  std::cout << "enveloping conditions: " << (gr.checks.ok() ? "all pass" : gr.checks.str()) << "\n";
  if (!out_prefix.empty()) {
    std::string ppath = out_prefix + ".partial.json";
    std::string gpath = out_prefix + ".global.json";
    std::string pairpath = out_prefix + ".pair.json";
    std::ofstream p(ppath), g(gpath), pr(pairpath);
    if (!p || !g || !pr) {
      std::cerr << "error: cannot write outputs with prefix '" << out_prefix << "'\n";
      return kFail;
    }
    p << serialize_action_instance(*inst.action);
    g << serialize_global_instance(gr.pair.global);
    pr << serialize_pair(ppath, gpath, gr.pair.embedding);
    std::cout << "wrote " << ppath << ", " << gpath << ", " << pairpath << "\n";
  }
  return gr.checks.ok() ? kOk : kFail;
}

int cmd_verify_pair(const std::string& path, bool lenient) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kParse;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  PairFile pf = parse_pair_file(ss.str());
  auto dir_of = [](const std::string& p) {
    auto slash = p.find_last_of('/');
    return slash == std::string::npos ? std::string() : p.substr(0, slash + 1);
  };
  std::string base = dir_of(path);
  auto resolve = [&](const std::string& p) {
    return (p.empty() || p.front() == '/' || base.empty()) ? p : base + p;
  };
  InstanceData partial = load_instance(resolve(pf.partial_path), lenient);
  InstanceData global = load_instance(resolve(pf.global_path), lenient);
  if (!partial.action) {
    std::cerr << "error: partial file has no action block\n";
    return kUsage;
  }
  if (!global.global) {
    std::cerr << "error: global file has no global_action block\n";
    return kUsage;
  }
  size_t tdim = global.algebra->dim, rdim = partial.algebra->dim;
  if (pf.embedding_rows.size() != tdim) {
    std::cerr << "error: embedding has " << pf.embedding_rows.size() << " rows, need " << tdim
              << "\n";
    return kParse;
  }
  ExactMatrix phi(tdim, rdim, partial.field);
  for (size_t i = 0; i < tdim; ++i) {
    if (pf.embedding_rows[i].size() != rdim) {
      std::cerr << "error: embedding row " << i << " has wrong length\n";
      return kParse;
    }
    for (size_t j = 0; j < rdim; ++j)
      phi.at(i, j) = Scalar::parse(pf.embedding_rows[i][j], partial.field);
  }
  EnvelopingPair pair{*partial.action, *global.global, phi};
  auto rep = verify_enveloping(pair);
  std::cout << (rep.ok() ? "enveloping conditions: all pass\n" : rep.str());
  return rep.ok() ? kOk : kFail;
}

int cmd_triangular(const std::string& path, bool lenient) {
  InstanceData inst = load_instance(path, lenient);
  print_warnings(inst);
  if (!inst.triangular) {
    std::cerr << "error: instance has no triangular block\n";
    return kUsage;
  }
  std::cout << "L = (" << inst.triangular->r_dim() << "," << inst.triangular->n_dim() << ","
            << inst.triangular->s_dim() << "), dim " << inst.triangular->algebra->dim << "\n";
  if (!inst.action) {
    std::cout << "no action block: assembled and validated only\n";
    return kOk;
  }
  auto rep = validate_action(*inst.action);
  if (!rep.ok()) {
    std::cerr << "error: action does not satisfy the axioms:\n" << rep.str();
    return kFail;
  }
  TriangularIso iso = triangular_crossed_iso(*inst.triangular, *inst.action);
  std::cout << "L*G dimension: " << iso.lhs.dim() << "\n";
  std::cout << "components: R*G dim " << iso.rhs.r_dim() << ", M dim " << iso.rhs.n_dim()
            << ", S*G dim " << iso.rhs.s_dim() << "\n";
  std::cout << "isomorphism: " << (iso.checks.ok() ? "verified on all basis products" :
                                   iso.checks.str()) << "\n";
  return iso.checks.ok() ? kOk : kFail;
}

int cmd_lab(const std::string& suite, uint64_t seed, size_t trials, size_t max_dim,
            size_t max_group, const std::string& field_flag, const std::string& out_path) {
  LabConfig cfg;
  cfg.suite = suite;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.max_dim = max_dim;
  cfg.max_group = max_group;
  cfg.field = parse_field_flag(field_flag);
  std::vector<Finding> findings;
  try {
    findings = run_suite(cfg);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    if (msg.rfind("unknown suite", 0) == 0) {
      std::cerr << "error: " << msg << "\n";
      return kUsage;
    }
    throw;
  }
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kFail;
    }
    out = &file;
  }
  size_t confirmed = 0, refuted = 0, degenerate = 0;
  for (const auto& f : findings) {
    *out << finding_json_line(f) << "\n";
    if (f.verdict == "confirmed") ++confirmed;
    else if (f.verdict == "refuted") ++refuted;
    else ++degenerate;
  }
  std::cerr << "suite " << suite << ": " << findings.size() << " findings, " << confirmed
            << " confirmed, " << refuted << " refuted, " << degenerate << " degenerate\n";
  return refuted == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for unital twisted partial actions and partial crossed "
               "products"};
  app.require_subcommand(1);

  uint64_t default_seed = 20240101;
  if (const char* env = std::getenv("PCP_SEED")) default_seed = std::strtoull(env, nullptr, 10);

  std::string path, out_path, out_prefix, verify_path, suite, field_flag = "Q";
  bool lenient = false;
  bool want_radical = false, want_center = false, want_frobenius = false, want_symmetric = false,
       want_fixed_ring = false;
  uint64_t seed = default_seed;
  size_t trials = 25, max_dim = 4, max_group = 4;

  auto* validate = app.add_subcommand("validate", "validate an instance file against the axioms");
  validate->add_option("file", path)->required();
  validate->add_flag("--lenient", lenient, "warn on unknown fields instead of rejecting");

  auto* build = app.add_subcommand("build", "build the crossed product of an action instance");
  build->add_option("file", path)->required();
  build->add_option("-o,--out", out_path, "write the result as an algebra instance file");
  build->add_flag("--lenient", lenient);

  auto* analyze = app.add_subcommand("analyze", "radical/center/forms/fixed-ring analyses");
  analyze->add_option("file", path)->required();
  analyze->add_flag("--radical", want_radical);
  analyze->add_flag("--center", want_center);
  analyze->add_flag("--frobenius", want_frobenius);
  analyze->add_flag("--symmetric", want_symmetric);
  analyze->add_flag("--fixed-ring", want_fixed_ring);
  analyze->add_option("--seed", seed, "seed for randomized form search");
  analyze->add_flag("--lenient", lenient);

  auto* globalize_cmd = app.add_subcommand("globalize", "construct or verify an enveloping action");
  globalize_cmd->add_option("file", path);
  globalize_cmd->add_option("-o,--out", out_prefix, "output prefix for the pair files");
  globalize_cmd->add_option("--verify", verify_path, "verify a serialized pair file instead");
  globalize_cmd->add_flag("--lenient", lenient);

  auto* tri = app.add_subcommand("triangular", "component extraction and the triangular "
                                               "representation of L*G");
  tri->add_option("file", path)->required();
  tri->add_flag("--lenient", lenient);

  auto* lab = app.add_subcommand("lab", "run a theorem-lab suite; findings as JSON lines");
  lab->add_option("suite", suite)->required();
  lab->add_option("--seed", seed, "deterministic seed (env PCP_SEED overrides the default)");
  lab->add_option("--trials", trials);
  lab->add_option("--max-dim", max_dim, "bound on dim R");
  lab->add_option("--max-group", max_group, "bound on |G|");
  lab->add_option("--field", field_flag, "Q or GF:p");
  lab->add_option("--out", out_path, "write findings to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, lenient);
    if (build->parsed()) return cmd_build(path, out_path, lenient);
    if (analyze->parsed())
      return cmd_analyze(path, lenient, want_radical, want_center, want_frobenius, want_symmetric,
                         want_fixed_ring, seed);
    if (globalize_cmd->parsed()) {
      if (!verify_path.empty()) return cmd_verify_pair(verify_path, lenient);
      if (path.empty()) {
        std::cerr << "error: globalize needs an instance file or --verify\n";
        return kUsage;
      }
      return cmd_globalize(path, out_prefix, lenient);
    }
    if (tri->parsed()) return cmd_triangular(path, lenient);
    if (lab->parsed())
      return cmd_lab(suite, seed, trials, max_dim, max_group, field_flag, out_path);
  } catch (const pcp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
