#include "stringy/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "stringy/documents.hpp"
#include "stringy/errors.hpp"
#include "stringy/generate.hpp"
#include "stringy/zigzag.hpp"

#ifndef STRINGY_DEFAULT_FIXTURE_DIR
#define STRINGY_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace stringy::cli {

namespace fs = std::filesystem;
using documents::json;

std::optional<Mode> infer_mode(const fs::path& path) {
  const std::string name = path.filename().string();
  if (name.find(".simp.") != std::string::npos) return Mode::simplicial;
  if (name.find(".ranks.") != std::string::npos) return Mode::ranks;
  return std::nullopt;
}

LoadedInput load_input(const fs::path& path, std::optional<Mode> mode) {
  if (!mode) mode = infer_mode(path);
  if (!mode) throw InputError("cannot infer --mode from '" + path.filename().string() + "'; pass --mode");
  const json j = documents::load_json_file(path);
  LoadedInput in;
  in.mode = *mode;
  if (*mode == Mode::simplicial) {
    const auto doc = documents::parse_simplicial(j);
    in.package = stratified::assemble_package_simplicial(documents::to_stratified(doc));
  } else {
    auto doc = documents::parse_ranks(j);
    if (doc.package) in.package = stratified::assemble_package_ranks(*doc.package);
    in.multinode = std::move(doc.multinode);
  }
  return in;
}

fs::path fixture_dir() {
  if (const char* env = std::getenv("STRINGYCOH_FIXTURE_DIR"); env && *env) return fs::path(env);
  return fs::path(STRINGY_DEFAULT_FIXTURE_DIR);
}

fs::path resolve_fixture(const std::string& name) {
  const fs::path dir = fixture_dir();
  for (const char* suffix : {"", ".ranks.json", ".simp.json"}) {
    const fs::path p = dir / (name + suffix);
    if (fs::is_regular_file(p)) return p;
  }
  throw InputError("no fixture named '" + name + "' in " + dir.string());
}

std::string format_table(const cohomology::CohomologyReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << "  (" << r.provenance << ")\n";
  os << std::setw(4) << "deg" << std::setw(8) << "S0" << std::setw(8) << "IC" << std::setw(8) << "Q" << std::setw(9)
     << "Y°" << "\n";
  for (std::size_t k = 0; k <= 2 * r.n; ++k) {
    os << std::setw(4) << k << std::setw(8) << r.table_S0[k] << std::setw(8) << r.table_IC[k] << std::setw(8)
       << r.table_Q[k] << std::setw(8) << r.table_Yo[k] << "\n";
  }
  os << "K0 = " << r.K0_dim << ", C0 = " << r.C0_dim << "\n";
  os << "notes:\n";
  for (const auto& note : r.notes) os << "  - " << note << "\n";
  for (const auto& note : r.support_report.notes) os << "  - " << note << "\n";
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_obstruction(std::ostream& out, const cohomology::ObstructionReport& r) {
  out << "multi-node obstruction (" << r.nodes << " nodes)\n"
      << "  alpha2 = 0: " << yes_no(r.alpha2_is_zero) << "  -> c injective: " << yes_no(r.c_injective) << "\n"
      << "  gamma1 = 0: " << yes_no(r.gamma1_is_zero) << "  -> d surjective: " << yes_no(r.d_surjective) << "\n";
}

void print_object(std::ostream& out, const char* title, const zigzag::ZigZagObject& z) {
  out << title << ": dims (left, K, C, right) = (" << z.left_dim << ", " << z.K_dim << ", " << z.C_dim << ", "
      << z.right_dim << ")\n"
      << "  alpha = " << qlinalg::to_string(z.alpha) << "\n"
      << "  beta  = " << qlinalg::to_string(z.beta) << "\n"
      << "  gamma = " << qlinalg::to_string(z.gamma) << "\n"
      << "  exact: " << yes_no(zigzag::check_zigzag_exact(z)) << "\n";
}

std::string witness_line(const zigzag::WitnessResult& w) {
  switch (w.status) {
    case zigzag::WitnessStatus::found:
      return "witness: found";
    case zigzag::WitnessStatus::dims_mismatch: {
      std::string where;
      if (w.detail.find("left/right") != std::string::npos) where = "left/right";
      if (w.detail.find("K/C") != std::string::npos) where += where.empty() ? "K/C" : ", K/C";
      return "witness: none (dims mismatch at " + where + ")";
    }
    default:
      return "witness: none (" + zigzag::to_string(w.status) + ": " + w.detail + ")";
  }
}

const stratified::CohomologyPackage& need_package(const LoadedInput& in, const char* cmd) {
  if (!in.package) throw InputError(std::string(cmd) + " needs single-node data; the document only has a multinode block");
  return *in.package;
}

int cmd_compute(const LoadedInput& in, bool as_json, std::ostream& out) {
  std::optional<cohomology::ObstructionReport> obstruction;
  if (in.multinode) obstruction = cohomology::multinode_obstruction(*in.multinode);
  if (as_json) {
    json j = in.package ? documents::to_json(cohomology::build_report(*in.package)) : json::object();
    if (obstruction) j["multinode"] = documents::to_json(*obstruction);
    out << j.dump(2) << "\n";
    return 0;
  }
  if (in.package) out << format_table(cohomology::build_report(*in.package));
  if (obstruction) print_obstruction(out, *obstruction);
  return 0;
}

int cmd_zigzag(const LoadedInput& in, bool as_json, std::ostream& out) {
  const auto& pkg = need_package(in, "zigzag");
  const auto theta = zigzag::make_theta0(pkg);
  const auto dual = zigzag::dualize(theta);
  const auto w = zigzag::find_duality_witness(theta);
  if (as_json) {
    json j{{"theta0", documents::to_json(theta)},
           {"theta0_exact", zigzag::check_zigzag_exact(theta)},
           {"dual", documents::to_json(dual)},
           {"dual_exact", zigzag::check_zigzag_exact(dual)},
           {"witness_status", zigzag::to_string(w.status)},
           {"witness_detail", w.detail},
           {"solution_space_dim", w.solution_space_dim}};
    if (w.witness) {
      j["witness"] = {{"kappa", documents::matrix_to_json(w.witness->kappa)},
                      {"lambda", documents::matrix_to_json(w.witness->lambda)},
                      {"nu", documents::matrix_to_json(w.witness->nu)},
                      {"xi", documents::matrix_to_json(w.witness->xi)}};
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  print_object(out, "Theta0", theta);
  print_object(out, "D(Theta0)", dual);
  out << witness_line(w) << "\n";
  if (w.witness) {
    out << "  kappa  = " << qlinalg::to_string(w.witness->kappa) << "\n"
        << "  lambda = " << qlinalg::to_string(w.witness->lambda) << "\n"
        << "  nu     = " << qlinalg::to_string(w.witness->nu) << "\n"
        << "  xi     = " << qlinalg::to_string(w.witness->xi) << "\n";
  }
  return 0;
}

}  // namespace

std::vector<Check> verify_checks(const LoadedInput& in) {
  std::vector<Check> checks;
  if (in.package) {
    const auto& pkg = *in.package;
    const std::size_t n = pkg.n;
    const auto report = cohomology::build_report(pkg);
    checks.push_back({"exactness", stratified::package_problems(pkg).empty()});
    checks.push_back({"ses-dimension-crosscheck", report.K0_dim + pkg.dims_Yo[n] == pkg.dims_Yo_c[n] + report.C0_dim});
    checks.push_back({"ses(a) 0->K0->S0->Y°->0", report.ses_a_ok});
    checks.push_back({"ses(b) 0->Y°_c->S0->C0->0", report.ses_b_ok});
    checks.push_back({"middle-injection", report.middle_injection_ok});
    checks.push_back({"middle-surjection", report.middle_surjection_ok});
    checks.push_back({"poincare(S0)", report.poincare_ok_S0});
    checks.push_back({"poincare(IC)", report.poincare_ok_IC});
    checks.push_back({"poincare(Q-table)", report.poincare_ok_Q, true});
    bool off_middle = true;
    for (std::size_t k = 0; k <= 2 * n; ++k)
      if (k != n && report.table_S0[k] != report.table_IC[k]) off_middle = false;
    checks.push_back({"off-middle S0=IC", off_middle});
    bool support = true, cosupport = true;
    for (bool b : report.support_report.support_ok) support = support && b;
    for (bool b : report.support_report.cosupport_ok) cosupport = cosupport && b;
    checks.push_back({"support", support});
    checks.push_back({"cosupport", cosupport});
    const auto theta = zigzag::make_theta0(pkg);
    const auto dual = zigzag::dualize(theta);
    checks.push_back({"zigzag-exact", zigzag::check_zigzag_exact(theta) && zigzag::check_zigzag_exact(dual)});
    checks.push_back({"double-dual", zigzag::dualize(dual) == theta});
    const auto w = zigzag::find_duality_witness(theta);
    checks.push_back({"self-duality-witness", w.witness && zigzag::verify_witness(theta, *w.witness)});
  }
  if (in.multinode) {
    const auto r = cohomology::multinode_obstruction(*in.multinode);
    checks.push_back({"multinode c-injective (alpha2 = 0)", r.c_injective});
    checks.push_back({"multinode d-surjective (gamma1 = 0)", r.d_surjective});
  }
  return checks;
}

namespace {

int cmd_verify(const LoadedInput& in, bool as_json, std::ostream& out) {
  const auto checks = verify_checks(in);
  bool ok = true;
  for (const auto& c : checks) ok = ok && (c.passed || c.informational);
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"informational", c.informational}});
    out << json{{"checks", arr}, {"all_passed", ok}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << (c.informational ? "  (informational)" : "") << "\n";
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stringy, intersection and ordinary cohomology of spaces with one isolated singular point", "stringycoh"};
  app.require_subcommand(1);

  std::string input, fixture, mode_name, out_format = "table";
  auto add_common = [&](CLI::App* sub) {
    auto* in_opt = sub->add_option("--input", input, "input document");
    auto* fx_opt = sub->add_option("--fixture", fixture, "fixture name, looked up in the fixture directory");
    in_opt->excludes(fx_opt);
    sub->add_option("--mode", mode_name, "input format")->check(CLI::IsMember({"simplicial", "ranks"}));
    sub->add_option("--out", out_format, "output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto* compute = app.add_subcommand("compute", "degree tables S0 / IC / Q / Y°");
  auto* zz = app.add_subcommand("zigzag", "the middle-degree zig-zag object, its dual and a duality witness");
  auto* verify = app.add_subcommand("verify", "run every consistency check; exit 1 if one fails");
  for (auto* sub : {compute, zz, verify}) add_common(sub);

  std::uint64_t seed = 0;
  std::size_t gen_n = 0;
  bool non_dual = false;
  std::string gen_output;
  auto* gen = app.add_subcommand("generate", "write a random exact rank document");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--n", gen_n, "half dimension (default: random 1..3)");
  gen->add_flag("--non-dual", non_dual, "do not mirror the link data");
  gen->add_option("--output", gen_output, "write to a file instead of stdout");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      generate::Options opts;
      opts.n = gen_n;
      opts.dual_link = !non_dual;
      const std::string text = documents::to_json(generate::random_rank_input(seed, opts)).dump(2) + "\n";
      if (gen_output.empty()) {
        out << text;
      } else {
        std::ofstream f(gen_output);
        if (!f || !(f << text)) throw InputError("cannot write '" + gen_output + "'");
      }
      return 0;
    }

    if (input.empty() && fixture.empty()) throw InputError("pass --input <path> or --fixture <name>");
    const fs::path path = input.empty() ? resolve_fixture(fixture) : fs::path(input);
    std::optional<Mode> mode;
    if (mode_name == "simplicial") mode = Mode::simplicial;
    if (mode_name == "ranks") mode = Mode::ranks;
    const LoadedInput loaded = load_input(path, mode);
    const bool as_json = out_format == "json";
    if (compute->parsed()) return cmd_compute(loaded, as_json, out);
    if (zz->parsed()) return cmd_zigzag(loaded, as_json, out);
    return cmd_verify(loaded, as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace stringy::cli
