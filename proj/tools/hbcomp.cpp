// hbcomp: batch front end. JSON in, JSON out (CSV for scan tables).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "hbcomp/error.hpp"
#include "hbcomp/gallery.hpp"
#include "hbcomp/commands.hpp"

using namespace hbcomp;

namespace {

struct Flags {
  int grid_depth = 0;  // 0: keep the file's value
  int trunc = 0;
  std::vector<std::string> tol;
  std::string out;
  std::string input = "-";
  std::string filter;
  std::string basis = "hb";
  bool scan = false;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* hint(ErrorCode c) {
  switch (c) {
    case ErrorCode::IsInner:
      return "b is a finite Blaschke product; H(b) is then a model space, which this tool excludes. "
             "Give a rational b with |b| < 1 somewhere on the circle.";
    case ErrorCode::NotASelfMap:
      return "phi must map the open disk into itself: no poles in the closed disk and |phi| <= 1 on the circle.";
    case ErrorCode::SchemaError:
      return "see docs/problem.md for the input format.";
    case ErrorCode::NotOuter:
      return "a must have no zeros in the open disk.";
    case ErrorCode::NormExceeded:
      return "a must satisfy |a| <= 1 on the circle.";
    case ErrorCode::OddCircleMultiplicity:
      return "1 - |b|^2 must vanish to even order at its zeros on the circle.";
    case ErrorCode::AmbiguousBoundaryValue:
      return "phi maps a zero of a to within circle_tol of the circle; refine the data or change circle_tol.";
    default:
      return "";
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void apply_tol(const Flags& f, Tolerances& tol) {
  for (const auto& t : f.tol) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InputError("--tol expects name=value, got '" + t + "'");
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(t.substr(eq + 1), &used);
      if (used != t.size() - eq - 1) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw InputError("--tol " + t + ": value is not a number");
    }
    tol.set(t.substr(0, eq), v);
  }
}

ProblemSpec load(const Flags& f) {
  Json j;
  try {
    j = Json::parse(read_input(f.input));
  } catch (const Json::parse_error& e) {
    throw InputError(f.input + ": invalid JSON: " + e.what());
  }
  ProblemSpec spec = parse_problem(j);
  apply_tol(f, spec.tol);
  if (f.grid_depth) {
    if (f.grid_depth < 1 || f.grid_depth > 30) throw InputError("--grid-depth must lie in [1, 30]");
    spec.grid.depth = f.grid_depth;
  }
  if (f.trunc) {
    if (f.trunc < 1 || f.trunc > 512) throw InputError("--trunc must lie in [1, 512]");
    spec.trunc = f.trunc;
  }
  return spec;
}

void emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out);
  if (!out) throw InputError("cannot write " + f.out);
  out << text;
}

std::string cmd_mate(const Flags& f) { return dump(mate_command(load(f))) + "\n"; }
std::string cmd_membership(const Flags& f) { return dump(membership_command(load(f))) + "\n"; }
std::string cmd_u(const Flags& f) { return dump(u_command(load(f))) + "\n"; }
std::string cmd_analyze(const Flags& f) { return dump(analyze_command(load(f), f.scan)) + "\n"; }
std::string cmd_scan(const Flags& f) { return scan_csv(load(f)); }
std::string cmd_matrix(const Flags& f) {
  return dump(matrix_command(load(f), f.basis == "hb" ? Basis::HbSplit : Basis::H2Monomials)) + "\n";
}

std::string cmd_gallery(const Flags& f) {
  Tolerances tol;
  apply_tol(f, tol);
  const auto rows = run_gallery(f.filter, tol);
  if (rows.empty()) throw InputError("filter '" + f.filter + "' selects no gallery case");
  return gallery_table(rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Composition operators on H(b) for rational b: boundedness, compactness, Hilbert-Schmidt"};
  app.set_version_flag("--version", HBCOMP_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--grid-depth", f.grid_depth, "scan radii 1 - 2^-q for q = 1..depth");
  app.add_option("--trunc", f.trunc, "truncation size K");
  app.add_option("--tol", f.tol, "tolerance override name=value (coeff_tol, cluster_tol, circle_tol, quad_tol)");
  app.add_option("--out", f.out, "write the output here instead of stdout");

  struct Cmd {
    const char* name;
    const char* help;
    std::string (*run)(const Flags&);
  };
  const Cmd cmds[] = {
      {"mate", "mate data of b or a", cmd_mate},
      {"hb-membership", "decide f in H(b) and split f = a1 f~ + p_f", cmd_membership},
      {"u", "the weight u of the associated weighted composition operator", cmd_u},
      {"analyze", "full verdict report", cmd_analyze},
      {"scan", "Carleson scan as CSV (re_w, im_w, I_w)", cmd_scan},
      {"matrix", "truncated matrix, Frobenius norm and top singular values", cmd_matrix},
      {"gallery", "run the built-in example set and print a pass/fail table", cmd_gallery},
  };
  std::string (*chosen)(const Flags&) = nullptr;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    if (std::string(c.name) == "gallery") {
      sub->add_option("--filter", f.filter, "case name or tag (hs, compact, bounded, u, errors)");
    } else {
      sub->add_option("input", f.input, "problem JSON file, - for stdin");
    }
    if (std::string(c.name) == "analyze") sub->add_flag("--scan", f.scan, "attach Carleson scans even when compactness is decided");
    if (std::string(c.name) == "matrix")
      sub->add_option("--basis", f.basis, "hb: C_phi on H(b); h2: the weighted operator on H^2")
          ->check(CLI::IsMember({"hb", "h2"}));
    sub->callback([&chosen, run = c.run] { chosen = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    emit(f, chosen(f));
  } catch (const Error& e) {
    std::cerr << "hbcomp: " << e.what() << "\n";
    if (const char* h = hint(e.code()); *h) std::cerr << "hbcomp: " << h << "\n";
    return e.code() == ErrorCode::NumericFailure ? 3 : 2;
  } catch (const InputError& e) {
    std::cerr << "hbcomp: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
