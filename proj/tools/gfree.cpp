// gfree: command-line front end for the generic freeness toolkit.

#include "gfree/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gfree;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, InputError = 2, OutOfFuel = 3 };

struct Options {
  bool machine = false;
  bool parallel = false;
  int threads = 0;
  std::uint64_t fuel = 1'000'000;
  std::string file;
  std::string target;
  std::string points;
  std::int64_t bound = 4;
  bool refine = false;
  bool check = false;
  unsigned e = 1;
  std::size_t m = 0, n = 0, t = 0;
  std::string coeffs;
  std::string ring = "QQ";
  bool sharp = false;
};

class InputFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputFailure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile load(const Options& o) {
  try {
    return parse_problem(slurp(o.file));
  } catch (const ParseError& e) {
    throw InputFailure(o.file + ":" + e.what());
  }
}

Exec exec_of(const Options& o) { return o.parallel ? Exec::Parallel : Exec::Serial; }

BuchbergerOptions bopts_of(const Options& o) {
  BuchbergerOptions b;
  b.fuel = o.fuel;
  b.exec = exec_of(o);
  return b;
}

int emit(const Options& o, const Report& r, bool ok) {
  std::cout << render(r, o.machine ? Format::Machine : Format::Text);
  return ok ? Ok : CheckFailed;
}

int cmd_gb(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  return emit(o, gb_report(G), G.certified);
}

int cmd_initial(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  if (!G.certified) return emit(o, gb_report(G), false);
  return emit(o, initial_report(G), true);
}

int cmd_witness(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  Report r = witness_report(P.space, witness(G, o.refine));
  r.add("check.groebner", G.certified);
  return emit(o, r, G.certified);
}

int cmd_reduce(const Options& o) {
  auto P = load(o);
  FreeElem w;
  try {
    w = parse_element(P, o.target);
  } catch (const ParseError& e) {
    throw InputFailure(std::string("--target:") + e.what());
  }
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  ReduceOptions ro;
  ro.record_trace = true;
  auto tr = reduce(w, G, ro);
  bool ok = verify_trace(P.space, w, G.gens, tr);
  Report r = reduce_report(P.space, tr, ok);
  r.add("reduce.member", tr.remainder.is_zero());
  return emit(o, r, ok);
}

int cmd_stdmon(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  auto w = witness(G, o.refine);
  auto s = standard_monomials(P.space, G.initial_terms, w, o.bound, P.grading);
  Report r = witness_report(P.space, w);
  r.append(stdmon_report(P.space, s));
  return emit(o, r, G.certified);
}

int cmd_hilbert(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  auto h = hilbert_function(P.space, G.initial_terms, P.grading, 0, o.bound);
  Report r = witness_report(P.space, witness(G));
  r.append(hilbert_report(h));
  return emit(o, r, G.certified);
}

int cmd_fibers(const Options& o) {
  auto P = load(o);
  std::vector<Point> pts;
  if (!o.points.empty()) {
    try {
      pts = parse_points(o.points);
    } catch (const ParseError& e) {
      throw InputFailure(std::string("--points:") + e.what());
    }
  } else {
    auto G = buchberger(P.space, P.gens, bopts_of(o));
    pts = default_points(P.space.domain, witness(G).value);
  }
  for (const auto& p : pts) residue_field(P.space.domain, p);
  auto fr = fiber_compare(P.space, P.gens, pts, 0, o.bound, P.grading, exec_of(o), bopts_of(o));
  return emit(o, fiber_report(P.space, fr), fr.consistent);
}

int cmd_homogenize(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  auto D = degenerate(G);
  if (!o.check) return emit(o, degeneration_report(D, nullptr), true);
  auto c = degeneration_check(D, o.bound, bopts_of(o));
  return emit(o, degeneration_report(D, &c), c.ok());
}

int cmd_frobcheck(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  auto fr = frobenius_initial_check(G, o.e, bopts_of(o));
  return emit(o, frobenius_report(P.space, fr), fr.equal_after_localization);
}

int cmd_sqfree(const Options& o) {
  auto P = load(o);
  auto G = buchberger(P.space, P.gens, bopts_of(o));
  auto s = squarefree_report(G, P.grading);
  return emit(o, squarefree_report_doc(P.space, s), s.squarefree);
}

int cmd_det(const Options& o) {
  CoeffDomain A = CoeffDomain::rationals();
  try {
    A = parse_domain(o.ring);
  } catch (const ParseError& e) {
    throw InputFailure(std::string("--ring:") + e.what());
  }
  if (!(1 <= o.t && o.t <= o.m && o.m <= o.n)) throw InputFailure("need 1 <= t <= m <= n");
  DetInstance inst;
  if (!o.coeffs.empty()) {
    try {
      auto [dom, rows] = parse_coeff_matrix(slurp(o.coeffs), A);
      inst = make_instance(dom, o.m, o.n, o.t, std::move(rows), o.sharp);
    } catch (const ParseError& e) {
      throw InputFailure(o.coeffs + ":" + e.what());
    }
  } else {
    inst = unit_instance(A, o.m, o.n, o.t);
    inst.sharp = o.sharp;
  }
  std::vector<Point> pts;
  if (!o.points.empty()) {
    try {
      pts = parse_points(o.points);
    } catch (const ParseError& e) {
      throw InputFailure(std::string("--points:") + e.what());
    }
    for (const auto& p : pts) residue_field(inst.space.domain, p);
  }
  auto minors = build_minors(inst, exec_of(o));
  auto rep = verify_instance(inst, minors, o.bound, pts, exec_of(o), bopts_of(o));
  return emit(o, det_report(inst, minors, rep), rep.pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases over Euclidean domains and generic freeness checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--machine", o.machine, "Print key = value lines");
  app.add_flag("--parallel", o.parallel, "Use the OpenMP kernels");
  app.add_option("--threads", o.threads, "OpenMP thread count (0 = default)");
  app.add_option("--fuel", o.fuel, "Maximum number of pair reductions");

  int (*run)(const Options&) = nullptr;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&), bool file = true) {
    CLI::App* s = app.add_subcommand(name, help);
    if (file) s->add_option("FILE", o.file, "Problem file ('-' for stdin)")->required();
    s->add_option("--fuel", o.fuel, "Maximum number of pair reductions");
    s->callback([&run, fn] { run = fn; });
    return s;
  };
  sub("gb", "Groebner basis and initial terms", cmd_gb);
  sub("initial", "Initial module of the certified basis", cmd_initial);
  sub("witness", "Generic freeness witness", cmd_witness)->add_flag("--refine", o.refine, "Shrink by gcd grouping");
  sub("reduce", "Normal form and trace", cmd_reduce)->add_option("--target", o.target, "Element to reduce")->required();
  {
    auto* s = sub("stdmon", "Standard monomials up to a degree", cmd_stdmon);
    s->add_option("--bound", o.bound, "Degree bound")->required();
    s->add_flag("--refine", o.refine, "Shrink the witness by gcd grouping");
  }
  sub("hilbert", "Hilbert function of the initial module", cmd_hilbert)
      ->add_option("--bound", o.bound, "Degree bound")
      ->required();
  {
    auto* s = sub("fibers", "Compare fiber Hilbert functions with the generic one", cmd_fibers);
    s->add_option("--points", o.points, "Comma-separated points (primes for ZZ, scalars for k[t])");
    s->add_option("--bound", o.bound, "Degree bound")->required();
  }
  {
    auto* s = sub("homogenize", "Weight vector, shifts and homogenized basis", cmd_homogenize);
    s->add_flag("--check", o.check, "Run the t = 0 / t = 1 checks");
    s->add_option("--bound", o.bound, "Degree bound above the largest shift for the fiber check");
  }
  sub("frobcheck", "Frobenius powers against powers of the initial terms", cmd_frobcheck)
      ->add_option("--e", o.e, "Exponent e of q = p^e")
      ->required();
  sub("sqfree", "Square-free initial ideal report", cmd_sqfree);
  {
    auto* s = sub("det", "Build and verify a determinantal instance", cmd_det, false);
    s->add_option("--m", o.m, "Rows")->required();
    s->add_option("--n", o.n, "Columns")->required();
    s->add_option("--t", o.t, "Minor size")->required();
    s->add_option("--coeffs", o.coeffs, "Coefficient matrix file");
    s->add_option("--ring", o.ring, "Coefficient domain when no matrix file names one");
    s->add_option("--points", o.points, "Comma-separated fiber points");
    s->add_option("--bound", o.bound, "Degree bound")->default_val(3);
    s->add_flag("--sharp", o.sharp, "Use the sharp exempt set {i+j <= t}");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return InputError;
  }
  if (o.threads > 0) set_threads(o.threads);

  try {
    return run(o);
  } catch (const FuelExhausted& e) {
    std::cerr << "gfree: fuel exhausted: " << e.what() << "\n";
    return OutOfFuel;
  } catch (const InputFailure& e) {
    std::cerr << "gfree: " << e.what() << "\n";
    return InputError;
  } catch (const ParseError& e) {
    std::cerr << "gfree: " << e.what() << "\n";
    return InputError;
  } catch (const DomainError& e) {
    std::cerr << "gfree: " << e.what() << "\n";
    return InputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gfree: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    std::cerr << "gfree: internal error: " << e.what() << "\n";
    return 4;
  }
}
