#include "fqsolve/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "fqsolve/analysis.hpp"
#include "fqsolve/core.hpp"
#include "fqsolve/errors.hpp"
#include "fqsolve/oracle.hpp"
#include "fqsolve/reduction.hpp"
#include "fqsolve/transform.hpp"

namespace fqsolve {
namespace {

using nlohmann::json;

enum class Format { text, csv, json_lines };

struct Config {
  std::uint64_t seed = 0;
  std::string kappa, lambda;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> outer_reps;
  int threads = 0;
  Format format = Format::text;

  std::string input;
  std::string output;
  std::uint32_t beta = 0;
  std::uint32_t q = 2;
  std::string delta = "1";
  bool parsimonious = false;
  std::uint32_t qmax = 9;
  std::uint32_t dmax = 6;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

SolverParams make_params(const Config& c, std::uint32_t d) {
  SolverParams p = SolverParams::defaults(d);
  if (!c.kappa.empty()) {
    p.kappa = Rational::parse(c.kappa);
    p.lambda = Rational(p.kappa.num, 2 * p.kappa.den);
  }
  if (!c.lambda.empty()) p.lambda = Rational::parse(c.lambda);
  p.t_override = c.t;
  p.outer_reps = c.outer_reps;
  p.seed = c.seed;
  p.validate(d);
  return p;
}

void emit_scalar(std::ostream& out, Format fmt, const std::string& key, const std::string& value, bool numeric) {
  switch (fmt) {
    case Format::text:
      out << value << '\n';
      break;
    case Format::csv:
      out << key << '\n' << value << '\n';
      break;
    case Format::json_lines:
      out << "{\"" << key << "\":" << (numeric ? value : json(value).dump()) << "}\n";
      break;
  }
}

int cmd_solve(const Config& c, std::istream& in, std::ostream& out) {
  const PolySystem s = parse_pes(read_input(c.input, in));
  const Verdict v = solve_pes(s, make_params(c, s.d));
  emit_scalar(out, c.format, "result", v == Verdict::sat ? "SAT" : "UNSAT", false);
  return v == Verdict::sat ? kExitSat : kExitUnsat;
}

int cmd_count_roots(const Config& c, std::istream& in, std::ostream& out) {
  const PolySystem s = parse_pes(read_input(c.input, in));
  const RootCount rc = count_common_roots(s);
  const std::string count = rc.count.str();
  if (c.format == Format::json_lines) {
    out << "{\"count\":" << count << ",\"n\":" << rc.n << ",\"q\":" << rc.q << "}\n";
  } else {
    emit_scalar(out, c.format, "count", count, true);
  }
  return kExitOk;
}

int cmd_full_sum(const Config& c, std::istream& in, std::ostream& out) {
  const PolySystem s = parse_pes(read_input(c.input, in));
  const SolverParams p = make_params(c, s.d);
  const Elem z = full_sum(s, p, RngStream(p.seed));
  emit_scalar(out, c.format, "value", std::to_string(z), true);
  return kExitOk;
}

int cmd_partial_sum(const Config& c, std::istream& in, std::ostream& out) {
  const PolySystem s = parse_pes(read_input(c.input, in));
  const SolverParams p = make_params(c, s.d);
  const Polynomial z = partial_sum(s, c.beta, p, RngStream(p.seed));
  switch (c.format) {
    case Format::text:
      write_pes(out, z);
      break;
    case Format::csv:
      out << "coeff";
      for (std::uint32_t i = 1; i <= z.n(); ++i) out << ",e" << i;
      out << '\n';
      for (const auto& [m, coeff] : z.terms()) {
        out << coeff;
        for (auto e : m) out << ',' << e;
        out << '\n';
      }
      break;
    case Format::json_lines:
      for (const auto& [m, coeff] : z.terms()) out << json{{"coeff", coeff}, {"exponents", m}}.dump() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_reduce_cnf(const Config& c, std::istream& in, std::ostream& out) {
  const Cnf cnf = parse_dimacs(read_input(c.input, in));
  const Rational delta = Rational::parse(c.delta);
  const ReductionPlan plan = ReductionPlan::make(cnf, c.q, delta, c.parsimonious);
  const PolySystem s = reduce_cnf(cnf, c.q, delta, c.parsimonious);
  if (c.output == "-") {
    write_pes(out, s);
    return kExitOk;
  }
  std::ofstream f(c.output);
  if (!f) throw ParseError("cannot write '" + c.output + "'");
  write_pes(f, s);
  const json row{{"q", plan.q},         {"vars1", plan.vars1},       {"vars2", plan.vars2},
                 {"blocks", plan.blocks}, {"variables", s.n},        {"polynomials", s.m()},
                 {"degree_bound", s.d}, {"parsimonious", plan.parsimonious}};
  switch (c.format) {
    case Format::text:
      out << "q=" << plan.q << " vars1=" << plan.vars1 << " vars2=" << plan.vars2 << " blocks=" << plan.blocks
          << " variables=" << s.n << " polynomials=" << s.m() << " degree_bound=" << s.d << '\n';
      break;
    case Format::csv:
      out << "q,vars1,vars2,blocks,variables,polynomials,degree_bound\n"
          << plan.q << ',' << plan.vars1 << ',' << plan.vars2 << ',' << plan.blocks << ',' << s.n << ','
          << s.m() << ',' << s.d << '\n';
      break;
    case Format::json_lines:
      out << row.dump() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_exponent_table(const Config& c, std::ostream& out) {
  if (c.qmax < 2 || c.dmax < 1) throw InvalidParams("exponent-table needs --qmax >= 2 and --dmax >= 1");
  if (c.qmax > 1024 || c.dmax > 4096) throw InvalidParams("exponent-table range too large");
  const bool jl = c.format == Format::json_lines;
  if (!jl) out << "q,d,kappa_star,zeta,theorem1_bound\n";
  for (std::uint32_t q = 2; q <= c.qmax; ++q) {
    if (prime_power_split(q).first == 0) continue;
    for (std::uint32_t d = 1; d <= c.dmax; ++d) {
      const ExponentReport r = zeta(q, d);
      char buf[160];
      if (jl) {
        std::snprintf(buf, sizeof buf, "{\"q\":%u,\"d\":%u,\"kappa_star\":%.6f,\"zeta\":%.6f,\"theorem1_bound\":%.6f}",
                      q, d, r.kappa_star, r.zeta, r.theorem1_bound);
      } else {
        std::snprintf(buf, sizeof buf, "%u,%u,%.6f,%.6f,%.6f", q, d, r.kappa_star, r.zeta, r.theorem1_bound);
      }
      out << buf << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_selftest(std::ostream& out, std::uint64_t seed) {
  int failures = 0, checks = 0;
  auto report = [&](const std::string& name, bool ok) {
    ++checks;
    if (!ok) ++failures;
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
  };
  std::mt19937_64 g(seed);
  auto random_system = [&](const FieldPtr& f, std::uint32_t n, std::uint32_t m, std::uint32_t d) {
    std::vector<Polynomial> polys;
    for (std::uint32_t i = 0; i < m; ++i) {
      Polynomial p(f, n);
      for (int t = 0; t < 4; ++t) {
        Monomial mon(n, 0);
        std::uint32_t budget = d;
        for (std::uint32_t v = 0; v < n && budget > 0; ++v) {
          const auto e = static_cast<std::uint16_t>(g() % (std::min(budget, f->q() - 1) + 1));
          mon[v] = e;
          budget -= e;
        }
        std::shuffle(mon.begin(), mon.end(), g);
        p.add_term(mon, static_cast<Elem>(g() % f->q()));
      }
      polys.push_back(std::move(p));
    }
    return PolySystem(f, n, std::move(polys), d);
  };

  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const FieldPtr f = make_field(q);
    const std::uint32_t n = q <= 3 ? 5 : 4;
    const PolySystem s = random_system(f, n, 3, 2);
    SolverParams p = SolverParams::defaults(2);
    p.t_override = 25;
    const std::string tag = " q=" + std::to_string(q) + " n=" + std::to_string(n);
    report("full_sum = brute_Z" + tag, full_sum(s, p, RngStream(seed)) == brute_Z(s));
    const std::uint32_t beta = n / 2;
    report("partial_sum = brute_partial_sum" + tag,
           partial_sum(s, beta, p, RngStream(seed + 1)) == brute_partial_sum(s, beta));
    const RootCount rc = count_common_roots(s);
    report("brute_Z = root count mod p" + tag,
           brute_Z(s) == f->from_integer(static_cast<std::int64_t>(rc.count % f->p())));
    Polynomial sum(f, n);
    for (const auto& poly : s.polys) sum = sum + poly;
    const std::int64_t delta = sum.degree();
    for (std::uint32_t b = 0; b <= n; b += 2) {
      const auto ev = evaluate_trimmed(sum, delta, b);
      bool naive = true;
      const auto pts = enumerate_points(ev.point_set);
      for (std::size_t i = 0; i < pts.size(); ++i) naive = naive && ev.values[i] == evaluate(sum, pts[i]);
      report("transform roundtrip" + tag + " b=" + std::to_string(b),
             naive && interpolate_trimmed(ev, delta, b) == sum);
    }
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << " (" << checks - failures << "/" << checks
      << " checks)\n";
  return failures;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact solver for polynomial equation systems over finite fields", "fqsolve"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", "fqsolve 1.0.0");

  std::string format = "text";
  app.add_option("--seed", c.seed, "Random seed (default 0)")->envname("FQSOLVE_SEED");
  app.add_option("--kappa", c.kappa, "Split fraction kappa, e.g. 0.3 or 3/10 (default 0.99/(2d-1))");
  app.add_option("--lambda", c.lambda, "Recursion step fraction lambda <= kappa (default kappa/2)");
  app.add_option("--t", c.t, "Repetitions per recursive step (default ceil(96 n ln q))");
  app.add_option("--outer-reps", c.outer_reps, "Isolation trials for solve (default 9n)");
  app.add_option("--threads", c.threads, "Worker threads (output does not depend on it)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json-lines"}));

  auto* solve = app.add_subcommand("solve", "Decide whether the system has a common root (exit 10 SAT, 20 UNSAT)");
  solve->add_option("pes", c.input, "PES file, or - for stdin")->required();
  auto* count = app.add_subcommand("count-roots", "Count common roots by exhaustive search");
  count->add_option("pes", c.input, "PES file, or - for stdin")->required();
  auto* fsum = app.add_subcommand("full-sum", "Sum of the indicator over all points, as a field element");
  fsum->add_option("pes", c.input, "PES file, or - for stdin")->required();
  auto* psum = app.add_subcommand("partial-sum", "Partial sum over the last beta variables, as a polynomial");
  psum->add_option("--beta", c.beta, "Number of trailing variables summed out")->required();
  psum->add_option("pes", c.input, "PES file, or - for stdin")->required();
  auto* red = app.add_subcommand("reduce-cnf", "Reduce a DIMACS CNF formula to a polynomial system");
  red->add_option("--q", c.q, "Field order")->required();
  red->add_option("--delta", c.delta, "Degree parameter delta > 0, e.g. 1 or 1/2")->required();
  red->add_flag("--parsimonious", c.parsimonious, "Make roots correspond one-to-one to satisfying assignments");
  red->add_option("cnf", c.input, "DIMACS file, or - for stdin")->required();
  red->add_option("out", c.output, "Output PES file, or - for stdout")->required();
  auto* table = app.add_subcommand("exponent-table", "CSV of kappa*, zeta and the closed-form bound");
  table->add_option("--qmax", c.qmax, "Largest field order (prime powers only)")->required();
  table->add_option("--dmax", c.dmax, "Largest degree")->required();
  auto* self = app.add_subcommand("selftest", "Run the embedded oracle-equivalence checks");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "fqsolve 1.0.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fqsolve: error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    c.format = format == "csv" ? Format::csv : format == "json-lines" ? Format::json_lines : Format::text;
    if (c.threads > 0) set_thread_count(c.threads);
    if (*solve) return cmd_solve(c, in, out);
    if (*count) return cmd_count_roots(c, in, out);
    if (*fsum) return cmd_full_sum(c, in, out);
    if (*psum) return cmd_partial_sum(c, in, out);
    if (*red) return cmd_reduce_cnf(c, in, out);
    if (*table) return cmd_exponent_table(c, out);
    if (*self) return run_selftest(out, c.seed) == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    err << "fqsolve: error: " << msg << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fqsolve
