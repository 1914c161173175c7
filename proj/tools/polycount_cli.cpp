// Command-line front end: symbolic count tables, evaluation at concrete q,
// bound sweeps, oracle cross-checks, partition listings.
//
// Exit codes: 0 success / all-pass, 1 bound failure or oracle mismatch,
// 2 refusal or validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycount/asymptotics.hpp"
#include "polycount/counts.hpp"
#include "polycount/io.hpp"
#include "polycount/oracle.hpp"

namespace {

using namespace polycount;

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string atom;
  while (std::getline(ss, atom, ',')) {
    if (atom.empty()) continue;
    const auto dots = atom.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stol(atom));
    } else {
      const long lo = std::stol(atom.substr(0, dots));
      const long hi = std::stol(atom.substr(dots + 2));
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

struct TableArgs {
  int r = 2;
  int nmax = 1;
  std::string families = "PIR";
  std::optional<int> s;
  std::string format = "text";
  std::string out;
};

int cmd_table(const TableArgs& a) {
  Params params{a.r, a.nmax, a.s};
  const CountReport rep = make_report(params, a.families);
  if (a.format == "json")
    write_out(a.out, report_to_json(rep).dump(2) + "\n");
  else if (a.format == "csv")
    write_out(a.out, report_to_csv(rep, a.families));
  else
    write_out(a.out, report_to_text(rep, a.families));
  return 0;
}

struct EvalArgs {
  int r = 2;
  int n = 1;
  std::string family = "R";
  std::optional<int> s;
  long q = 2;
};

int cmd_eval(const EvalArgs& a) {
  if (a.q < 2) throw CLI::ValidationError("--q must be >= 2");
  if (!is_prime_power(a.q))
    std::cerr << "warning: q=" << a.q
              << " is not a prime power; the value is not a cardinality\n";
  Params params{a.r, std::max(a.n, 1), a.s};
  const CountEngine eng(params);
  QPoly poly;
  if (a.family == "P")
    poly = eng.all(a.n);
  else if (a.family == "I")
    poly = eng.irreducible(a.n);
  else if (a.family == "R")
    poly = a.n == 0 ? QPoly::one() : eng.reducible(a.n);
  else if (a.family == "Q") {
    if (!a.s) throw CLI::ValidationError("family Q requires --s");
    poly = eng.powerful(*a.s, a.n);
  } else if (a.family == "A")
    poly = eng.abs_irreducible(a.n);
  else if (a.family == "E")
    poly = eng.rel_irreducible(a.n);
  else
    throw CLI::ValidationError("unknown family: " + a.family);
  const Rat value = poly.eval(Rat(a.q));
  if (!is_integer(value)) {
    std::cerr << "internal error: denominator failed to cancel\n";
    return 3;
  }
  std::cout << value.get_num().get_str() << "\n";
  return 0;
}

struct BoundsArgs {
  std::string families = "RQEI";
  std::string rs = "2,3";
  std::string ns = "2..6";
  std::string ss = "2,3";
  std::string qs = "2,3,4,5,7,8,9";
  std::string format = "text";
  std::string out;
};

int cmd_check_bounds(const BoundsArgs& a) {
  SweepSpec spec;
  spec.families.clear();
  for (char f : a.families) {
    switch (f) {
      case 'R': spec.families.push_back(Family::R); break;
      case 'Q': spec.families.push_back(Family::Q); break;
      case 'E': spec.families.push_back(Family::E); break;
      case 'I': spec.families.push_back(Family::I); break;
      case ',': break;
      default: throw CLI::ValidationError(std::string("unknown family: ") + f);
    }
  }
  spec.rs.clear();
  for (long v : parse_list(a.rs)) spec.rs.push_back(static_cast<int>(v));
  spec.ns = parse_list(a.ns);
  spec.ss.clear();
  for (long v : parse_list(a.ss)) spec.ss.push_back(static_cast<int>(v));
  spec.qs = parse_list(a.qs);

  const auto checks = sweep(spec);
  if (a.format == "json") {
    write_out(a.out, sweep_to_json(checks).dump(2) + "\n");
  } else if (a.format == "csv") {
    write_out(a.out, sweep_to_csv(checks));
  } else {
    std::ostringstream os;
    long failures = 0;
    for (const auto& c : checks) {
      if (!c.pass) {
        ++failures;
        os << "FAIL " << family_name(c.family) << " r=" << c.r << " n=" << c.n;
        if (c.s) os << " s=" << *c.s;
        os << " q=" << c.q << " |exact-approx|=" << rat_str(abs(c.exact - c.approx))
           << " bound=" << rat_str(c.bound) << '\n';
      }
    }
    os << checks.size() << " checks, " << failures << " failures\n";
    write_out(a.out, os.str());
  }
  return all_pass(checks) ? 0 : 1;
}

struct OracleArgs {
  std::string family = "R";
  int p = 2;
  int k = 1;
  int r = 2;
  int n = 1;
  std::optional<int> s;
};

int cmd_oracle(const OracleArgs& a) {
  const oracle::Field field = oracle::Field::extension(a.p, a.k);
  long counted = 0;
  QPoly symbolic;
  Params params{a.r, std::max(a.n, 1), a.s};
  const CountEngine eng(params);
  if (a.family == "P") {
    counted = oracle::count_monic(field, a.r, a.n);
    symbolic = eng.all(a.n);
  } else if (a.family == "R") {
    counted = oracle::sieve_reducible(field, a.r, a.n);
    symbolic = a.n == 0 ? QPoly() : eng.reducible(a.n);
  } else if (a.family == "Q") {
    if (!a.s) throw CLI::ValidationError("family Q requires --s");
    counted = oracle::sieve_powerful(field, a.r, a.n, *a.s);
    symbolic = eng.powerful(*a.s, a.n);
  } else if (a.family == "E") {
    counted = oracle::count_rel_irred_oracle(field, a.r, a.n);
    symbolic = eng.rel_irreducible(a.n);
  } else {
    throw CLI::ValidationError("unknown family for oracle: " + a.family);
  }
  const Rat value = symbolic.eval(Rat(field.order()));
  const bool match = is_integer(value) && Rat(counted) == value;
  std::cout << counted << " = " << rat_str(value) << (match ? " MATCH" : " MISMATCH")
            << "\n";
  return match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of reducible, powerful, and relatively irreducible "
               "monic multivariate polynomials over finite fields"};
  app.require_subcommand(1);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Render symbolic count tables");
  table->add_option("--r", ta.r, "number of variables (>= 2)")->required();
  table->add_option("--nmax", ta.nmax, "maximum total degree")->required();
  table->add_option("--families", ta.families, "subset of PIRQAE (default PIR)");
  table->add_option("--s", ta.s, "power for the Q family");
  table->add_option("--format", ta.format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--out", ta.out, "write to file instead of stdout");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a count at a concrete q");
  eval->add_option("--r", ea.r)->required();
  eval->add_option("--n", ea.n)->required();
  eval->add_option("--family", ea.family, "one of P I R Q A E")->required();
  eval->add_option("--s", ea.s);
  eval->add_option("--q", ea.q)->required();

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("check-bounds", "Run the error-bound sweep");
  bounds->add_option("--families", ba.families, "subset of RQEI");
  bounds->add_option("--r", ba.rs, "list/range, e.g. 2,3 or 2..4");
  bounds->add_option("--n", ba.ns, "list/range");
  bounds->add_option("--s", ba.ss, "list/range (Q family)");
  bounds->add_option("--q", ba.qs, "list of prime powers");
  bounds->add_option("--format", ba.format)->check(CLI::IsMember({"text", "csv", "json"}));
  bounds->add_option("--out", ba.out);

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "Brute-force cross-check over GF(p^k)");
  orc->add_option("--family", oa.family, "one of P R Q E")->required();
  orc->add_option("--p", oa.p, "prime")->required();
  orc->add_option("--k", oa.k, "extension degree (default 1)");
  orc->add_option("--r", oa.r)->required();
  orc->add_option("--n", oa.n)->required();
  orc->add_option("--s", oa.s);

  long part_n = 1;
  auto* parts = app.add_subcommand("partitions", "List partitions in concise notation");
  parts->add_option("--n", part_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return cmd_table(ta);
    if (eval->parsed()) return cmd_eval(ea);
    if (bounds->parsed()) return cmd_check_bounds(ba);
    if (orc->parsed()) return cmd_oracle(oa);
    if (parts->parsed()) {
      for (const auto& p : enumerate_partitions(part_n))
        std::cout << partition_concise(p) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
