#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <random>

#include "lambdadd/connectives.hpp"
#include "lambdadd/error.hpp"
#include "lambdadd/expr.hpp"
#include "lambdadd/metrics.hpp"
#include "lambdadd/queries.hpp"
#include "lambdadd/reduction.hpp"

namespace lambdadd::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Model parse_model(const std::string& name) {
  const auto m = Model::parse(name);
  if (!m) throw UsageError("unknown model '" + name + "'");
  return *m;
}

/// One function given either as an expression or as a hex truth table.
struct InputSpec {
  std::string expr;
  std::string tt;

  bool given() const { return !expr.empty() || !tt.empty(); }

  TruthTable table(unsigned arity, const char* which) const {
    if (!expr.empty() && !tt.empty())
      throw UsageError(std::string("give either an expression or a truth table for ") + which);
    if (!expr.empty()) return expr_truth_table(parse_expr(expr, arity), arity);
    if (!tt.empty()) return TruthTable::from_hex(arity, tt);
    throw UsageError(std::string("missing input: ") + which);
  }

  FuncHandle build(Manager& mgr, const Model& m, unsigned arity, const char* which) const {
    if (!expr.empty() && tt.empty()) return build_expr(mgr, m, parse_expr(expr, arity), arity);
    return compile(mgr, m, table(arity, which));
  }
};

void add_input(CLI::App* cmd, InputSpec& in, unsigned& arity) {
  cmd->add_option("--expr", in.expr, "Boolean expression over x0..x{n-1}");
  cmd->add_option("--tt", in.tt, "truth table as hex, entry 0 most significant");
  cmd->add_option("--arity", arity, "number of variables")->required();
}

void add_second_input(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--expr2", in.expr, "second expression");
  cmd->add_option("--tt2", in.tt, "second truth table");
}

std::string bits_of(const Valuation& v) {
  std::string s;
  s.reserve(v.size());
  for (bool b : v) s.push_back(b ? '1' : '0');
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void print_stats(std::ostream& out, const SizeReport& r) {
  out << "model=" << r.model << '\n'
      << "arity=" << r.arity << '\n'
      << "diamonds=" << r.diamonds << '\n'
      << "terminals=" << r.terminals << '\n'
      << "nodes=" << r.nodes() << '\n'
      << "letters=" << r.letters << '\n'
      << "negation_letters=" << r.negation_letters << '\n'
      << "s_size=" << r.s_size() << '\n';
}

nlohmann::json report_json(const Manager& mgr, const FuncHandle& h, const SizeReport& r) {
  return {{"model", r.model},
          {"arity", r.arity},
          {"signature", signature(mgr, h)},
          {"diamonds", r.diamonds},
          {"terminals", r.terminals},
          {"nodes", r.nodes()},
          {"letters", r.letters},
          {"negation_letters", r.negation_letters},
          {"s_size", r.s_size()},
          {"count", count_sat(mgr, h).str()}};
}

void write_dot(const std::string& path, const std::string& dot, std::ostream& out) {
  if (path == "-") {
    out << dot;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << dot;
}

struct BenchOptions {
  unsigned arity = 8;
  unsigned samples = 100;
  std::uint64_t seed = 1;
  std::vector<std::string> models;
  std::size_t memo_limit = std::size_t{1} << 22;
};

int bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  if (o.arity > TruthTable::kMaxArity) throw UsageError("bench arity exceeds the oracle limit");
  std::vector<Model> ms;
  if (o.models.empty()) {
    for (const auto& np : preset_models()) ms.push_back(np.model);
  } else {
    for (const auto& name : o.models) ms.push_back(parse_model(name));
  }
  for (const auto& m : ms) require_supported(m);

  std::uint64_t violations = 0;
  out << kCsvHeader << '\n';
  for (unsigned i = 0; i < o.samples; ++i) {
    const std::uint64_t seed = o.seed + i;
    std::mt19937_64 rng(seed);
    const TruthTable f = TruthTable::random(o.arity, rng);
    Manager mgr;
    mgr.set_memo_limit(o.memo_limit);
    std::vector<SizeReport> reports;
    for (const auto& m : ms) {
      const FuncHandle h = compile(mgr, m, f);
      reports.push_back(measure(mgr, m, h));
      out << csv_row(reports.back(), seed) << '\n';
      if (!reports.back().label_bound_holds()) {
        ++violations;
        err << "label bound violated: " << m.name() << " seed " << seed << '\n';
      }
    }
    for (std::size_t a = 0; a < ms.size(); ++a)
      for (std::size_t b = 0; b < ms.size(); ++b) {
        if (a == b || ms[a] == ms[b] || !lattice_leq(ms[a], ms[b])) continue;
        const BoundVerdict v = compare_sizes(ms[a], reports[a], ms[b], reports[b]);
        if (!v.holds()) {
          ++violations;
          err << "size bound violated: " << ms[a].name() << " <= " << ms[b].name() << " seed "
              << seed << " (N=" << v.lower_nodes << " vs " << v.upper_nodes << ")\n";
        }
      }
  }
  out << "violations=" << violations << '\n';
  return violations == 0 ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical lambda decision diagrams"};
  app.name("lambdadd");
  app.require_subcommand(1);

  std::string model_name = "o-nucx";
  InputSpec in, in2;
  unsigned arity = 0;

  // compile
  auto* c_compile = app.add_subcommand("compile", "compile a function and print its diagram");
  std::string dot_path;
  bool want_sig = false, want_stats = false, want_json = false;
  c_compile->add_option("--model", model_name, "model name")->capture_default_str();
  add_input(c_compile, in, arity);
  c_compile->add_option("--dot", dot_path, "write Graphviz DOT to PATH ('-' for stdout)");
  c_compile->add_flag("--sig", want_sig, "print the signature");
  c_compile->add_flag("--stats", want_stats, "print size statistics as key=value lines");
  c_compile->add_flag("--json", want_json, "print statistics as JSON");

  // query
  auto* c_query = app.add_subcommand("query", "sat, taut, anysat or count");
  std::string query_kind;
  c_query->add_option("kind", query_kind)
      ->required()
      ->check(CLI::IsMember({"sat", "taut", "anysat", "count"}));
  c_query->add_option("--model", model_name, "model name")->capture_default_str();
  add_input(c_query, in, arity);

  // allsat
  auto* c_allsat = app.add_subcommand("allsat", "list satisfying valuations (x0 first)");
  std::uint64_t limit = 0;
  c_allsat->add_option("--model", model_name, "model name")->capture_default_str();
  add_input(c_allsat, in, arity);
  c_allsat->add_option("--limit", limit, "stop after this many valuations (0: all)");

  // equiv
  auto* c_equiv = app.add_subcommand("equiv", "decide equivalence of two functions");
  c_equiv->add_option("--model", model_name, "model name")->capture_default_str();
  add_input(c_equiv, in, arity);
  add_second_input(c_equiv, in2);

  // apply
  auto* c_apply = app.add_subcommand("apply", "combine functions with a connective");
  std::string op_name;
  bool apply_hex = false;
  c_apply->add_option("op", op_name)
      ->required()
      ->check(CLI::IsMember({"and", "or", "xor", "implies", "not"}));
  c_apply->add_option("--model", model_name, "model name")->capture_default_str();
  add_input(c_apply, in, arity);
  add_second_input(c_apply, in2);
  c_apply->add_flag("--hex", apply_hex, "also print the result's truth table");

  // compare
  auto* c_compare = app.add_subcommand("compare", "sizes of one function across models (CSV)");
  std::vector<std::string> compare_models;
  c_compare->add_option("--models", compare_models, "comma-separated model names")
      ->delimiter(',')
      ->required();
  add_input(c_compare, in, arity);

  // bench
  auto* c_bench = app.add_subcommand("bench", "random functions, sizes and bound checks");
  BenchOptions bo;
  c_bench->add_option("--arity", bo.arity)->capture_default_str();
  c_bench->add_option("--samples", bo.samples)->capture_default_str();
  c_bench->add_option("--seed", bo.seed)->capture_default_str();
  c_bench->add_option("--models", bo.models, "comma-separated (default: all presets)")
      ->delimiter(',');
  c_bench->add_option("--memo-limit", bo.memo_limit, "flush operation caches at this size")
      ->capture_default_str();

  // translate
  auto* c_translate = app.add_subcommand("translate", "Shannon/Davio letter correspondence");
  std::string from = "s", to = "d+", letter_name;
  const auto combinators = CLI::IsMember({"s", "d+", "d-"});
  c_translate->add_option("--from", from)->required()->check(combinators);
  c_translate->add_option("--to", to)->required()->check(combinators);
  c_translate->add_option("--letter", letter_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_translate->parsed()) {
      const auto l = parse_letter(letter_name);
      if (!l || !is_elementary(*l)) throw UsageError("not an elementary letter: " + letter_name);
      out << lower(token(translate_letter(*parse_combinator(from), *parse_combinator(to), *l)))
          << '\n';
      return kOk;
    }
    if (c_bench->parsed()) return bench(bo, out, err);

    Manager mgr;
    if (c_compare->parsed()) {
      const TruthTable f = in.table(arity, "--expr/--tt");
      out << kCsvHeader << '\n';
      for (const auto& name : compare_models) {
        const Model m = parse_model(name);
        out << csv_row(measure(mgr, m, compile(mgr, m, f)), 0) << '\n';
      }
      return kOk;
    }

    const Model m = parse_model(model_name);
    require_supported(m);
    const FuncHandle h = in.build(mgr, m, arity, "--expr/--tt");

    if (c_compile->parsed()) {
      const SizeReport r = measure(mgr, m, h);
      const bool any = want_sig || want_stats || want_json || !dot_path.empty();
      if (want_sig || !any) out << signature(mgr, h) << '\n';
      if (want_stats) print_stats(out, r);
      if (want_json) out << report_json(mgr, h, r).dump() << '\n';
      if (!dot_path.empty()) write_dot(dot_path, dot_export(mgr, h), out);
      return kOk;
    }
    if (c_query->parsed()) {
      if (query_kind == "sat") {
        out << (is_sat(mgr, m, h) ? "true" : "false") << '\n';
      } else if (query_kind == "taut") {
        out << (is_taut(mgr, m, h) ? "true" : "false") << '\n';
      } else if (query_kind == "count") {
        out << count_sat(mgr, h).str() << '\n';
      } else {
        const auto v = any_sat(mgr, m, h);
        out << (v ? bits_of(*v) : std::string("none")) << '\n';
      }
      return kOk;
    }
    if (c_allsat->parsed()) {
      SatEnumerator it(mgr, m, h);
      std::uint64_t emitted = 0;
      while (limit == 0 || emitted < limit) {
        const auto v = it.next();
        if (!v) break;
        out << bits_of(*v) << '\n';
        ++emitted;
      }
      return kOk;
    }
    if (c_equiv->parsed()) {
      const FuncHandle h2 = in2.build(mgr, m, arity, "--expr2/--tt2");
      out << (equiv(mgr, h, h2) ? "true" : "false") << '\n';
      return kOk;
    }
    if (c_apply->parsed()) {
      FuncHandle result;
      if (op_name == "not") {
        if (in2.given()) throw UsageError("'not' takes a single input");
        result = negb(mgr, m, h);
      } else {
        const FuncHandle h2 = in2.build(mgr, m, arity, "--expr2/--tt2");
        const BoolOp op = op_name == "and"   ? BoolOp::And
                          : op_name == "or"  ? BoolOp::Or
                          : op_name == "xor" ? BoolOp::Xor
                                             : BoolOp::Implies;
        result = apply(mgr, m, op, h, h2);
      }
      out << signature(mgr, result) << '\n';
      if (apply_hex) out << to_truth_table(mgr, result).to_hex() << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // ContractError, ParseError, ModelError
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace lambdadd::cli
