#include "cli.hpp"

#include "likepowers/cfinite.hpp"
#include "likepowers/output.hpp"
#include "likepowers/paperseq.hpp"
#include "likepowers/poly_text.hpp"
#include "likepowers/pte.hpp"
#include "likepowers/search.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace likepowers::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer integer_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Integer> integer_list(const std::string& flag, const std::string& text) {
  std::vector<Integer> out;
  for (const auto& item : split(text, ',')) {
    std::string trimmed = item;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    out.push_back(integer_arg(flag, trimmed));
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

RationalGF gf_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_gf(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

char label_arg(const std::string& text) {
  if (text.size() != 1) throw UsageError("--seed-paper: expected one of a,b,c,d,e,f,p,q,r,s,t");
  try {
    paperseq::theorem_index(text[0]);
  } catch (const std::out_of_range&) {
    throw UsageError("--seed-paper: expected one of a,b,c,d,e,f,p,q,r,s,t");
  }
  return text[0];
}

struct Common {
  std::string format = "table";

  output::Format parsed() const {
    try {
      return output::parse_format(format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--format: ") + e.what());
    }
  }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format: json, csv or table")->capture_default_str();
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
  Common common;
  std::string gf;
  std::string seed;
  std::size_t terms = 10;
  bool rational = false;
};

int cmd_expand(const ExpandArgs& args, std::ostream& out, std::ostream& err) {
  if (args.gf.empty() == args.seed.empty()) throw UsageError("expand: give exactly one of --gf or --seed-paper");
  const RationalGF gf = args.seed.empty() ? gf_arg("--gf", args.gf) : paperseq::theorem_gf(label_arg(args.seed));
  const auto format = args.common.parsed();

  output::Table table{{"index", "value"}, {}};
  if (args.rational) {
    const auto values = expand_rational(gf, args.terms);
    for (std::size_t i = 0; i < values.size(); ++i) table.add({std::to_string(i), values[i].get_str()});
    output::write(out, table, format);
    return kOk;
  }
  try {
    const auto values = expand(gf, args.terms);
    for (std::size_t i = 0; i < values.size(); ++i) table.add({std::to_string(i), values[i].get_str()});
  } catch (const NonIntegralSeries& e) {
    err << "NonIntegralSeries: " << e.what() << " (use --rational for exact fractions)\n";
    return kDeviation;
  }
  output::write(out, table, format);
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string target;
  std::optional<std::size_t> max_k;
  std::optional<std::size_t> max_n;
  std::string powers = "1,2,3,4,5";
  unsigned workers = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto format = args.common.parsed();
  output::Table table;
  bool ok = true;

  if (args.target == "theorem") {
    std::vector<unsigned> js;
    for (const auto& v : integer_list("--powers", args.powers)) {
      if (v < 1 || v > 1000) throw UsageError("--powers: exponents must lie in 1..1000");
      js.push_back(static_cast<unsigned>(v.get_ui()));
    }
    const auto report = paperseq::verify_theorem(args.max_k.value_or(200), js, args.workers);
    table.columns = {"k", "j", "value", "expected"};
    for (const auto& d : report.deviations) table.add({std::to_string(d.k), std::to_string(d.j), d.value.get_str(), "1"});
    err << "theorem: k = 0.." << report.k_max << ", " << report.checks << " checks, " << report.deviations.size()
        << " deviations\n";
    ok = report.ok();
  } else if (args.target == "ramanujan") {
    const auto report = paperseq::verify_ramanujan(args.max_n.value_or(200), args.workers);
    table.columns = {"n", "value", "expected"};
    for (const auto& d : report.deviations) {
      table.add({std::to_string(d.n), d.value.get_str(), d.n % 2 == 0 ? "1" : "-1"});
    }
    err << "ramanujan: n = 0.." << report.n_max << ", " << report.deviations.size() << " deviations\n";
    ok = report.ok();
  } else if (args.target == "closed-forms") {
    const auto report = paperseq::verify_closed_forms(args.max_k.value_or(200));
    table.columns = {"k", "form"};
    for (const auto& d : report.deviations) table.add({std::to_string(d.k), d.form});
    err << "closed-forms: k = 0.." << report.k_max << ", " << report.deviations.size() << " deviations\n";
    ok = report.ok();
  } else if (args.target == "pell") {
    const auto report = paperseq::verify_pell(args.max_k.value_or(1000));
    table.columns = {"k", "value", "expected"};
    for (const auto& d : report.deviations) table.add({std::to_string(d.k), d.value.get_str(), "1"});
    err << "pell: k = 0.." << report.k_max << ", " << report.deviations.size() << " deviations\n";
    ok = report.ok();
  } else if (args.target == "h-forms") {
    table.columns = {"identity", "expected", "computed", "status"};
    for (const auto& c : paperseq::derive_h_forms()) {
      table.add({c.name, c.expected.to_string(Orientation::LeadingPositive),
                 c.computed.to_string(Orientation::LeadingPositive), c.pass() ? "pass" : "fail"});
      ok = ok && c.pass();
    }
  } else {
    throw UsageError("verify: unknown target '" + args.target + "'");
  }
  output::write(out, table, format);
  return ok ? kOk : kDeviation;
}

// ---------------------------------------------------------------------------

struct ChernickArgs {
  Common common;
  std::string m;
  std::string n;
  std::string affine;
};

int cmd_chernick(const ChernickArgs& args, std::ostream& out, std::ostream& err) {
  const auto format = args.common.parsed();
  const pte::ChernickTuple tuple = pte::chernick(integer_arg("--m", args.m), integer_arg("--n", args.n));
  pte::PTEPair pair = pte::chernick_pair(tuple);

  Integer scale = 1;
  Integer offset = 0;
  if (!args.affine.empty()) {
    const auto mk = integer_list("--affine", args.affine);
    if (mk.size() != 2) throw UsageError("--affine: expected M,K");
    scale = mk[0];
    offset = mk[1];
    pair = pte::affine_transform(pair, scale, offset);
  }

  output::Table table{{"label", "value"}, {}};
  for (std::size_t i = 0; i < tuple.values.size(); ++i) {
    table.add({std::string(1, pte::ChernickTuple::kLabels[i]) + "'", Integer(scale * tuple.values[i] + offset).get_str()});
  }
  table.add({"A", pair.a.to_string()});
  table.add({"B", pair.b.to_string()});
  table.add({"degree", pair.degree.to_string()});
  table.add({"ideal", pte::is_ideal(pair) ? "true" : "false"});
  if (pair.degree.witness_exponent) {
    table.add({"first_differing_exponent", std::to_string(*pair.degree.witness_exponent)});
    table.add({"difference", pair.degree.witness_difference->get_str()});
  }
  if (pair.degree.is_identical()) err << "IdenticalMultisets: both sides coincide; not a solution\n";
  output::write(out, table, format);
  return kOk;
}

// ---------------------------------------------------------------------------

struct FindArgs {
  Common common;
  std::string terms;
  std::optional<std::size_t> max_order;
};

int cmd_find_recurrence(const FindArgs& args, std::ostream& out, std::ostream& err) {
  const auto format = args.common.parsed();
  const auto prefix = integer_list("--terms", args.terms);
  const std::size_t max_order = args.max_order.value_or(prefix.size() >= 2 ? (prefix.size() - 2) / 2 : 0);
  std::optional<CFiniteSeq> found;
  try {
    found = find_recurrence(prefix, max_order);
  } catch (const InsufficientData& e) {
    throw UsageError(std::string("find-recurrence: ") + e.what());
  }
  if (!found) {
    err << "NotFound: no recurrence of order <= " << max_order << " fits all " << prefix.size() << " terms\n";
    return kDeviation;
  }
  output::Table table{{"field", "value"}, {}};
  table.add({"order", std::to_string(found->order())});
  std::string rec;
  for (const auto& c : found->recurrence()) rec += (rec.empty() ? "" : ",") + c.get_str();
  table.add({"coefficients", rec});
  table.add({"recurrence", found->recurrence_string()});
  table.add({"gf", found->generating_function().to_string(Orientation::LeadingPositive)});
  output::write(out, table, format);
  return kOk;
}

// ---------------------------------------------------------------------------

struct HadamardArgs {
  Common common;
  std::string gf1;
  std::string gf2;
};

int cmd_hadamard(const HadamardArgs& args, std::ostream& out, std::ostream&) {
  const auto format = args.common.parsed();
  const CFiniteSeq a = to_recurrence(gf_arg("--gf1", args.gf1));
  const CFiniteSeq b = to_recurrence(gf_arg("--gf2", args.gf2));
  const CFiniteSeq prod = hadamard(a, b);
  const RationalGF gf = prod.generating_function();
  output::Table table{{"field", "value"}, {}};
  table.add({"gf", gf.to_string(Orientation::LeadingPositive)});
  table.add({"gf_canonical", gf.to_string(Orientation::ConstantPositive)});
  table.add({"order", std::to_string(prod.order())});
  table.add({"recurrence", prod.recurrence_string()});
  std::string init;
  for (const auto& v : prod.initial()) init += (init.empty() ? "" : ",") + v.get_str();
  table.add({"initial", init});
  output::write(out, table, format);
  return kOk;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  Common common;
  search::SearchSpec spec;
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const auto format = args.common.parsed();
  std::vector<pte::PTEPair> pairs;
  try {
    pairs = search::find_ideal(args.spec);
  } catch (const search::GuardrailViolation& e) {
    throw UsageError(std::string("search: ") + e.what());
  }
  output::Table table{{"index", "A", "B", "degree"}, {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    table.add({std::to_string(i), pairs[i].a.to_string(), pairs[i].b.to_string(), pairs[i].degree.to_string()});
  }
  err << "search: " << pairs.size() << " pairs\n";
  output::write(out, table, format);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions, recurrences and equal sums of like powers", "likepowers"};
  app.require_subcommand(1);

  std::function<int()> action;

  ExpandArgs expand_args;
  auto* expand = app.add_subcommand("expand", "Power-series coefficients of a rational generating function");
  expand->add_option("--gf", expand_args.gf, "Generating function NUM/DEN");
  expand->add_option("--seed-paper", expand_args.seed, "Use the built-in generating function for label a..t");
  expand->add_option("--terms", expand_args.terms, "Number of coefficients")->capture_default_str();
  expand->add_flag("--rational", expand_args.rational, "Print exact fractions instead of requiring integers");
  add_format(expand, expand_args.common);
  expand->callback([&] { action = [&] { return cmd_expand(expand_args, out, err); }; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check an identity over a finite range");
  verify->add_option("target", verify_args.target, "theorem, ramanujan, closed-forms, h-forms or pell")
      ->required()
      ->check(CLI::IsMember({"theorem", "ramanujan", "closed-forms", "h-forms", "pell"}));
  verify->add_option("--max-k", verify_args.max_k, "Largest k (theorem, closed-forms, pell)");
  verify->add_option("--max-n", verify_args.max_n, "Largest n (ramanujan)");
  verify->add_option("--powers", verify_args.powers, "Comma-separated exponents (theorem)")->capture_default_str();
  verify->add_option("--workers", verify_args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(verify, verify_args.common);
  verify->callback([&] { action = [&] { return cmd_verify(verify_args, out, err); }; });

  ChernickArgs chernick_args;
  auto* chernick = app.add_subcommand("chernick", "Chernick's size-6 family at (m, n)");
  chernick->add_option("--m", chernick_args.m, "m")->required();
  chernick->add_option("--n", chernick_args.n, "n")->required();
  chernick->add_option("--affine", chernick_args.affine, "Apply v -> M v + K, given as M,K");
  add_format(chernick, chernick_args.common);
  chernick->callback([&] { action = [&] { return cmd_chernick(chernick_args, out, err); }; });

  FindArgs find_args;
  auto* find = app.add_subcommand("find-recurrence", "Minimal linear recurrence fitting a list of terms");
  find->add_option("--terms", find_args.terms, "Comma-separated integers")->required();
  find->add_option("--max-order", find_args.max_order, "Largest order to try (default: as many as the data allow)");
  add_format(find, find_args.common);
  find->callback([&] { action = [&] { return cmd_find_recurrence(find_args, out, err); }; });

  HadamardArgs hadamard_args;
  auto* had = app.add_subcommand("hadamard", "Termwise product of two rational generating functions");
  had->add_option("--gf1", hadamard_args.gf1, "First generating function")->required();
  had->add_option("--gf2", hadamard_args.gf2, "Second generating function")->required();
  add_format(had, hadamard_args.common);
  had->callback([&] { action = [&] { return cmd_hadamard(hadamard_args, out, err); }; });

  SearchArgs search_args;
  auto* srch = app.add_subcommand("search", "Enumerate small equal-power-sum pairs");
  srch->add_option("--size", search_args.spec.size, "Multiset size (<= 5)")->capture_default_str();
  srch->add_option("--bound", search_args.spec.bound, "Largest element (<= 100)")->capture_default_str();
  srch->add_option("--degree", search_args.spec.target_degree, "Power sums to match")->capture_default_str();
  srch->add_flag("--repeats", search_args.spec.allow_repeats, "Allow repeated elements");
  srch->add_flag("--translate", search_args.spec.translate_to_zero, "Shift each pair to start at 0");
  srch->add_option("--workers", search_args.spec.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  add_format(srch, search_args.common);
  srch->callback([&] { action = [&] { return cmd_search(search_args, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace likepowers::cli
