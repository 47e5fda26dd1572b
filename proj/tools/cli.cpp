#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgraph/appendix.hpp"
#include "sgraph/errors.hpp"
#include "sgraph/formation.hpp"
#include "sgraph/group_expr.hpp"
#include "sgraph/subgroups.hpp"
#include "sgraph/sylow_graph.hpp"

namespace sgraph::cli {

namespace {

// Restores the process-wide caps when a command finishes.
class CapScope {
 public:
  CapScope() : cap_(exhaustive_cap()), qcap_(quotient_cap()) {}
  ~CapScope() {
    set_exhaustive_cap(cap_);
    set_quotient_cap(qcap_);
  }
  CapScope(CapScope const&) = delete;
  CapScope& operator=(CapScope const&) = delete;

 private:
  Order cap_;
  Order qcap_;
};

Order parse_cap(std::string const& text, char const* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || value == 0 || text.front() == '-') {
    throw InvalidArgument(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

std::string join(std::vector<Prime> const& xs, char const* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << (i ? sep : "") << xs[i];
  }
  return out.str();
}

std::string pi_text(std::vector<Prime> const& pi) { return pi.empty() ? "(empty)" : join(pi); }

std::string factorization(Order n) {
  if (n == 1) {
    return "1 (no prime factors)";
  }
  std::map<Prime, int> powers;
  for (Prime q : prime_factors(n)) {
    ++powers[q];
  }
  std::ostringstream out;
  out << n << " =";
  bool first = true;
  for (auto const& [q, e] : powers) {
    out << (first ? " " : " * ") << q;
    if (e > 1) {
      out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

char const* yes_no(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string cap;
  std::string qcap;
  std::string expr;
  std::string format;
  std::string variant = "gamma";
  bool verbose = false;
  std::string spec_path;
  bool solvable = false;
  bool materialize = false;
  std::string appendix_name;
  bool reference = false;
  bool list = false;
};

int cmd_info(Options const& o, std::ostream& out) {
  auto const G = group_from_expr(o.expr);
  auto const graph = sylow_graph(G);
  if (o.format == "json") {
    nlohmann::json doc;
    doc["group"] = parse_group_expr(o.expr).to_string();
    doc["order"] = G.order();
    doc["degree"] = G.degree();
    doc["pi"] = graph.vertices();
    nlohmann::json primes = nlohmann::json::object();
    for (auto const& d : graph.data()) {
      primes[std::to_string(d.p)] = {{"sylow_order", d.sylow_order},
                                     {"normalizer_order", d.normalizer_order},
                                     {"centralizer_order", d.centralizer_order},
                                     {"center_of_sylow_order", d.center_of_sylow_order},
                                     {"nc_index", d.nc_index},
                                     {"automiser_order", d.automiser_order}};
    }
    doc["sylow"] = primes;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "group: " << parse_group_expr(o.expr).to_string() << "\n";
  out << "degree: " << G.degree() << "\n";
  out << "order: " << G.order() << "\n";
  out << "pi: " << pi_text(graph.vertices()) << "\n";
  if (graph.data().empty()) {
    return kOk;
  }
  out << std::left << std::setw(6) << "p" << std::setw(10) << "|P|" << std::setw(10) << "|N(P)|"
      << std::setw(10) << "|C(P)|" << std::setw(10) << "|Z(P)|" << std::setw(10) << "nc_index"
      << "automiser\n";
  for (auto const& d : graph.data()) {
    out << std::setw(6) << d.p << std::setw(10) << d.sylow_order << std::setw(10)
        << d.normalizer_order << std::setw(10) << d.centralizer_order << std::setw(10)
        << d.center_of_sylow_order << std::setw(10) << d.nc_index << d.automiser_order << "\n";
  }
  return kOk;
}

int cmd_graph(Options const& o, std::ostream& out) {
  auto const G = group_from_expr(o.expr);
  auto const graph = sylow_graph(G);
  auto const variant = o.variant == "delta" ? GraphVariant::Delta : GraphVariant::Gamma;
  auto const format = o.format == "json" ? ExportFormat::Json : ExportFormat::Dot;
  out << export_graph(graph, format, variant);
  return graph.is_connected(variant) ? kOk : kNegative;
}

int cmd_hypothesis(Options const& o, std::ostream& out) {
  auto const G = group_from_expr(o.expr);
  auto const report = hypothesis_check(sylow_graph(G));
  out << "hypothesis: " << yes_no(report.holds) << "\n";
  if (!report.holds) {
    out << "failing prime: " << report.failing_prime << "\n";
  }
  for (auto const& row : report.rows) {
    out << "p=" << row.p << " nc_index=" << row.nc_index << " ";
    if (!row.counted) {
      out << "skipped (smallest prime 2)";
    } else {
      out << "smaller prime factor: " << (row.has_smaller_factor ? "yes" : "no");
    }
    if (o.verbose) {
      out << "  [" << factorization(row.nc_index) << "]";
    }
    out << "\n";
  }
  return report.holds ? kOk : kNegative;
}

int cmd_formation(std::string const& mode, Options const& o, std::ostream& out,
                  std::ostream& err) {
  auto const text = read_file(o.spec_path);
  auto const G = group_from_expr(o.expr);

  if (mode == "lattice") {
    auto const c = parse_covering_json(text);
    auto const report = validate_symmetric(c);
    if (!report.symmetric) {
      throw ParseError("covering is not symmetric: " + report.violations.front().message);
    }
    if (!is_partition(c)) {
      throw ParseError("covering is not a partition");
    }
    bool const member = lattice_formation_membership(c, G);
    out << "lattice member: " << yes_no(member) << "\n";
    return member ? kOk : kNegative;
  }

  auto f = parse_formation_spec_json(text);
  if (o.solvable) {
    f = with_solvable_intersection(std::move(f));
  }
  LfOptions options;
  options.materialize_quotients = o.materialize;

  auto print_trace = [&err](LfResult const& r, std::string const& prefix) {
    for (auto const& c : r.trace) {
      err << prefix << "factor " << c.factor << " (order " << c.factor_order << "), q=" << c.q
          << ": |G/C| = " << c.quotient_order << " in " << c.spec.to_string() << "? "
          << yes_no(c.verdict) << "\n";
    }
  };

  if (mode == "check") {
    auto const r = lf_membership(f, G, options);
    out << "member: " << yes_no(r.member) << "\n";
    if (o.verbose) {
      print_trace(r, "");
    }
    return r.member ? kOk : kNegative;
  }

  // nclosed
  std::vector<LfResult> traces;
  auto const result = n_closure_test(
      [&](PermGroup const& N) {
        auto r = lf_membership(f, N, options);
        bool const member = r.member;
        traces.push_back(std::move(r));
        return member;
      },
      G);
  out << "normalizers in class: " << yes_no(result.holds) << "\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    auto const& row = result.trace[i];
    out << "p=" << row.p << " |N(P)|=" << row.normalizer_order << " member: " << yes_no(row.verdict)
        << "\n";
    if (o.verbose) {
      print_trace(traces[i], "  p=" + std::to_string(row.p) + " ");
    }
  }
  return result.holds ? kOk : kNegative;
}

void print_reference(AppendixItem const& item, std::ostream& out) {
  out << "item " << item.number << ": " << item.name << " (reference data, not computed)\n";
  if (item.printed != item.name) {
    out << "printed name: " << item.printed << "\n";
  }
  out << "pi: " << join(item.pi) << "\n";
  for (auto const& c : item.claims) {
    out << c.divisor << " | nc_index(" << c.at << ")\n";
  }
  for (auto const& note : item.inconsistencies()) {
    out << "note: " << note << "\n";
  }
}

int cmd_appendix(Options const& o, std::ostream& out) {
  if (o.list) {
    for (auto const& item : appendix_items()) {
      out << std::setw(2) << item.number << "  " << std::left << std::setw(6) << item.name
          << std::right << (item.computable ? "computed" : "reference") << "\n";
    }
    return kOk;
  }
  if (o.appendix_name.empty()) {
    throw InvalidArgument("appendix needs an item name (or --list)");
  }
  auto const item = find_appendix_item(o.appendix_name);
  if (!item) {
    throw InvalidArgument("unknown appendix item '" + o.appendix_name + "'");
  }
  if (o.reference || !item->computable) {
    print_reference(*item, out);
    return kOk;
  }
  auto const check = verify_appendix_item(*item);
  out << "item " << item->number << ": " << item->name << " (computed)\n";
  out << "order: " << check.order << "\n";
  out << "pi: " << join(check.computed_pi) << " (listed " << join(item->pi) << "): "
      << (check.pi_matches ? "match" : "MISMATCH") << "\n";
  for (auto const& c : check.claims) {
    out << c.claim.divisor << " | nc_index(" << c.claim.at << ") = " << c.nc_index << ": "
        << (c.holds ? "match" : "MISMATCH") << "\n";
  }
  out << "gamma connected: " << yes_no(check.gamma_connected) << "\n";
  out << "result: " << (check.all_match ? "all assertions verified" : "MISMATCH") << "\n";
  return check.all_match ? kOk : kNegative;
}

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CapScope scope;
  Options o;

  CLI::App app{"Sylow graphs, the hypothesis test and covering-formation membership for "
               "permutation groups",
               "sgraph"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cap", o.cap, "exhaustive element cap (env SGRAPH_CAP, default 2000000)");
  app.add_option("--quotient-cap", o.qcap, "quotient order cap (env SGRAPH_QCAP, default 50000)");

  auto* info = app.add_subcommand("info", "order, pi(G) and per-prime Sylow data");
  info->add_option("expr", o.expr, "group expression")->required();
  info->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_str("text");

  auto* graph = app.add_subcommand("graph", "emit the Sylow graph; exit 1 if disconnected");
  graph->add_option("expr", o.expr, "group expression")->required();
  graph->add_option("--variant", o.variant, "gamma or delta")
      ->check(CLI::IsMember({"gamma", "delta"}));
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* hyp = app.add_subcommand("hypothesis", "the smaller-prime hypothesis; exit 1 if false");
  hyp->add_option("expr", o.expr, "group expression")->required();
  hyp->add_flag("--verbose,-v", o.verbose, "print factorizations of the indices");

  auto* formation = app.add_subcommand("formation", "covering-formation membership");
  formation->require_subcommand(1);
  std::string formation_mode;
  for (auto const* name : {"check", "nclosed", "lattice"}) {
    auto* sub = formation->add_subcommand(
        name, std::string(name) == "check"     ? "membership in LF(f)"
              : std::string(name) == "nclosed" ? "every Sylow normalizer in LF(f)"
                                               : "direct product of block groups");
    sub->add_option("--spec", o.spec_path, "covering or local definition (JSON)")->required();
    sub->add_option("expr", o.expr, "group expression")->required();
    sub->add_flag("--verbose,-v", o.verbose, "chief factor trace on stderr");
    if (std::string(name) != "lattice") {
      sub->add_flag("--solvable", o.solvable, "intersect every f(q) with the solvable groups");
      sub->add_flag("--materialize", o.materialize,
                    "build each G/C_G(H/K) as a permutation group (quotient cap applies)");
    }
    sub->callback([&formation_mode, name] { formation_mode = name; });
  }

  auto* appendix = app.add_subcommand("appendix", "replay an item of the sporadic-group table");
  appendix->add_option("name", o.appendix_name, "item name or number (M11, J2, 26, ...)");
  appendix->add_flag("--reference", o.reference, "print the stored table without computing");
  appendix->add_flag("--list", o.list, "list all items");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string cap = o.cap;
    std::string qcap = o.qcap;
    if (cap.empty()) {
      if (char const* env = std::getenv("SGRAPH_CAP")) {
        cap = env;
      }
    }
    if (qcap.empty()) {
      if (char const* env = std::getenv("SGRAPH_QCAP")) {
        qcap = env;
      }
    }
    if (!cap.empty()) {
      set_exhaustive_cap(parse_cap(cap, "cap"));
    }
    if (!qcap.empty()) {
      set_quotient_cap(parse_cap(qcap, "quotient cap"));
    }

    std::ostringstream buffer;  // emit only complete output
    int code = kOk;
    if (info->parsed()) {
      code = cmd_info(o, buffer);
    } else if (graph->parsed()) {
      if (o.format.empty()) {
        o.format = "dot";
      }
      code = cmd_graph(o, buffer);
    } else if (hyp->parsed()) {
      code = cmd_hypothesis(o, buffer);
    } else if (formation->parsed()) {
      code = cmd_formation(formation_mode, o, buffer, err);
    } else if (appendix->parsed()) {
      code = cmd_appendix(o, buffer);
    }
    out << buffer.str();
    return code;
  } catch (CapExceeded const& e) {
    err << "sgraph: " << e.what() << " (raise it with --cap or SGRAPH_CAP)\n";
    return kCap;
  } catch (QuotientCapExceeded const& e) {
    err << "sgraph: " << e.what() << " (raise it with --quotient-cap or SGRAPH_QCAP)\n";
    return kCap;
  } catch (InvariantViolation const& e) {
    err << "sgraph: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (Error const& e) {
    err << "sgraph: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sgraph::cli
