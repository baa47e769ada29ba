#include "sympow/cli.hpp"

#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "sympow/asymptotics.hpp"
#include "sympow/clutter.hpp"
#include "sympow/decomposition.hpp"
#include "sympow/graph.hpp"
#include "sympow/hunt.hpp"
#include "sympow/io.hpp"
#include "sympow/stanley_reisner.hpp"
#include "sympow/symbolic.hpp"

namespace sympow::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string ideal;
  std::string graph;
  std::string complex;
  std::string assign;
  std::string family = "general_squarefree";
  unsigned n = 0;
  unsigned a = 0;
  unsigned b = 0;
  unsigned k = 0;
  unsigned verify = 0;
  unsigned sequence = 0;
  unsigned max_n = 0;
  bool allow_large = false;
  HuntConfig hunt;
};

json monomial_or_null(const std::optional<Monomial>& m) { return m ? io::to_json(*m) : json(nullptr); }

json assignment_or_null(const std::optional<MinorAssignment>& a) { return a ? json(a->to_string()) : json(nullptr); }

json rationals(const std::vector<ExactRational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(io::to_json(v));
  return out;
}

io::NamedIdeal load_ideal(const std::string& path) { return io::parse_ideal(io::read_json_file(path)); }

json with_ideal(const io::NamedIdeal& source, MonomialIdeal ideal) {
  return io::to_json(io::NamedIdeal{source.variables, std::move(ideal)});
}

json error_document(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

using Handler = std::function<json(const Options&, const Limits&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  h["power"] = [](const Options& o, const Limits&) {
    auto in = load_ideal(o.ideal);
    return with_ideal(in, power(in.ideal, o.n));
  };

  h["symbolic"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    return with_ideal(in, symbolic_power(in.ideal, o.n, limits));
  };

  h["equal"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto r = equals_ordinary(in.ideal, o.n, limits);
    return json{{"n", o.n}, {"equal", r.equal}, {"witness", monomial_or_null(r.witness)}};
  };

  h["contain"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto r = containment(in.ideal, o.a, o.b, limits);
    return json{{"a", o.a}, {"b", o.b}, {"contained", r.contained}, {"witness", monomial_or_null(r.witness)}};
  };

  h["koenig"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    const auto& ideal = in.ideal;
    auto seq = max_regular_sequence(ideal);
    json witness = json::array();
    for (const auto& g : seq.witness) witness.push_back(io::to_json(g));
    const bool degenerate = ideal.is_zero() || ideal.is_unit();
    json doc{{"koenig", is_koenig(ideal)},
             {"height", degenerate ? json(nullptr) : json(height(ideal, limits))},
             {"max_regular_sequence", seq.length},
             {"witness", std::move(witness)}};
    if (o.k > 0) {
      doc["k"] = o.k;
      doc["k_koenig"] = is_k_koenig(ideal, o.k);
    }
    return doc;
  };

  h["packing"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto r = has_packing_property(in.ideal, limits);
    return json{{"packing", r.holds}, {"counterexample", assignment_or_null(r.counterexample)}};
  };

  h["kpacked"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto r = is_k_packed(in.ideal, o.k, limits);
    return json{{"k", o.k}, {"k_packed", r.holds}, {"counterexample", assignment_or_null(r.counterexample)}};
  };

  h["minor"] = [](const Options& o, const Limits&) {
    auto in = load_ideal(o.ideal);
    return with_ideal(in, minor(in.ideal, MinorAssignment::parse(o.assign)));
  };

  h["edge-analyze"] = [](const Options& o, const Limits& limits) {
    const auto g = io::parse_graph(io::read_json_file(o.graph));
    const auto ideal = edge_ideal(g);
    const auto girth = odd_girth(g);
    const auto threshold = equality_threshold(g);
    json doc{{"vertices", g.num_vertices()},
             {"edges", g.edges().size()},
             {"bipartite", is_bipartite(g)},
             {"odd_girth", girth ? json(*girth) : json(nullptr)},
             {"threshold", threshold ? json(*threshold) : json(nullptr)},
             {"height", height(ideal, limits)},
             {"matching", max_regular_sequence(ideal).length},
             {"cycle", nullptr},
             {"witness", nullptr}};
    if (threshold) {
      doc["cycle"] = *find_cycle(g, 2 * *threshold - 1);
      doc["witness"] = io::to_json(odd_cycle_witness(g, *threshold));
    }
    if (o.verify > 0) {
      auto report = verify_threshold(g, o.verify, o.allow_large, limits);
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"k", r.k},
                        {"predicted_equal", r.predicted_equal},
                        {"computed_equal", r.computed_equal},
                        {"agree", r.agree},
                        {"witness", monomial_or_null(r.witness)}});
      }
      doc["verify"] = {{"up_to", o.verify}, {"rows", std::move(rows)}, {"all_agree", report.all_agree}};
    }
    return doc;
  };

  h["sr-ideal"] = [](const Options& o, const Limits&) {
    const auto complex = io::parse_complex(io::read_json_file(o.complex));
    const auto ideal = stanley_reisner_ideal(complex);
    return io::to_json(io::NamedIdeal{io::default_names(complex.num_vertices), ideal});
  };

  h["sr-complex"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    return io::to_json(stanley_reisner_complex(in.ideal, limits));
  };

  h["matroid"] = [](const Options& o, const Limits&) {
    const auto complex = io::parse_complex(io::read_json_file(o.complex));
    auto failure = matroid_exchange_failure(complex);
    json counter = nullptr;
    if (failure) counter = {{"F", io::set_to_json(failure->f)}, {"G", io::set_to_json(failure->g)}, {"i", failure->i}};
    return json{{"matroid", !failure}, {"counterexample", std::move(counter)}};
  };

  h["alpha"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    if (o.n == 0) return json{{"alpha", alpha(in.ideal)}};
    return json{{"n", o.n}, {"alpha", alpha(symbolic_power(in.ideal, o.n, limits))}};
  };

  h["waldschmidt"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto w = waldschmidt_exact(in.ideal, limits);
    json doc{{"waldschmidt", io::to_json(w.value)}, {"point", rationals(w.point)}};
    if (o.sequence > 0) doc["sequence"] = rationals(waldschmidt_sequence(in.ideal, o.sequence, limits));
    return doc;
  };

  h["resurgence"] = [](const Options& o, const Limits& limits) {
    auto in = load_ideal(o.ideal);
    auto r = resurgence_report(in.ideal, o.max_n, limits);
    json failures = json::array();
    for (auto [n, m] : r.failures) failures.push_back({n, m});
    return json{{"N", o.max_n},
                {"alpha", r.alpha},
                {"waldschmidt", io::to_json(r.waldschmidt)},
                {"rho_lower", io::to_json(r.rho_lower)},
                {"rho_upper", r.rho_upper},
                {"failures", std::move(failures)},
                {"empirical_max", r.empirical_max ? io::to_json(*r.empirical_max) : json(nullptr)}};
  };

  h["hunt"] = [](const Options& o, const Limits& limits) {
    HuntConfig config = o.hunt;
    config.family = parse_family(o.family);
    return to_json(hunt(config, limits));
  };

  return h;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with symbolic powers of square-free monomial ideals", "sympow"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Limits limits;
  Options o;
  app.add_option("--max-primes", limits.max_primes, "Abort beyond this many minimal primes");
  app.add_option("--max-symbolic-gens", limits.max_symbolic_gens, "Abort beyond this many symbolic-power generators");
  app.add_option("--max-minors", limits.max_minors, "Abort beyond this many minor assignments");

  auto ideal_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--ideal", o.ideal, "Ideal JSON file")->required();
    return sub;
  };

  ideal_cmd("power", "Ordinary power I^n")->add_option("-n", o.n)->required()->check(CLI::NonNegativeNumber);
  ideal_cmd("symbolic", "Symbolic power I^(n)")->add_option("-n", o.n)->required()->check(CLI::PositiveNumber);
  ideal_cmd("equal", "Decide I^(n) = I^n")->add_option("-n", o.n)->required()->check(CLI::PositiveNumber);
  {
    auto* sub = ideal_cmd("contain", "Decide I^(a) inside I^b");
    sub->add_option("-a", o.a)->required()->check(CLI::PositiveNumber);
    sub->add_option("-b", o.b)->required()->check(CLI::PositiveNumber);
  }
  ideal_cmd("koenig", "Koenig property (and k-Koenig with -k)")->add_option("-k", o.k)->check(CLI::PositiveNumber);
  ideal_cmd("packing", "Packing property over all minors");
  ideal_cmd("kpacked", "k-packed property over all minors")->add_option("-k", o.k)->required()->check(CLI::PositiveNumber);
  ideal_cmd("minor", "Set variables to 0 or 1")
      ->add_option("--assign", o.assign, "One of k/0/1 per variable, e.g. kk0")
      ->required();
  {
    auto* sub = app.add_subcommand("edge-analyze", "Odd girth, equality threshold and witness for an edge ideal");
    sub->add_option("--graph", o.graph, "Graph JSON file")->required();
    sub->add_option("--verify", o.verify, "Check equality algebraically for k = 1..N")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", o.allow_large, "Permit --verify beyond 6");
  }
  app.add_subcommand("sr-ideal", "Stanley-Reisner ideal of a complex")
      ->add_option("--complex", o.complex, "Complex JSON file")
      ->required();
  ideal_cmd("sr-complex", "Stanley-Reisner complex of an ideal");
  app.add_subcommand("matroid", "Facet exchange check")->add_option("--complex", o.complex)->required();
  ideal_cmd("alpha", "Least generator degree (of I^(n) with -n)")->add_option("-n", o.n)->check(CLI::PositiveNumber);
  ideal_cmd("waldschmidt", "Exact Waldschmidt constant")
      ->add_option("--sequence", o.sequence, "Also list alpha(I^(m))/m for m = 1..M")
      ->check(CLI::PositiveNumber);
  ideal_cmd("resurgence", "Certified resurgence bounds")->add_option("-N", o.max_n)->required()->check(CLI::PositiveNumber);
  {
    auto* sub = app.add_subcommand("hunt", "Seeded search for k-packed versus equality disagreements");
    sub->add_option("--family", o.family, "edge_ideals | cubic_ideals | general_squarefree");
    sub->add_option("--vars", o.hunt.num_vars);
    sub->add_option("--max-gens", o.hunt.max_generators);
    sub->add_option("-k", o.hunt.k);
    sub->add_option("--seed", o.hunt.seed);
    sub->add_option("--count", o.hunt.instance_count);
    sub->add_option("--min-support", o.hunt.min_support);
    sub->add_option("--max-support", o.hunt.max_support);
    sub->add_option("--jobs", o.hunt.jobs, "Worker threads; output does not depend on it");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // Help goes out as JSON too, so stdout is always one document.
      const auto* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      out << json{{"help", target->help()}}.dump(2) << '\n';
      return kExitOk;
    }
    out << error_document("usage", e.what()).dump(2) << '\n';
    err << e.what() << '\n';
    return kExitInvalid;
  }

  const auto name = app.get_subcommands().front()->get_name();
  static const auto table = handlers();
  try {
    out << table.at(name)(o, limits).dump(2) << '\n';
    return kExitOk;
  } catch (const ValidationError& e) {
    out << error_document("invalid", e.what()).dump(2) << '\n';
    err << e.what() << '\n';
    return kExitInvalid;
  } catch (const SizeGuardError& e) {
    out << error_document("size_guard", e.what()).dump(2) << '\n';
    err << e.what() << '\n';
    return kExitGuard;
  } catch (const std::overflow_error& e) {
    out << error_document("size_guard", e.what()).dump(2) << '\n';
    err << e.what() << '\n';
    return kExitGuard;
  }
}

}  // namespace sympow::cli
