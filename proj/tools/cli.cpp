#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "zsr/analysis.hpp"
#include "zsr/counting.hpp"
#include "zsr/error.hpp"
#include "zsr/necklace.hpp"
#include "zsr/oracle.hpp"
#include "zsr/paths.hpp"
#include "zsr/poincare.hpp"

namespace zsr::cli {

namespace {

using json = nlohmann::ordered_json;

// Every number leaves the tool as a decimal string.
json stringify_numbers(const json& j) {
  if (j.is_number()) return j.dump();
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(stringify_numbers(v));
    return out;
  }
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items()) out[k] = stringify_numbers(v);
    return out;
  }
  return j;
}

json from_report(const Report& report) { return report.to_json(); }

// Result of a command: JSON body plus exit code.
struct Outcome {
  json body;
  int code = 0;
};

Outcome report_outcome(const Report& report) {
  return {from_report(report), report.passed() ? 0 : 1};
}

struct Options {
  std::string group = "1";
  std::string other = "1";
  std::string vector;
  std::string sequence;
  std::string subset;
  std::string gaps;
  std::string steps;
  std::string primes = "2,3,5,7";
  Int target = 0;
  Int length = 0;
  Int size = 0;
  Int a = 0, b = 0;
  Int p = 0, q = 0, m = 0, n = 0, r = 1;
  Int max_order = 16;
  Int max_s = 6, max_t = 6;
  Int max_path = kDefaultDyckLimit;
  bool translate = false;
  std::uint64_t limit = kDefaultEnumLimit;
  bool pretty = false;
};

GroupElement target_of(const GroupSpec& group, Int label) {
  require(label >= 0 && label < group.order(),
          "target label " + std::to_string(label) + " out of range for group " +
              group.to_string());
  return group.unlabel(label);
}

json string_array(const std::vector<std::string>& items) {
  json out = json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  const auto commas = static_cast<std::size_t>(std::count(text.begin(), text.end(), ','));
  return parse_int_list(text, commas + 1);
}

DyckPath path_from(const Options& o, Int a, Int b) {
  require(o.gaps.empty() != o.steps.empty(), "give exactly one of --gaps or --steps");
  if (!o.steps.empty()) return DyckPath::from_steps(a, b, parse_steps(o.steps));
  return DyckPath::from_gaps(a, b, parse_list(o.gaps));
}

json dyck_json(const DyckPath& path) {
  return {{"gaps", format_int_list(path.gaps())}, {"steps", format_steps(path.steps())}};
}

using Action = std::function<Outcome(const Options&)>;

void add_group(CLI::App& cmd, Options& o) {
  cmd.add_option("--group", o.group, "invariant factors, e.g. 2,6")->required();
}

void add_target(CLI::App& cmd, Options& o) {
  cmd.add_option("--target", o.target, "target element label")->capture_default_str();
}

CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help,
               std::optional<Action>& chosen, Action action) {
  CLI::App* cmd = parent.add_subcommand(name, help);
  cmd->callback([&chosen, action = std::move(action)] { chosen = action; });
  return cmd;
}

void build(CLI::App& app, Options& o, std::optional<Action>& chosen) {
  app.add_option("--limit", o.limit, "oracle enumeration bound")
      ->envname("ZSR_ENUM_LIMIT")
      ->capture_default_str();
  app.add_flag("--pretty", o.pretty, "indent JSON output");
  app.require_subcommand(1);

  // count
  CLI::App* count = app.add_subcommand("count", "closed-form counts");
  count->require_subcommand(1);
  {
    auto* c = leaf(*count, "sequences", "|M(G, m, g)|", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      return Outcome{{{"count", to_decimal(count_sequences(g, o.length, target_of(g, o.target)))}}};
    });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--length", o.length, "sequence length m")->required();

    c = leaf(*count, "subsets", "|N(G, k, g)|", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      return Outcome{{{"count", to_decimal(count_subsets(g, o.size, target_of(g, o.target)))}}};
    });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--size", o.size, "subset size k")->required();

    c = leaf(*count, "catalan", "rational Catalan number", chosen, [](const Options& o) {
      return Outcome{{{"count", to_decimal(rational_catalan(o.a, o.b))}}};
    });
    c->add_option("--a", o.a)->required();
    c->add_option("--b", o.b)->required();

    c = leaf(*count, "pair-dim", "invariant pair dimension", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      return Outcome{{{"count", to_decimal(pair_dimension(o.p, o.q, o.m, g))}}};
    });
    add_group(*c, o);
    c->add_option("--p", o.p)->required();
    c->add_option("--q", o.q)->required();
    c->add_option("--m", o.m)->required();
  }

  // enum
  CLI::App* en = app.add_subcommand("enum", "brute-force enumeration");
  en->require_subcommand(1);
  {
    auto* c = leaf(*en, "sequences", "zero-sum sequences", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      std::vector<std::string> items;
      for (const auto& s : enum_sequences(g, o.length, target_of(g, o.target), o.limit)) {
        items.push_back(s.to_string());
      }
      return Outcome{{{"count", std::to_string(items.size())}, {"items", string_array(items)}}};
    });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--length", o.length)->required();

    c = leaf(*en, "subsets", "zero-sum subsets", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      std::vector<std::string> items;
      for (const auto& s : enum_subsets(g, o.size, target_of(g, o.target), o.limit)) {
        items.push_back(s.to_string());
      }
      return Outcome{{{"count", std::to_string(items.size())}, {"items", string_array(items)}}};
    });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--size", o.size)->required();

    c = leaf(*en, "dyck", "rational Dyck paths", chosen, [](const Options& o) {
      std::vector<std::string> items;
      for (const auto& path : enum_dyck(o.a, o.b, o.max_path)) {
        items.push_back(format_steps(path.steps()));
      }
      return Outcome{{{"count", std::to_string(items.size())}, {"items", string_array(items)}}};
    });
    c->add_option("--a", o.a)->required();
    c->add_option("--b", o.b)->required();
    c->add_option("--max-size", o.max_path, "largest a + b accepted")->capture_default_str();

    c = leaf(*en, "pairs", "pairs (sequence, subset) with given sum", chosen,
             [](const Options& o) {
               const auto g = GroupSpec::parse(o.group);
               json items = json::array();
               for (const auto& pr : enum_pairs(g, o.p, o.size, target_of(g, o.target), o.limit)) {
                 items.push_back(
                     {{"sequence", pr.sequence.to_string()}, {"subset", pr.subset.to_string()}});
               }
               return Outcome{{{"count", std::to_string(items.size())}, {"items", items}}};
             });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--p", o.p, "sequence length")->required();
    c->add_option("--size", o.size, "subset size")->required();
  }

  // biject
  CLI::App* bj = app.add_subcommand("biject", "bijections");
  bj->require_subcommand(1);
  {
    auto* c = leaf(*bj, "seq-to-dyck", "zero-sum sequence to Dyck path", chosen,
                   [](const Options& o) {
                     const auto g = GroupSpec::parse(o.group);
                     const auto res = sequence_to_dyck(MultiplicityVector::parse(g, o.vector));
                     json body = dyck_json(res.value);
                     body["shift"] = std::to_string(res.shift);
                     return Outcome{body};
                   });
    add_group(*c, o);
    c->add_option("--vector", o.vector, "multiplicity vector")->required();

    c = leaf(*bj, "dyck-to-seq", "Dyck path to zero-sum sequence", chosen,
             [](const Options& o) {
               const auto g = GroupSpec::parse(o.group);
               const auto res = dyck_to_sequence(g, path_from(o, g.order(), o.length));
               return Outcome{
                   {{"vector", res.value.to_string()}, {"shift", std::to_string(res.shift)}}};
             });
    add_group(*c, o);
    c->add_option("--length", o.length, "sequence length m")->required();
    c->add_option("--gaps", o.gaps);
    c->add_option("--steps", o.steps);

    c = leaf(*bj, "subset-to-dyck", "zero-sum subset to Dyck path", chosen,
             [](const Options& o) {
               const auto g = GroupSpec::parse(o.group);
               const auto res = subset_to_dyck(IndicatorVector::parse(g, o.vector));
               json body = dyck_json(res.value);
               body["shift"] = std::to_string(res.shift);
               return Outcome{body};
             });
    add_group(*c, o);
    c->add_option("--vector", o.vector, "0/1 indicator vector")->required();

    c = leaf(*bj, "dyck-to-subset", "Dyck path to zero-sum subset", chosen,
             [](const Options& o) {
               const auto g = GroupSpec::parse(o.group);
               const auto res = dyck_to_subset(g, path_from(o, o.size, g.order() - o.size));
               return Outcome{
                   {{"vector", res.value.to_string()}, {"shift", std::to_string(res.shift)}}};
             });
    add_group(*c, o);
    c->add_option("--size", o.size, "subset size k")->required();
    c->add_option("--gaps", o.gaps);
    c->add_option("--steps", o.steps);

    c = leaf(*bj, "reciprocity", "M(G, |H|) to M(H, |G|)", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      const auto h = GroupSpec::parse(o.other);
      const auto s = MultiplicityVector::parse(g, o.vector);
      return Outcome{{{"vector", reciprocity_bijection(h, s).to_string()}}};
    });
    add_group(*c, o);
    c->add_option("--other", o.other, "target group H")->required();
    c->add_option("--vector", o.vector)->required();

    c = leaf(*bj, "complement", "N(G, k) to N(G, n - k)", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      const auto a = IndicatorVector::parse(g, o.vector);
      const auto out = o.translate ? translate_complement_bijection(a) : complement_bijection(a);
      return Outcome{{{"vector", out.to_string()}}};
    });
    add_group(*c, o);
    c->add_option("--vector", o.vector)->required();
    c->add_flag("--translate", o.translate, "use x + (G \\ A) instead of rotation");

    c = leaf(*bj, "pair", "three-colour pair bijection", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      const auto h = GroupSpec::parse(o.other);
      const SequenceSubsetPair in{MultiplicityVector::parse(g, o.sequence),
                                  IndicatorVector::parse(g, o.subset)};
      const auto out = pair_bijection(h, in);
      return Outcome{{{"sequence", out.sequence.to_string()},
                      {"subset", out.subset.to_string()},
                      {"necklace", pair_necklace(in).to_string()}}};
    });
    add_group(*c, o);
    c->add_option("--other", o.other)->required();
    c->add_option("--sequence", o.sequence)->required();
    c->add_option("--subset", o.subset)->required();
  }

  // poincare
  CLI::App* pc = app.add_subcommand("poincare", "Poincare series coefficients");
  pc->require_subcommand(1);
  {
    auto* c = leaf(*pc, "table", "coefficient table", chosen, [](const Options& o) {
      const auto g = GroupSpec::parse(o.group);
      return Outcome{
          poincare_table(g, target_of(g, o.target), o.max_s, o.max_t).to_json()};
    });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--max-s", o.max_s)->capture_default_str();
    c->add_option("--max-t", o.max_t)->capture_default_str();

    c = leaf(*pc, "check", "cross-check against formula and oracle", chosen,
             [](const Options& o) {
               const auto g = GroupSpec::parse(o.group);
               return report_outcome(
                   series_cross_check(g, target_of(g, o.target), o.max_s, o.max_t, o.limit));
             });
    add_group(*c, o);
    add_target(*c, o);
    c->add_option("--max-s", o.max_s)->capture_default_str();
    c->add_option("--max-t", o.max_t)->capture_default_str();
  }

  // verify
  CLI::App* vf = app.add_subcommand("verify", "theorem verifiers");
  vf->require_subcommand(1);
  {
    auto* c = leaf(*vf, "subset-reci", "subset reciprocity characterisation", chosen,
                   [](const Options& o) { return report_outcome(verify_subset_reciprocity(o.max_order)); });
    c->add_option("--max-order", o.max_order)->capture_default_str();

    c = leaf(*vf, "gcp", "sequence reciprocity against C_p", chosen, [](const Options& o) {
      return report_outcome(verify_gcp(o.max_order, parse_list(o.primes)));
    });
    c->add_option("--max-order", o.max_order)->capture_default_str();
    c->add_option("--primes", o.primes)->capture_default_str();

    c = leaf(*vf, "cnr", "reciprocity for C_n^r and C_m^r", chosen, [](const Options& o) {
      return report_outcome(cnr_reciprocity_check(o.n, o.m, o.r, o.limit));
    });
    c->add_option("--n", o.n)->required();
    c->add_option("--m", o.m)->required();
    c->add_option("--r", o.r)->capture_default_str();

    c = leaf(*vf, "series", "Poincare tables for all small groups", chosen,
             [](const Options& o) {
               return report_outcome(verify_series(o.max_order, o.max_s, o.max_t, o.limit));
             });
    c->add_option("--max-order", o.max_order)->capture_default_str();
    c->add_option("--max-s", o.max_s)->capture_default_str();
    c->add_option("--max-t", o.max_t)->capture_default_str();
  }

  // scan
  CLI::App* sc = app.add_subcommand("scan", "exhaustive data scans");
  sc->require_subcommand(1);
  {
    auto* c = leaf(*sc, "reciprocity", "|M(G,|H|)| against |M(H,|G|)|", chosen,
                   [](const Options& o) { return report_outcome(reciprocity_scan(o.max_order)); });
    c->add_option("--max-order", o.max_order)->capture_default_str();
  }
}

void emit(std::ostream& out, const json& body, bool pretty) {
  out << stringify_numbers(body).dump(pretty ? 2 : -1) << '\n';
}

json failure(const std::string& kind, const std::string& reason) {
  return {{"error", kind}, {"reason", reason}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-sum sequences, subsets and their reciprocities", "zsr"};
  Options o;
  std::optional<Action> chosen;
  build(app, o, chosen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help("", CLI::AppFormatMode::All);
    emit(out, failure("usage", e.what()), o.pretty);
    return 2;
  }

  try {
    const Outcome result = (*chosen)(o);
    emit(out, result.body, o.pretty);
    return result.code;
  } catch (const PreconditionError& e) {
    emit(out, failure("precondition", e.what()), o.pretty);
  } catch (const LimitExceeded& e) {
    emit(out, failure("limit", e.what()), o.pretty);
  } catch (const InternalError& e) {
    emit(out, failure("internal", e.what()), o.pretty);
    return 3;
  }
  return 2;
}

}  // namespace zsr::cli
