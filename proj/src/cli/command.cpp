#include "inertia/cli/command.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "inertia/numtheory.hpp"

namespace inertia::cli {

namespace {

const std::vector<std::pair<std::string, Verb>>& verb_table() {
  static const std::vector<std::pair<std::string, Verb>> t{
      {"group-info", Verb::GroupInfo},         {"realize-abelian", Verb::RealizeAbelian},
      {"realize-odd", Verb::RealizeOdd},       {"gl2-candidates", Verb::Gl2Candidates},
      {"gl2-requirement", Verb::Gl2Requirement}, {"curve-analyze", Verb::CurveAnalyze},
      {"curve-construct", Verb::CurveConstruct}, {"verify-example-6-2", Verb::VerifyExample62},
  };
  return t;
}

std::vector<std::uint64_t> parse_list(const std::string& s, const std::string& opt) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(UsageErrc::BadOption, opt + " expects a comma-separated list of positive integers");
    }
  }
  return out;
}

void apply_env_bounds(Bounds& b) {
  const char* env = std::getenv("INERTIA_LAB_BOUNDS");
  if (!env || !*env) return;
  try {
    auto j = nlohmann::json::parse(env);
    if (j.contains("closure")) b.closure = j["closure"].get<std::size_t>();
    if (j.contains("index")) b.index = j["index"].get<std::size_t>();
    if (j.contains("ell")) b.ell = j["ell"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(UsageErrc::BadOption, std::string("INERTIA_LAB_BOUNDS is not valid JSON: ") + e.what());
  }
}

void build_app(CLI::App& app, Command& cmd, std::string& g, std::string& i, std::string& a, std::string& fmt,
               std::optional<std::size_t>& closure, std::optional<std::size_t>& index,
               std::optional<std::uint64_t>& ell) {
  app.add_option("--format", fmt, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--closure-bound", closure, "maximum group order enumerated");
  app.add_option("--index-bound", index, "maximum index [G : I] searched");
  app.add_option("--ell-bound", ell, "largest prime sampled for surjectivity");

  switch (cmd.verb) {
    case Verb::GroupInfo:
      app.add_option("--group", cmd.group_spec, "group spec JSON or @file")->required();
      app.add_option("--p", cmd.p, "prime for Sylow data");
      break;
    case Verb::RealizeAbelian:
      app.add_option("--p", cmd.p, "prime")->required();
      app.add_option("--g", g, "invariant factors of G, e.g. 4,4")->required();
      app.add_option("--i", i, "invariant factors of I, e.g. 4")->required();
      app.add_option("--verify-witness", cmd.verify_witness, "re-check a JSON witness instead of searching");
      break;
    case Verb::RealizeOdd:
      app.add_option("--p", cmd.p, "prime")->required();
      app.add_option("--group", cmd.group_spec, "group spec JSON or @file")->required();
      app.add_option("--inertia", cmd.inertia_spec, "JSON array of generators of I, or @file")->required();
      app.add_flag("--global", cmd.global, "search D between I and G (realizability over Q)");
      app.add_option("--verify-witness", cmd.verify_witness, "re-check a JSON witness instead of searching");
      break;
    case Verb::Gl2Candidates:
      app.add_option("--p", cmd.p, "odd prime <= 13")->required();
      break;
    case Verb::Gl2Requirement:
      app.add_option("--p", cmd.p, "odd prime")->required();
      app.add_option("--candidate", cmd.candidate, R"(e.g. {"kind":"split","a":0,"b":1})")->required();
      break;
    case Verb::CurveAnalyze: {
      app.add_option("--p", cmd.p, "odd prime")->required();
      auto* ao = app.add_option("--a", a, "a1,a2,a3,a4,a6");
      auto* lo = app.add_option("--label", cmd.label, "built-in curve, e.g. 11.a2");
      ao->excludes(lo);
      break;
    }
    case Verb::CurveConstruct:
      app.add_option("--p", cmd.p, "prime > 13")->required();
      app.add_option("--kind", cmd.construct_kind, "supersingular, ordinary-diagonal or ordinary-non-diagonal")
          ->check(CLI::IsMember({"supersingular", "ordinary-diagonal", "ordinary-non-diagonal"}));
      break;
    case Verb::VerifyExample62:
      break;
  }
}

}  // namespace

std::string verb_name(Verb v) {
  for (const auto& [n, w] : verb_table())
    if (w == v) return n;
  return "";
}

const std::vector<std::string>& verb_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, v] : verb_table()) out.push_back(n);
    return out;
  }();
  return names;
}

std::string usage_errc_name(UsageErrc c) {
  switch (c) {
    case UsageErrc::UnknownVerb:
      return "UnknownVerb";
    case UsageErrc::MissingOption:
      return "MissingOption";
    case UsageErrc::InvalidPrime:
      return "InvalidPrime";
    case UsageErrc::BadOption:
      return "BadOption";
  }
  return "";
}

std::string usage() {
  std::string s = "usage: inertia-lab <verb> [options]\n\nverbs:\n";
  for (const auto& n : verb_names()) s += "  " + n + "\n";
  s += "\nRun 'inertia-lab <verb> --help' for the options of one verb.\n";
  return s;
}

Command parse_command(const std::vector<std::string>& argv) {
  if (argv.empty()) throw UsageError(UsageErrc::UnknownVerb, "no verb given\n" + usage());
  Command cmd;
  auto it = std::find_if(verb_table().begin(), verb_table().end(), [&](const auto& e) { return e.first == argv[0]; });
  if (it == verb_table().end()) throw UsageError(UsageErrc::UnknownVerb, "unknown verb '" + argv[0] + "'");
  cmd.verb = it->second;
  apply_env_bounds(cmd.bounds);

  CLI::App app("inertia-lab " + argv[0]);
  app.set_config("--config", "", "TOML/INI file with option defaults");
  std::string g, i, a, fmt = "text";
  std::optional<std::size_t> closure, index;
  std::optional<std::uint64_t> ell;
  build_app(app, cmd, g, i, a, fmt, closure, index, ell);

  std::vector<std::string> rest(argv.rbegin(), argv.rend() - 1);  // CLI11 wants reverse order
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(UsageErrc::BadOption, app.help());
  } catch (const CLI::RequiredError& e) {
    throw UsageError(UsageErrc::MissingOption, e.what());
  } catch (const CLI::ParseError& e) {
    throw UsageError(UsageErrc::BadOption, e.what());
  }

  cmd.format = fmt == "json" ? Format::Json : Format::Text;
  if (closure) cmd.bounds.closure = *closure;
  if (index) cmd.bounds.index = *index;
  if (ell) cmd.bounds.ell = *ell;
  if (!g.empty()) cmd.g_factors = parse_list(g, "--g");
  if (!i.empty()) cmd.i_factors = parse_list(i, "--i");
  if (!a.empty()) {
    std::stringstream ss(a);
    std::string item;
    while (std::getline(ss, item, ',')) cmd.a_invariants.push_back(item);
    if (cmd.a_invariants.size() != 5) throw UsageError(UsageErrc::BadOption, "--a expects five comma-separated values");
  }
  if (cmd.verb == Verb::CurveAnalyze && a.empty() && cmd.label.empty())
    throw UsageError(UsageErrc::MissingOption, "curve-analyze needs --a or --label");

  if (cmd.p) {
    bool odd_needed = cmd.verb == Verb::Gl2Candidates || cmd.verb == Verb::Gl2Requirement ||
                      cmd.verb == Verb::CurveAnalyze || cmd.verb == Verb::CurveConstruct;
    if (!nt::is_prime(*cmd.p) || (odd_needed && *cmd.p == 2))
      throw UsageError(UsageErrc::InvalidPrime, std::to_string(*cmd.p) + " is not " +
                                                    (odd_needed ? "an odd prime" : "prime"));
  }
  return cmd;
}

}  // namespace inertia::cli
