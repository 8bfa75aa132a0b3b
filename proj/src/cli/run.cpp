#include "inertia/cli/run.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "inertia/elliptic/canonical_lift.hpp"
#include "inertia/elliptic/construct.hpp"
#include "inertia/elliptic/fixtures.hpp"
#include "inertia/elliptic/reduction.hpp"
#include "inertia/error.hpp"
#include "inertia/gl2/candidates.hpp"
#include "inertia/group/algorithms.hpp"
#include "inertia/group/group_spec.hpp"
#include "inertia/local/abelian.hpp"
#include "inertia/local/counterexample.hpp"
#include "inertia/local/odd.hpp"

namespace inertia::cli {

using nlohmann::json;

namespace {

std::string read_arg(const std::string& s) {
  if (s.empty() || s[0] != '@') return s;
  std::ifstream in(s.substr(1));
  if (!in) throw Error(Errc::InvalidSpec, "cannot read " + s.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(read_arg(text));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidSpec, what + " is not valid JSON: " + e.what());
  }
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s.empty() ? "1" : s;
}

json rat_json(const ec::Rat& x) { return {{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}}; }

// Adds the verdict's lines and exit code.
Report verdict_report(const local::RealizabilityVerdict& v, const group::FiniteGroup* G) {
  Report r;
  r.json = verdict_to_json(v, G);
  r.exit_code = v.realizable() ? 0 : 1;
  r.lines.push_back("status: " + local::status_name(v.status));
  r.lines.push_back("reason: " + v.reason);
  if (v.local) {
    const auto& t = v.local->tame;
    r.lines.push_back("tame: e=" + std::to_string(t.e) + " f=" + std::to_string(t.f) + " r=" + std::to_string(t.r));
    if (G) {
      r.lines.push_back("sigma: " + G->arithmetic().to_json(t.sigma).dump());
      r.lines.push_back("tau: " + G->arithmetic().to_json(t.tau).dump());
      r.lines.push_back("wild a: " + G->arithmetic().to_json(v.local->wild.a).dump());
    }
  }
  if (v.abelian) {
    const auto& w = *v.abelian;
    r.lines.push_back("witness: n=" + std::to_string(w.n) + " primes=" + join(w.primes) + " orders=" + join(w.orders));
  }
  return r;
}

Report group_info(const Command& cmd) {
  auto G = group::group_from_spec(parse_json(cmd.group_spec, "--group"), cmd.bounds.closure);
  Report r;
  std::map<std::uint64_t, std::uint64_t> orders;
  for (group::Index x = 0; x < G->order(); ++x) ++orders[G->element_order(x)];
  json ords = json::object();
  for (auto [o, c] : orders) ords[std::to_string(o)] = c;
  r.json = {{"order", G->order()}, {"abelian", G->is_abelian()}, {"element_orders", ords}};
  r.lines.push_back("order: " + std::to_string(G->order()));
  r.lines.push_back(std::string("abelian: ") + (G->is_abelian() ? "yes" : "no"));
  if (G->is_abelian()) {
    auto inv = group::abelian_invariants(G);
    r.json["abelian_invariants"] = inv.factors;
    r.lines.push_back("abelian invariants: " + join(inv.factors));
  }
  std::string os;
  for (auto [o, c] : orders) os += (os.empty() ? "" : " ") + std::to_string(o) + ":" + std::to_string(c);
  r.lines.push_back("element orders: " + os);
  if (cmd.p) {
    auto P = group::sylow_p_subgroup(G, *cmd.p);
    unsigned rank = group::generator_rank_p_group(P, *cmd.p);
    r.json["sylow"] = {{"p", *cmd.p}, {"order", P.order()}, {"generator_rank", rank}};
    r.lines.push_back("sylow " + std::to_string(*cmd.p) + ": order " + std::to_string(P.order()) + ", rank " +
                      std::to_string(rank));
  }
  return r;
}

Report realize_abelian(const Command& cmd) {
  auto G = group::AbelianType::from_factors(cmd.g_factors);
  auto I = group::AbelianType::from_factors(cmd.i_factors);
  if (!cmd.verify_witness.empty()) {
    json j = parse_json("@" + cmd.verify_witness, "witness");
    if (j.contains("witness")) j = j["witness"];
    auto w = abelian_witness_from_json(j);
    std::string bad = local::validate_abelian_witness(G, I, *cmd.p, w);
    Report r;
    r.exit_code = bad.empty() ? 0 : 1;
    r.json = {{"witness_valid", bad.empty()}};
    if (!bad.empty()) r.json["failure"] = bad;
    r.lines.push_back(bad.empty() ? "witness valid" : "witness invalid: " + bad);
    return r;
  }
  return verdict_report(local::abelian_realizable(G, I, *cmd.p), nullptr);
}

Report realize_odd(const Command& cmd) {
  auto G = group::group_from_spec(parse_json(cmd.group_spec, "--group"), cmd.bounds.closure);
  json ij = parse_json(cmd.inertia_spec, "--inertia");
  if (!ij.is_array()) throw Error(Errc::InvalidSpec, "--inertia must be a JSON array of elements");
  std::vector<group::Index> gens;
  for (const auto& e : ij) gens.push_back(group::element_from_json(*G, e));
  group::Subgroup I(G, gens);

  if (!cmd.verify_witness.empty()) {
    json j = parse_json("@" + cmd.verify_witness, "witness");
    if (j.contains("witness")) j = j["witness"];
    auto w = local_witness_from_json(*G, j);
    std::string bad = local::validate_local_witness(G, I, *cmd.p, w);
    Report r;
    r.exit_code = bad.empty() ? 0 : 1;
    r.json = {{"witness_valid", bad.empty()}};
    if (!bad.empty()) r.json["failure"] = bad;
    r.lines.push_back(bad.empty() ? "witness valid" : "witness invalid: " + bad);
    return r;
  }
  auto v = cmd.global ? local::q_realizable_odd(G, I, *cmd.p, cmd.bounds.index)
                      : local::qp_realizable_odd(G, I, *cmd.p);
  Report r = verdict_report(v, G.get());
  r.json["mode"] = cmd.global ? "global" : "local";
  return r;
}

Report gl2_candidates(const Command& cmd) {
  gl2::Gl2Context ctx(*cmd.p);
  Report r;
  json list = json::array();
  r.lines.push_back("p=" + std::to_string(ctx.p()) + " alpha=" + std::to_string(ctx.alpha()) +
                    " delta=" + std::to_string(ctx.delta()));
  for (const auto& c : gl2::inertia_candidates(ctx)) {
    auto S = gl2::candidate_subgroup(ctx, c);
    auto req = gl2::candidate_requirement(ctx, c);
    json cj = c.to_json();
    list.push_back({{"candidate", cj}, {"order", S.order()}, {"scalar_alias", c.scalar_alias},
                    {"requirement", req.to_json()}});
    r.lines.push_back(c.describe() + "  order " + std::to_string(S.order()) + "  -> " + req.describe());
  }
  r.json = {{"p", ctx.p()}, {"alpha", ctx.alpha()}, {"delta", ctx.delta()}, {"candidates", list}};
  return r;
}

Report gl2_requirement(const Command& cmd) {
  gl2::Gl2Context ctx(*cmd.p);
  auto c = gl2::InertiaCandidate::from_json(parse_json(cmd.candidate, "--candidate"));
  auto req = gl2::candidate_requirement(ctx, c);
  Report r;
  r.json = {{"p", ctx.p()}, {"candidate", c.to_json()}, {"requirement", req.to_json()}};
  if (c.kind != gl2::CandidateKind::NonsplitTame) r.json["canonical"] = gl2::canonical_candidate(ctx, c).to_json();
  r.lines.push_back("candidate: " + c.describe());
  r.lines.push_back("requirement: " + req.describe());
  return r;
}

ec::EllipticCurve curve_from_command(const Command& cmd) {
  if (!cmd.label.empty()) {
    auto E = ec::curve_by_label(cmd.label);
    if (!E) throw Error(Errc::InvalidSpec, "unknown curve label '" + cmd.label + "'");
    return *E;
  }
  json arr = json::array();
  for (const auto& s : cmd.a_invariants) arr.push_back(s);
  return ec::EllipticCurve::from_json({{"a", arr}});
}

Report curve_analyze(const Command& cmd) {
  const std::uint64_t p = *cmd.p;
  auto E = curve_from_command(cmd);
  Report r;
  json j{{"p", p}, {"curve", E.to_json()}, {"j", rat_json(E.j())}};
  r.lines.push_back("curve: " + E.describe());
  r.lines.push_back("j: " + ec::to_string(E.j()));
  try {
    j["j_mod_p2"] = ec::residue_of_rational(E.j(), p * p);
    r.lines.push_back("j mod p^2: " + std::to_string(j["j_mod_p2"].get<std::uint64_t>()));
  } catch (const Error&) {
    j["j_mod_p2"] = nullptr;
  }
  bool good = ec::good_reduction(E, p);
  j["good"] = good;
  if (!good) {
    j["reduction"] = "bad";
    r.json = j;
    r.exit_code = 1;
    r.lines.push_back("reduction: bad");
    return r;
  }
  auto R = ec::point_count(E, p);
  j["a_p"] = R.a;
  j["reduction"] = ec::reduction_name(R.type);
  j["ss"] = R.type == ec::ReductionType::Supersingular;
  r.lines.push_back("reduction: " + ec::reduction_name(R.type) + ", a_p = " + std::to_string(R.a));

  j["j_lift_mod_p2"] = nullptr;
  j["gross_diagonal"] = nullptr;
  if (R.type == ec::ReductionType::Ordinary) {
    try {
      auto L = ec::canonical_lift_j(E, p);
      j["canonical_lift"] = L.to_json();
      j["j_lift_mod_p2"] = L.j_lift;
      bool diag = !j["j_mod_p2"].is_null() && j["j_mod_p2"].get<std::uint64_t>() == L.j_lift;
      j["gross_diagonal"] = diag;
      r.lines.push_back("canonical lift mod p^2: " + std::to_string(L.j_lift) + " (H_" + std::to_string(L.disc) + ")");
      r.lines.push_back(std::string("inertia diagonalizable: ") + (diag ? "yes" : "no"));
    } catch (const Error& e) {
      j["canonical_lift_error"] = e.what();
      r.lines.push_back(std::string("canonical lift: ") + e.what());
    }
  }
  auto S = ec::surjectivity(E, p, cmd.bounds.ell);
  j["surjectivity"] = S.to_json();
  r.lines.push_back(std::string("surjectivity: ") + (S.surjective() ? "surjective" : "inconclusive (" + S.reason + ")"));
  j["inertia_candidate"] = nullptr;
  if (S.surjective() && (R.type == ec::ReductionType::Supersingular || !j["gross_diagonal"].is_null())) {
    auto c = R.type == ec::ReductionType::Supersingular ? gl2::InertiaCandidate::nonsplit(1)
             : j["gross_diagonal"].get<bool>()          ? gl2::InertiaCandidate::split(0, 1)
                                                        : gl2::InertiaCandidate::wild(0, 1);
    j["inertia_candidate"] = c.to_json();
    r.lines.push_back("inertia image: " + c.describe());
  } else {
    r.exit_code = 1;
  }
  r.json = j;
  return r;
}

Report curve_construct(const Command& cmd) {
  const std::uint64_t p = *cmd.p;
  ec::ConstructionCertificate c = cmd.construct_kind == "supersingular"
                                      ? ec::construct_supersingular(p)
                                      : ec::construct_ordinary(p, cmd.construct_kind == "ordinary-diagonal");
  auto fails = ec::validate_certificate(c);
  Report r;
  r.json = c.to_json();
  r.json["validated"] = fails.empty();
  r.json["failures"] = fails;
  r.exit_code = fails.empty() ? 0 : 3;
  r.lines.push_back("kind: " + ec::construction_name(c.kind));
  r.lines.push_back("curve: " + c.curve->describe());
  r.lines.push_back("j: " + ec::to_string(c.curve->j()));
  r.lines.push_back("auxiliary prime q: " + std::to_string(c.q));
  r.lines.push_back(std::string("certificate: ") + (fails.empty() ? "valid" : "INVALID"));
  for (const auto& f : fails) r.lines.push_back("  failed: " + f);
  return r;
}

Report verify_example(const Command&) {
  auto rep = local::counterexample_report();
  Report r;
  r.json = rep.to_json();
  r.exit_code = rep.ok() ? 0 : 1;
  r.lines.push_back("|G| = " + std::to_string(rep.group_order) + ", |I| = " + std::to_string(rep.inertia_order));
  std::string orders, ranks;
  for (auto o : rep.intermediate_orders) orders += (orders.empty() ? "" : ",") + std::to_string(o);
  for (auto k : rep.intermediate_ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(k);
  r.lines.push_back("intermediate subgroup orders: " + orders);
  r.lines.push_back("generator ranks: " + ranks);
  r.lines.push_back("normal closure order: " + std::to_string(rep.wild_closure_order));
  r.lines.push_back(std::string("all checks: ") + (rep.ok() ? "pass" : "FAIL"));
  for (const auto& f : rep.failures) r.lines.push_back("  failed: " + f);
  return r;
}

}  // namespace

json verdict_to_json(const local::RealizabilityVerdict& v, const group::FiniteGroup* G) {
  json j{{"status", local::status_name(v.status)}, {"reason", v.reason}};
  if (v.local && G) {
    const auto& A = G->arithmetic();
    const auto& w = *v.local;
    json dg = json::array();
    for (const auto& g : w.d_generators) dg.push_back(A.to_json(g));
    j["witness"] = {{"d_generators", dg},
                    {"tame",
                     {{"sigma", A.to_json(w.tame.sigma)},
                      {"tau", A.to_json(w.tame.tau)},
                      {"e", w.tame.e},
                      {"f", w.tame.f},
                      {"r", w.tame.r},
                      {"frobenius_congruence", w.tame.frobenius_congruence},
                      {"twist_congruence", w.tame.twist_congruence}}},
                    {"wild", {{"a", A.to_json(w.wild.a)}}}};
  }
  if (v.abelian) j["witness"] = {{"n", v.abelian->n}, {"primes", v.abelian->primes}, {"orders", v.abelian->orders}};
  return j;
}

local::LocalWitness local_witness_from_json(const group::FiniteGroup& G, const json& j) {
  try {
    const auto& A = G.arithmetic();
    local::LocalWitness w;
    for (const auto& g : j.at("d_generators")) w.d_generators.push_back(A.from_json(g));
    const auto& t = j.at("tame");
    w.tame.sigma = A.from_json(t.at("sigma"));
    w.tame.tau = A.from_json(t.at("tau"));
    w.tame.e = t.at("e").get<std::uint64_t>();
    w.tame.f = t.at("f").get<std::uint64_t>();
    w.tame.r = t.at("r").get<std::uint64_t>();
    w.wild.a = A.from_json(j.at("wild").at("a"));
    return w;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidSpec, std::string("malformed local witness: ") + e.what());
  }
}

local::AbelianWitness abelian_witness_from_json(const json& j) {
  try {
    local::AbelianWitness w;
    w.n = j.at("n").get<std::uint64_t>();
    w.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    w.orders = j.at("orders").get<std::vector<std::uint64_t>>();
    return w;
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidSpec, std::string("malformed abelian witness: ") + e.what());
  }
}

Report run(const Command& cmd) {
  switch (cmd.verb) {
    case Verb::GroupInfo:
      return group_info(cmd);
    case Verb::RealizeAbelian:
      return realize_abelian(cmd);
    case Verb::RealizeOdd:
      return realize_odd(cmd);
    case Verb::Gl2Candidates:
      return gl2_candidates(cmd);
    case Verb::Gl2Requirement:
      return gl2_requirement(cmd);
    case Verb::CurveAnalyze:
      return curve_analyze(cmd);
    case Verb::CurveConstruct:
      return curve_construct(cmd);
    case Verb::VerifyExample62:
      return verify_example(cmd);
  }
  throw Error(Errc::InvalidParameters, "unknown verb");
}

std::string emit(const Report& report, Format format) {
  if (format == Format::Json) return report.json.dump(2) + "\n";
  std::string s;
  for (const auto& l : report.lines) s += l + "\n";
  return s;
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_command(argv);
  } catch (const UsageError& e) {
    err << usage_errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  try {
    Report r = run(cmd);
    out << emit(r, cmd.format);
    return r.exit_code;
  } catch (const Error& e) {
    if (cmd.format == Format::Json)
      out << json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump(2) << "\n";
    err << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace inertia::cli
