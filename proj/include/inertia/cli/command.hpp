#pragma once

// Command-line parsing for inertia-lab.  Usage problems surface as
// UsageError and map to exit code 2.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace inertia::cli {

enum class Verb {
  GroupInfo,
  RealizeAbelian,
  RealizeOdd,
  Gl2Candidates,
  Gl2Requirement,
  CurveAnalyze,
  CurveConstruct,
  VerifyExample62,
};

std::string verb_name(Verb v);
const std::vector<std::string>& verb_names();

enum class UsageErrc { UnknownVerb, MissingOption, InvalidPrime, BadOption };

class UsageError : public std::runtime_error {
 public:
  UsageError(UsageErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  UsageErrc code() const noexcept { return code_; }

 private:
  UsageErrc code_;
};

std::string usage_errc_name(UsageErrc c);

enum class Format { Text, Json };

struct Bounds {
  std::size_t closure = 200000;  // elements enumerated per group
  std::size_t index = 10000;     // [G : I] for intermediate-subgroup search
  std::uint64_t ell = 500;       // primes sampled for surjectivity
};

struct Command {
  Verb verb = Verb::GroupInfo;
  Format format = Format::Text;
  Bounds bounds;

  std::optional<std::uint64_t> p;
  std::vector<std::uint64_t> g_factors;  // realize-abelian --g
  std::vector<std::uint64_t> i_factors;  // realize-abelian --i
  std::string group_spec;                // inline JSON or @file
  std::string inertia_spec;              // JSON array of generators or @file
  bool global = false;                   // realize-odd over Q instead of Q_p
  std::string candidate;                 // gl2-requirement JSON
  std::vector<std::string> a_invariants; // curve-analyze --a
  std::string label;                     // curve-analyze --label
  std::string construct_kind = "supersingular";
  std::string verify_witness;            // path of a JSON witness to re-check
};

// argv without the program name.  Environment variable INERTIA_LAB_BOUNDS
// (JSON {"closure":..,"index":..,"ell":..}) supplies defaults; flags win.
Command parse_command(const std::vector<std::string>& argv);

// Full help text.
std::string usage();

}  // namespace inertia::cli
