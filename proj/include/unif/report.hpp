#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "unif/numerics.hpp"
#include "unif/polygon.hpp"

namespace unif {

inline constexpr int kSchemaVersion = 1;

// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCheckFail = 1, kExitUsage = 2, kExitNumeric = 3 };

// Rows with equal names are merged; the larger residual wins and NaN is sticky.
CheckTable merge_max(const std::vector<CheckTable>& tables);

// Sample grid of a suite: `samples` points from seeded_points(seed, ...).
struct SuiteOptions {
  int samples = -1;  // -1: suite default
  std::uint64_t seed = 1;
};
inline const std::vector<std::string> kSuites{"identities", "curves",    "fuchsian",
                                              "modular-odes", "integrals", "metrics"};
// Throws DomainError for an unknown suite. `data` receives per-suite details.
CheckTable run_suite(const std::string& suite, const SuiteOptions& opt, nlohmann::ordered_json* data = nullptr);

nlohmann::ordered_json emit_polygon(const GeodesicPolygon& p);
nlohmann::ordered_json curve_registry_json();
nlohmann::ordered_json check_json(const CheckRow& r);

cplx parse_complex(const std::string& text);

// Entry point of the tool; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unif
