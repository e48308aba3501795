#ifndef NILCERT_CLI_HPP
#define NILCERT_CLI_HPP

#include <nilcert/report.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nilcert {

// Everything a subcommand run depends on. Identical configs (seed included)
// produce byte-identical reports.
struct RunConfig {
    std::string subcommand;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::int64_t precision = 12;
    long bound = 9;
    long max_size = 40;

    std::string partition; // certify-prop2
    std::string flag;      // flag-spec string where a subcommand takes one
    std::string kind;      // dim-match: "sl" or "sp"
    long size = 0;         // dim-match: matrix size m for sl
    long rank = 0;         // dim-match: n for sp
    long genus = 2;

    long jet_m = -1, jet_j = -1, jet_k = -1; // jet-check; -1 = sweep

    long pole_override = -1; // dim-match: uniform pole order C

    std::string format = "json"; // "json" | "text"
};

// Executes the configured subcommand, writing the report to `out` and
// error diagnostics to `err`. Exit code: 0 all checks passed, 1 violations
// or mismatches found, 2 usage/config errors.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// In-process capture of a run; used by the determinism checks.
struct CapturedRun {
    int exit_code;
    std::string output;
    std::string error;
};
CapturedRun run_captured(const RunConfig &config);

} // namespace nilcert

#endif
