#ifndef ORDCLOSE_CLI_HPP
#define ORDCLOSE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordclose/engine.hpp"
#include "ordclose/rational.hpp"

namespace ordclose {

// Exit codes: verified / certified negative / inconclusive / bad input.
enum class ExitCode : int { ok = 0, usage = 1, refuted = 2, inconclusive = 3 };

ExitCode exit_code_for(ExtensionStatus status);

struct RunConfig {
    std::string subcommand;
    Rational tolerance = Rational(1, 1000000);
    std::size_t budget = 1000000;
    bool json = true;
    std::uint64_t seed = 0;
};

// Places needed so that one unit in the last place is at most tol / 10
// (between 6 and 40).
int display_digits(const Rational& tol);

// "[down, up]" with each endpoint rounded outward to `digits` places.
std::string decimal_display(const RationalEnclosure& e, int digits);

// status, lower, upper, width, gap, decimal_display, iterations, note.
nlohmann::ordered_json outcome_json(const ExtensionOutcome<Rational>& outcome, const Rational& tol);

// Runs one command line (without the program name); writes the result
// document to `out` and diagnostics to `err`; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordclose

#endif
