#ifndef ORDCLOSE_FIXTURES_HPP
#define ORDCLOSE_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ordclose/closure_systems.hpp"
#include "ordclose/filters_topology.hpp"
#include "ordclose/integration.hpp"
#include "ordclose/limits_local.hpp"

namespace ordclose {

// Malformed user input, with the field path (e.g. "weights[2]") or the
// line:column where it was found.
class InputError : public std::runtime_error {
public:
    InputError(std::string where, std::string message)
        : std::runtime_error(where.empty() ? message : where + ": " + message), where_(std::move(where)),
          message_(std::move(message))
    {
    }
    [[nodiscard]] const std::string& where() const { return where_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    std::string where_;
    std::string message_;
};

// A JSON document from a file path, or inline when the text starts with
// '{' or '['. Syntax errors carry line:column.
nlohmann::json load_json(const std::string& path_or_inline);

// Fixture expressions are sums of terms "[coef*]name", e.g. "2+3*harmonic+-1*alt".
// A bare rational is a constant term.
TailedSequence parse_sequence(std::string_view expr);
LocalFunction parse_local_function(std::string_view expr, const Rational& at);
Integrand1D parse_integrand(std::string_view expr, const Rational& lo, const Rational& hi);
AtomicFunction parse_atomic_function(const nlohmann::json& doc);
AtomicMeasureSpace parse_measure_space(const nlohmann::json& doc);

// {carrier:[...], opens:[[...], ...]} or a builtin name.
FiniteTopology parse_topology(const nlohmann::json& doc);
// {degree, generators:[[images 1-based], ...]}, {elements, table} or a builtin name.
FiniteGroup parse_group(const nlohmann::json& doc);
// Cycle notation ("(1 2)(3 4)", "(12)") in the canonical form group labels use.
std::string canonical_cycle(const std::string& text, std::size_t degree);
// {carrier:[...], sets:[[...], ...], mu:{"{1,2}": "2", ...} | [values aligned with sets]}.
PreMeasure parse_premeasure(const nlohmann::json& doc);

// Labels of a JSON carrier: strings as given, numbers in decimal.
std::vector<std::string> parse_labels(const nlohmann::json& carrier, const std::string& field);

struct FixtureEntry {
    std::string name;
    std::string kind;
    std::string definition;
    std::string oracle;
};

std::vector<FixtureEntry> fixture_catalog();

}  // namespace ordclose

#endif
