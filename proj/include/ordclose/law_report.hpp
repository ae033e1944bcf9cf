#ifndef ORDCLOSE_LAW_REPORT_HPP
#define ORDCLOSE_LAW_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ordclose {

struct Violation {
    std::string law;
    std::string inputs;
    std::string expected;
    std::string got;
};

// Outcome of running a law or property suite over a finite set of cases.
// An empty `violations` list means the law held on every case that ran.
struct LawReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t skipped = 0;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    void add_violation(std::string law, std::string inputs, std::string expected, std::string got);
    void merge(const LawReport& other);

    // {suite, seed, cases, skipped, violations:[{law, inputs, expected, got}]}
    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

}  // namespace ordclose

#endif
