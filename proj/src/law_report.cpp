#include "ordclose/law_report.hpp"

namespace ordclose {

void LawReport::add_violation(std::string law, std::string inputs, std::string expected, std::string got)
{
    violations.push_back({std::move(law), std::move(inputs), std::move(expected), std::move(got)});
}

void LawReport::merge(const LawReport& other)
{
    cases += other.cases;
    skipped += other.skipped;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

nlohmann::ordered_json LawReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    doc["cases"] = cases;
    doc["skipped"] = skipped;
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json item;
        item["law"] = v.law;
        item["inputs"] = v.inputs;
        item["expected"] = v.expected;
        item["got"] = v.got;
        list.push_back(std::move(item));
    }
    doc["violations"] = std::move(list);
    return doc;
}

}  // namespace ordclose
