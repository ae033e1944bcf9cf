#include "ordclose/cli.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "ordclose/algebra_props.hpp"
#include "ordclose/closure_systems.hpp"
#include "ordclose/filters_topology.hpp"
#include "ordclose/fixtures.hpp"
#include "ordclose/integration.hpp"
#include "ordclose/limits_local.hpp"
#include "ordclose/roots_exp.hpp"

namespace ordclose {

using Doc = nlohmann::ordered_json;

namespace {

// Refinement-level caps per instance: the engines count levels whose cost
// grows geometrically, so the global step budget is clamped to these.
constexpr std::size_t kRootCap = 4096;
constexpr std::size_t kRealPowerCap = 256;
constexpr std::size_t kLebesgueCap = 20;
constexpr std::size_t kLimitCap = 64;

struct CommandResult {
    Doc doc;
    ExitCode code = ExitCode::ok;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_arg(const std::string& text, const std::string& option)
{
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw InputError(option, e.what());
    }
}

std::pair<Rational, Rational> parse_pair(const std::string& text, const std::string& option)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InputError(option, "expected a,b");
    }
    return {parse_arg(text.substr(0, comma), option), parse_arg(text.substr(comma + 1), option)};
}

// Items of a set argument: a JSON array, or a comma list split outside
// brackets, with one pair of outer braces dropped.
std::vector<nlohmann::json> parse_set_items(const std::string& text)
{
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.erase(s.begin());
    }
    if (!s.empty() && s.front() == '[') {
        const auto doc = load_json(s);
        if (!doc.is_array()) {
            throw InputError("--set", "expected an array");
        }
        return {doc.begin(), doc.end()};
    }
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            depth += s[i] == '{' ? 1 : (s[i] == '}' ? -1 : 0);
            if (depth == 0 && i + 1 < s.size()) {
                wraps = false;
            }
        }
        if (wraps) {
            s = s.substr(1, s.size() - 2);
        }
    }
    std::vector<nlohmann::json> out;
    int depth = 0;
    std::string cur;
    const auto flush = [&] {
        std::size_t b = cur.find_first_not_of(' ');
        std::size_t e = cur.find_last_not_of(' ');
        if (b != std::string::npos) {
            out.emplace_back(cur.substr(b, e - b + 1));
        }
        cur.clear();
    };
    for (char c : s) {
        if (c == '(' || c == '{' || c == '[') {
            ++depth;
        } else if (c == ')' || c == '}' || c == ']') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

std::string item_text(const nlohmann::json& item)
{
    if (item.is_string()) {
        return item.get<std::string>();
    }
    return item.dump();
}

// "{1,2}" / "[1,2]" / JSON array -> member labels.
std::vector<std::string> subset_labels(const nlohmann::json& item)
{
    std::vector<std::string> out;
    if (item.is_array()) {
        for (const auto& v : item) {
            out.push_back(item_text(v));
        }
        return out;
    }
    std::string s = item_text(item);
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) {
        s = s.substr(1, s.size() >= 2 ? s.size() - 2 : 0);
    }
    for (const auto& v : parse_set_items(s)) {
        out.push_back(item_text(v));
    }
    return out;
}

Doc report_json(const LawReport& r)
{
    return r.to_json();
}

Doc closure_members(const ClosureSystem& system, ElementSet s)
{
    Doc members = Doc::array();
    for (std::size_t i = 0; i < system.size; ++i) {
        if (((s >> i) & 1U) != 0) {
            members.push_back(system.labels[i]);
        }
    }
    return members;
}

Doc subset_json(const FiniteTopology& top, Subset s)
{
    Doc out = Doc::array();
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (((s >> i) & 1U) != 0) {
            out.push_back(top.labels()[i]);
        }
    }
    return out;
}

struct Globals {
    std::string tol = "1e-6";
    std::size_t budget = 1000000;
    bool json = false;
    bool plain = false;
    std::uint64_t seed = 0;
};

std::size_t default_budget()
{
    const char* env = std::getenv("ORDCLOSE_BUDGET");
    if (env == nullptr || *env == '\0') {
        return 1000000;
    }
    const std::string text(env);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }) ||
        text.size() > 18) {
        throw UsageError("ORDCLOSE_BUDGET must be a positive integer, got '" + text + "'");
    }
    const auto v = static_cast<std::size_t>(std::stoull(text));
    if (v == 0) {
        throw UsageError("ORDCLOSE_BUDGET must be a positive integer, got '0'");
    }
    return v;
}

void print_plain(const Doc& doc, std::ostream& out)
{
    for (const auto& [key, value] : doc.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

}  // namespace

ExitCode exit_code_for(ExtensionStatus status)
{
    switch (status) {
    case ExtensionStatus::converged:
        return ExitCode::ok;
    case ExtensionStatus::gap_at_least:
        return ExitCode::refuted;
    case ExtensionStatus::budget_exhausted:
    case ExtensionStatus::not_k_bounded:
        return ExitCode::inconclusive;
    }
    return ExitCode::inconclusive;
}

int display_digits(const Rational& tol)
{
    int digits = 6;
    Rational unit = Rational(1, 1000000);
    const Rational target = tol / Rational(10);
    while (digits < 40 && unit > target) {
        ++digits;
        unit /= Rational(10);
    }
    return digits;
}

std::string decimal_display(const RationalEnclosure& e, int digits)
{
    return "[" + e.lower().to_decimal_down(digits) + ", " + e.upper().to_decimal_up(digits) + "]";
}

Doc outcome_json(const ExtensionOutcome<Rational>& outcome, const Rational& tol)
{
    Doc doc;
    doc["status"] = to_string(outcome.status);
    if (outcome.enclosure) {
        const auto& e = *outcome.enclosure;
        doc["lower"] = e.lower().to_string();
        doc["upper"] = e.upper().to_string();
        doc["width"] = width(e).to_string();
        doc["decimal_display"] = decimal_display(e, display_digits(tol));
    } else {
        doc["lower"] = nullptr;
        doc["upper"] = nullptr;
        doc["width"] = nullptr;
        doc["decimal_display"] = nullptr;
    }
    doc["gap"] = outcome.gap ? Doc(outcome.gap->to_string()) : Doc(nullptr);
    doc["iterations"] = outcome.iterations;
    doc["note"] = outcome.note;
    return doc;
}

namespace {

CommandResult from_outcome(const ExtensionOutcome<Rational>& outcome, const RunConfig& cfg, Doc instance,
                           std::size_t effective_budget)
{
    CommandResult r;
    r.doc["command"] = cfg.subcommand;
    r.doc["instance"] = std::move(instance);
    const Doc body = outcome_json(outcome, cfg.tolerance);
    for (const auto& [k, v] : body.items()) {
        r.doc[k] = v;
    }
    r.doc["tolerance"] = cfg.tolerance.to_string();
    r.doc["budget"] = cfg.budget;
    r.doc["effective_budget"] = effective_budget;
    r.doc["seed"] = cfg.seed;
    r.code = exit_code_for(outcome.status);
    return r;
}

CommandResult finish_report(const RunConfig& cfg, Doc instance, const LawReport& report, Doc extra = Doc::object())
{
    CommandResult r;
    r.doc["command"] = cfg.subcommand;
    r.doc["instance"] = std::move(instance);
    r.doc["status"] = report.ok() ? "Verified" : "Refuted";
    for (auto& [k, v] : extra.items()) {
        r.doc[k] = v;
    }
    r.doc["report"] = report_json(report);
    r.doc["seed"] = cfg.seed;
    r.code = report.ok() ? ExitCode::ok : ExitCode::refuted;
    return r;
}

CommandResult cmd_root(const RunConfig& cfg, const std::string& radicand, unsigned long degree)
{
    const std::size_t budget = std::min(cfg.budget, kRootCap);
    const RootQuery q{parse_arg(radicand, "--radicand"), degree};
    const auto out = nth_root(q, cfg.tolerance, budget);
    return from_outcome(out, cfg, Doc{{"radicand", q.radicand.to_string()}, {"degree", degree}}, budget);
}

CommandResult cmd_pow(const RunConfig& cfg, const std::string& base_text, const std::string& exp_text)
{
    const Rational base = parse_arg(base_text, "--base");
    if (exp_text.find(',') != std::string::npos) {
        const auto [a, b] = parse_pair(exp_text, "--exp");
        if (b < a) {
            throw InputError("--exp", "need a <= b");
        }
        const std::size_t budget = std::min(cfg.budget, kRealPowerCap);
        const auto out = real_power(ExpQuery{base, RationalEnclosure(a, b)}, cfg.tolerance, budget);
        return from_outcome(
            out, cfg, Doc{{"base", base.to_string()}, {"exponent", Doc::array({a.to_string(), b.to_string()})}},
            budget);
    }
    const Rational e = parse_arg(exp_text, "--exp");
    const std::size_t budget = std::min(cfg.budget, kRootCap);
    const auto out = rational_power(base, e, cfg.tolerance, budget);
    return from_outcome(out, cfg, Doc{{"base", base.to_string()}, {"exponent", e.to_string()}}, budget);
}

CommandResult cmd_riemann(const RunConfig& cfg, const std::string& domain, const std::string& oracle)
{
    const auto [lo, hi] = parse_pair(domain, "--domain");
    const auto f = parse_integrand(oracle, lo, hi);
    const auto out = darboux_extend(f, cfg.tolerance, cfg.budget);
    Doc inst{{"integrand", f.name}, {"domain", Doc::array({lo.to_string(), hi.to_string()})},
             {"levels_within_budget", darboux_levels(cfg.budget)}};
    return from_outcome(out, cfg, std::move(inst), cfg.budget);
}

CommandResult cmd_lebesgue(const RunConfig& cfg, const std::string& space_arg, const std::string& f_arg)
{
    const auto space = [&] {
        try {
            return parse_measure_space(load_json(space_arg));
        } catch (const InputError& e) {
            throw InputError("--space " + e.where(), e.message());
        }
    }();
    const auto f = [&] {
        try {
            return parse_atomic_function(load_json(f_arg));
        } catch (const InputError& e) {
            throw InputError("--f " + e.where(), e.message());
        }
    }();
    const std::size_t budget = std::min(cfg.budget, kLebesgueCap);
    const auto out = lebesgue_extend(f, space, cfg.tolerance, budget);
    Doc inst{{"function", f.name},
             {"space", space.is_finite() ? Doc(space.labels()) : Doc(space.name())}};
    return from_outcome(out, cfg, std::move(inst), budget);
}

CommandResult cmd_limit(const RunConfig& cfg, const std::string& expr)
{
    const auto seq = parse_sequence(expr);
    const std::size_t budget = std::min(cfg.budget, kLimitCap);
    const auto out = net_limit(seq, cfg.tolerance, budget);
    return from_outcome(out, cfg, Doc{{"sequence", seq.name}}, budget);
}

CommandResult cmd_continuity(const RunConfig& cfg, const std::string& expr, const std::string& at_text)
{
    const Rational at = parse_arg(at_text, "--at");
    const auto f = parse_local_function(expr, at);
    const std::size_t budget = std::min(cfg.budget, kLimitCap);
    auto out = continuity_at(f, cfg.tolerance, budget);
    auto r = from_outcome(out, cfg, Doc{{"function", f.name}, {"point", at.to_string()}}, budget);
    r.doc["value_at_point"] = f.eval(at).to_string();
    return r;
}

CommandResult cmd_derivative(const RunConfig& cfg, const std::string& expr)
{
    auto f = parse_local_function(expr, Rational(0));
    const Rational at_zero = f.germ ? f.germ->at_point : f.eval(Rational(0));
    const std::string name = f.name;
    if (!at_zero.is_zero()) {
        // Same derivative as f - f(0).
        f = f + LocalFunction::constant_function(Rational(0), -at_zero);
    }
    const std::size_t budget = std::min(cfg.budget, kLimitCap);
    const auto out = derivative_at_zero(f, cfg.tolerance, budget);
    return from_outcome(out, cfg, Doc{{"function", name}, {"point", "0"}}, budget);
}

CommandResult cmd_filters(const RunConfig& cfg, const std::string& space_arg, const std::string& map_arg)
{
    const auto top = [&] {
        try {
            return parse_topology(load_json(space_arg));
        } catch (const InputError& e) {
            throw InputError("--space " + e.where(), e.message());
        }
    }();
    Doc extra;
    extra["carrier"] = top.labels();
    Doc opens = Doc::array();
    for (Subset u : top.opens()) {
        opens.push_back(subset_json(top, u));
    }
    extra["opens"] = opens;
    Doc nbhd = Doc::object();
    for (std::size_t x = 0; x < top.size(); ++x) {
        nbhd[top.labels()[x]] = subset_json(top, neighborhood_filter(top, x).core());
    }
    extra["neighborhood_cores"] = nbhd;

    LawReport report;
    report.suite = "filters";
    report.seed = cfg.seed;
    bool complete = true;
    if (top.size() <= 4) {
        Doc limits = Doc::array();
        for (const auto& f : enumerate_filters(top.size())) {
            const Subset pts = convergence_points(top, f);
            Doc entry{{"core", subset_json(top, f.core())}, {"converges_to", subset_json(top, pts)}};
            entry["limit_set"] = pts != 0 ? Doc(subset_json(top, limit_set(top, f))) : Doc(nullptr);
            limits.push_back(entry);
        }
        extra["filters"] = limits;
        const auto census = filter_census(top);
        extra["census"] = Doc{{"filters", census.filters}, {"convergent", census.convergent},
                              {"k_bounded", census.k_bounded}};
        report.merge(kbounded_closure_check(top));
    } else {
        complete = false;
        extra["filters"] = nullptr;
        extra["note"] = "filter enumeration needs at most 4 points; only neighbourhoods reported";
    }
    if (!map_arg.empty()) {
        std::vector<std::size_t> map;
        const auto items = parse_set_items(map_arg);
        for (std::size_t i = 0; i < items.size(); ++i) {
            try {
                map.push_back(top.index_of(item_text(items[i])));
            } catch (const DomainError& e) {
                throw InputError("--map[" + std::to_string(i) + "]", e.what());
            }
        }
        if (map.size() != top.size()) {
            throw InputError("--map", "expected one image per point (" + std::to_string(top.size()) + ")");
        }
        Doc points = Doc::array();
        for (const auto& pc : filter_continuity(top, top, map)) {
            points.push_back(Doc{{"point", top.labels()[pc.point]},
                                 {"by_filters", pc.by_filters},
                                 {"by_preimages", pc.by_preimages}});
            ++report.cases;
            if (pc.by_filters != pc.by_preimages) {
                report.add_violation("filter continuity = preimage continuity", top.labels()[pc.point],
                                     pc.by_preimages ? "continuous" : "discontinuous",
                                     pc.by_filters ? "continuous" : "discontinuous");
            }
        }
        extra["continuity"] = Doc{{"points", points}, {"global", globally_continuous(top, top, map)}};
    }
    auto r = finish_report(cfg, Doc{{"space", top.show(top.carrier())}}, report, extra);
    if (report.ok() && !complete) {
        r.doc["status"] = "Partial";
        r.code = ExitCode::inconclusive;
    }
    return r;
}

CommandResult run_closure(const RunConfig& cfg, const ClosureSystem& system, ElementSet k, Doc instance)
{
    ClosureResult res;
    try {
        res = l_closure(k, system);
    } catch (const NotBoundedAbove& e) {
        CommandResult r;
        r.doc["command"] = cfg.subcommand;
        r.doc["instance"] = std::move(instance);
        r.doc["status"] = "NotBoundedAbove";
        r.doc["note"] = e.what();
        r.code = ExitCode::refuted;
        return r;
    }
    Doc extra;
    extra["input"] = closure_members(system, k);
    extra["closure"] = closure_members(system, res.closure);
    extra["size"] = std::popcount(res.closure);
    extra["by_intersection"] = res.by_intersection ? closure_members(system, *res.by_intersection) : Doc(nullptr);
    extra["by_fixpoint"] = res.by_fixpoint ? closure_members(system, *res.by_fixpoint) : Doc(nullptr);
    const auto laws = closure_operator_laws(system, 200, cfg.seed);
    return finish_report(cfg, std::move(instance), laws, extra);
}

ElementSet parse_members(const ClosureSystem& system, const std::vector<std::string>& labels)
{
    try {
        return system.parse(labels);
    } catch (const DomainError& e) {
        throw InputError("--set", e.what());
    }
}

CommandResult cmd_closure_topo(const RunConfig& cfg, const std::string& input, const std::string& set)
{
    const auto top = [&] {
        try {
            return parse_topology(load_json(input));
        } catch (const InputError& e) {
            throw InputError("--input " + e.where(), e.message());
        }
    }();
    const auto system = topological_system(top);
    std::vector<std::string> labels;
    for (const auto& item : parse_set_items(set)) {
        labels.push_back(item_text(item));
    }
    return run_closure(cfg, system, parse_members(system, labels), Doc{{"system", system.name}});
}

CommandResult cmd_closure_group(const RunConfig& cfg, const std::string& input, const std::string& set)
{
    const auto group = [&] {
        try {
            return parse_group(load_json(input));
        } catch (const InputError& e) {
            throw InputError("--input " + e.where(), e.message());
        }
    }();
    const auto system = subgroup_system(group);
    // Normalise cycle notation through a group on the same letters.
    std::vector<std::string> labels;
    for (const auto& item : parse_set_items(set)) {
        const std::string text = item_text(item);
        if (std::find(system.labels.begin(), system.labels.end(), text) != system.labels.end() ||
            text.empty() || text.front() != '(') {
            labels.push_back(text);
            continue;
        }
        std::size_t degree = 1;
        for (const auto& l : system.labels) {
            for (char c : l) {
                if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
                    degree = std::max<std::size_t>(degree, static_cast<std::size_t>(c - '0'));
                }
            }
        }
        const std::string label = canonical_cycle(text, degree);
        labels.push_back(label);
    }
    return run_closure(cfg, system, parse_members(system, labels), Doc{{"system", system.name}});
}

CommandResult cmd_closure_sigma(const RunConfig& cfg, const std::string& input, const std::string& set)
{
    const auto doc = load_json(input);
    std::vector<std::string> omega;
    try {
        if (doc.is_object()) {
            if (!doc.contains("carrier")) {
                throw InputError("carrier", "missing field");
            }
            omega = parse_labels(doc.at("carrier"), "carrier");
        } else {
            omega = parse_labels(doc.is_string() ? nlohmann::json::parse(doc.get<std::string>()) : doc, "carrier");
        }
    } catch (const nlohmann::json::exception&) {
        throw InputError("--input", "expected {carrier:[...]} or a carrier size");
    } catch (const InputError& e) {
        throw InputError("--input " + e.where(), e.message());
    }
    if (omega.size() > 5) {
        throw InputError("--input carrier", "sigma-algebras need at most 5 points");
    }
    const auto system = sigma_system(omega.size(), omega);
    std::vector<std::string> labels;
    for (const auto& item : parse_set_items(set)) {
        std::string label = "{";
        bool first = true;
        auto members = subset_labels(item);
        // Canonical order follows the carrier.
        std::vector<std::string> sorted;
        for (const auto& o : omega) {
            if (std::find(members.begin(), members.end(), o) != members.end()) {
                sorted.push_back(o);
            }
        }
        for (const auto& m : members) {
            if (std::find(omega.begin(), omega.end(), m) == omega.end()) {
                throw InputError("--set", "'" + m + "' is not a point of the carrier");
            }
        }
        for (const auto& m : sorted) {
            label += (first ? "" : ",") + m;
            first = false;
        }
        labels.push_back(label + "}");
    }
    return run_closure(cfg, system, parse_members(system, labels), Doc{{"system", system.name}});
}

PreMeasure load_ring(const std::string& ring_arg)
{
    try {
        return parse_premeasure(load_json(ring_arg));
    } catch (const InputError& e) {
        throw InputError("--ring " + e.where(), e.message());
    }
}

Doc ring_subset(const SetRing& ring, Subset s)
{
    Doc out = Doc::array();
    for (std::size_t i = 0; i < ring.omega(); ++i) {
        if (((s >> i) & 1U) != 0) {
            out.push_back(ring.labels()[i]);
        }
    }
    return out;
}

CommandResult cmd_measure_extend(const RunConfig& cfg, const std::string& ring_arg, const std::string& set)
{
    const auto pre = load_ring(ring_arg);
    const auto& ring = pre.ring();
    Subset s = 0;
    for (const auto& item : parse_set_items(set)) {
        const auto label = item_text(item);
        const auto it = std::find(ring.labels().begin(), ring.labels().end(), label);
        if (it == ring.labels().end()) {
            throw InputError("--set", "'" + label + "' is not a point of the carrier");
        }
        s |= singleton(static_cast<std::size_t>(it - ring.labels().begin()));
    }
    ExtRational value;
    try {
        value = outer_measure(pre, s);
    } catch (const NoCover& e) {
        throw InputError("--ring sets", e.what());
    }
    LawReport report = outer_measure_laws(pre);
    report.merge(premeasure_isotonicity(pre));
    Doc extra{{"set", ring_subset(ring, s)}, {"outer_measure", value.to_string()}};
    return finish_report(cfg, Doc{{"ring", ring.show(ring.cover())}}, report, extra);
}

CommandResult cmd_measure_restrict(const RunConfig& cfg, const std::string& ring_arg)
{
    const auto pre = load_ring(ring_arg);
    const auto& ring = pre.ring();
    Doc inst{{"ring", ring.show(ring.cover())}};
    try {
        const auto restricted = caratheodory_restrict(pre);
        Doc table = Doc::array();
        for (Subset a : restricted.sigma_algebra) {
            table.push_back(Doc{{"set", ring_subset(ring, a)}, {"measure", restricted.measure.at(a).to_string()}});
        }
        LawReport report;
        report.suite = "caratheodory";
        report.seed = cfg.seed;
        report.cases = restricted.sigma_algebra.size();
        return finish_report(cfg, std::move(inst), report, Doc{{"sigma_algebra", table}});
    } catch (const NoCover& e) {
        throw InputError("--ring sets", e.what());
    } catch (const AdditivityViolation& e) {
        CommandResult r;
        r.doc["command"] = cfg.subcommand;
        r.doc["instance"] = std::move(inst);
        r.doc["status"] = "AdditivityViolation";
        r.doc["first"] = ring_subset(ring, e.first);
        r.doc["second"] = ring_subset(ring, e.second);
        r.doc["note"] = e.what();
        r.doc["seed"] = cfg.seed;
        r.code = ExitCode::refuted;
        return r;
    }
}

CommandResult cmd_laws(const RunConfig& cfg, const std::string& suite, const std::string& instance, std::size_t cases)
{
    const auto suites = law_suite_names();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        throw InputError("--suite", "unknown suite '" + suite + "'");
    }
    const auto instances = law_instance_names();
    if (suite != "infsup" && std::find(instances.begin(), instances.end(), instance) == instances.end()) {
        throw InputError("--instance", "unknown instance '" + instance + "'");
    }
    const auto report = run_law_suite(suite, instance, cfg.seed, cases);
    return finish_report(cfg, Doc{{"suite", suite}, {"instance", suite == "infsup" ? "" : instance},
                                  {"cases_requested", cases}},
                         report);
}

CommandResult cmd_fixtures(const RunConfig& cfg, const std::string& kind)
{
    CommandResult r;
    r.doc["command"] = cfg.subcommand;
    Doc list = Doc::array();
    for (const auto& f : fixture_catalog()) {
        if (!kind.empty() && f.kind != kind) {
            continue;
        }
        list.push_back(Doc{{"name", f.name}, {"kind", f.kind}, {"definition", f.definition}, {"oracle", f.oracle}});
    }
    r.doc["fixtures"] = list;
    r.doc["status"] = "Verified";
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Enclosures of extended functionals by order approximation", "ordclose"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    try {
        g.budget = default_budget();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }
    app.add_option("--tol", g.tol, "tolerance (rational, > 0)")->capture_default_str();
    app.add_option("--budget", g.budget, "step budget (>= 1; env ORDCLOSE_BUDGET)")->capture_default_str();
    app.add_flag("--json", g.json, "JSON output (default)");
    app.add_flag("--plain", g.plain, "key: value output");
    app.add_option("--seed", g.seed, "seed for randomised suites")->capture_default_str();

    std::string radicand;
    unsigned long degree = 2;
    auto* root = app.add_subcommand("root", "n-th root enclosure");
    root->add_option("--radicand", radicand, "rational radicand")->required();
    root->add_option("--degree", degree, "root degree")->capture_default_str();

    std::string base;
    std::string exponent;
    auto* pow = app.add_subcommand("pow", "u^r for rational r, or a bracket a,b of a real exponent");
    pow->add_option("--base", base, "rational base")->required();
    pow->add_option("--exp", exponent, "rational exponent or bracket a,b")->required();

    std::string domain;
    std::string oracle;
    std::string space;
    std::string fn;
    auto* integrate = app.add_subcommand("integrate", "Riemann or atomic Lebesgue integrals");
    integrate->require_subcommand(1);
    auto* riemann = integrate->add_subcommand("riemann", "Darboux refinement on [a, b]");
    riemann->add_option("--domain", domain, "a,b")->required();
    riemann->add_option("--oracle", oracle, "integrand expr (see fixtures)")->required();
    auto* lebesgue = integrate->add_subcommand("lebesgue", "truncated sums on an atomic measure space");
    lebesgue->add_option("--space", space, "measure-space JSON (file or inline)")->required();
    lebesgue->add_option("--f", fn, "function JSON (file or inline)")->required();

    std::string seq;
    auto* limit = app.add_subcommand("limit", "limit of a sequence");
    limit->add_option("--seq", seq, "sequence expr (see fixtures)")->required();

    std::string at = "0";
    auto* continuity = app.add_subcommand("continuity", "limit of f at p against f(p)");
    continuity->add_option("--fn", fn, "function expr (see fixtures)")->required();
    continuity->add_option("--at", at, "point p")->capture_default_str();

    auto* derivative = app.add_subcommand("derivative", "derivative at 0 through the difference quotient");
    derivative->add_option("--fn", fn, "function expr (see fixtures)")->required();

    std::string map;
    auto* filters = app.add_subcommand("filters", "neighbourhood filters, limit sets and K-bounded check");
    filters->add_option("--space", space, "topology JSON (file, inline or builtin)")->required();
    filters->add_option("--map", map, "self-map as the images of the points, checked for continuity");

    std::string input;
    std::string set;
    auto* closure = app.add_subcommand("closure", "smallest closed superset");
    closure->require_subcommand(1);
    CLI::App* closure_kinds[3] = {closure->add_subcommand("topo", "topological closure"),
                                  closure->add_subcommand("group", "generated subgroup"),
                                  closure->add_subcommand("sigma", "generated sigma-algebra")};
    for (auto* c : closure_kinds) {
        c->add_option("--input", input, "system JSON (file, inline or builtin)")->required();
        c->add_option("--set", set, "generating set: JSON array or comma list")->required();
    }

    std::string ring;
    auto* measure = app.add_subcommand("measure", "outer measure and Caratheodory restriction");
    measure->require_subcommand(1);
    auto* extend_cmd = measure->add_subcommand("extend", "mu*(S) by cover enumeration");
    extend_cmd->add_option("--ring", ring, "ring JSON (file or inline)")->required();
    extend_cmd->add_option("--set", set, "subset of the carrier")->required();
    auto* restrict_cmd = measure->add_subcommand("restrict", "mu* on the generated sigma-algebra");
    restrict_cmd->add_option("--ring", ring, "ring JSON (file or inline)")->required();

    std::string suite;
    std::string instance = "riemann";
    std::size_t cases = 200;
    auto* laws = app.add_subcommand("laws", "seeded law suites");
    laws->add_option("--suite", suite, "additivity|scaling|negation|product|compatibility|infsup")->required();
    laws->add_option("--instance", instance, "riemann|limits|lebesgue|continuity|derivative")->capture_default_str();
    laws->add_option("--cases", cases, "number of cases")->capture_default_str();

    std::string kind;
    auto* fixtures = app.add_subcommand("fixtures", "catalog of builtin fixtures");
    fixtures->add_option("--kind", kind, "only fixtures of this kind");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }

    RunConfig cfg;
    CommandResult result;
    try {
        if (g.json && g.plain) {
            throw UsageError("--json and --plain are exclusive");
        }
        cfg.json = !g.plain;
        cfg.seed = g.seed;
        cfg.budget = g.budget;
        if (cfg.budget == 0) {
            throw UsageError("--budget must be >= 1");
        }
        try {
            cfg.tolerance = Rational::parse(g.tol);
        } catch (const ParseError& e) {
            throw UsageError(std::string("--tol: ") + e.what());
        }
        if (cfg.tolerance.sign() <= 0) {
            throw UsageError("--tol must be > 0");
        }

        const auto sub = app.get_subcommands().front();
        cfg.subcommand = sub->get_name();
        if (!sub->get_subcommands().empty()) {
            cfg.subcommand += " " + sub->get_subcommands().front()->get_name();
        }
        const std::string& c = cfg.subcommand;
        if (c == "root") {
            result = cmd_root(cfg, radicand, degree);
        } else if (c == "pow") {
            result = cmd_pow(cfg, base, exponent);
        } else if (c == "integrate riemann") {
            result = cmd_riemann(cfg, domain, oracle);
        } else if (c == "integrate lebesgue") {
            result = cmd_lebesgue(cfg, space, fn);
        } else if (c == "limit") {
            result = cmd_limit(cfg, seq);
        } else if (c == "continuity") {
            result = cmd_continuity(cfg, fn, at);
        } else if (c == "derivative") {
            result = cmd_derivative(cfg, fn);
        } else if (c == "filters") {
            result = cmd_filters(cfg, space, map);
        } else if (c == "closure topo") {
            result = cmd_closure_topo(cfg, input, set);
        } else if (c == "closure group") {
            result = cmd_closure_group(cfg, input, set);
        } else if (c == "closure sigma") {
            result = cmd_closure_sigma(cfg, input, set);
        } else if (c == "measure extend") {
            result = cmd_measure_extend(cfg, ring, set);
        } else if (c == "measure restrict") {
            result = cmd_measure_restrict(cfg, ring);
        } else if (c == "laws") {
            result = cmd_laws(cfg, suite, instance, cases);
        } else if (c == "fixtures") {
            result = cmd_fixtures(cfg, kind);
        } else {
            throw UsageError("unknown command '" + c + "'");
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const ContractViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }

    // Render fully before writing so output is emitted in one piece.
    std::ostringstream rendered;
    if (cfg.json) {
        rendered << result.doc.dump(2) << "\n";
    } else {
        print_plain(result.doc, rendered);
    }
    out << rendered.str() << std::flush;
    return static_cast<int>(result.code);
}

}  // namespace ordclose
