#include "ordclose/filters_topology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace ordclose {

namespace {

std::vector<Subset> sorted_unique(std::vector<Subset> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_carrier(std::size_t n)
{
    if (n == 0 || n > kMaxCarrier) {
        throw DomainError("carrier size must be between 1 and " + std::to_string(kMaxCarrier));
    }
}

std::string mask_string(Subset s)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 32; ++i) {
        if ((s >> i) & 1U) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
    }
    return out + "}";
}

std::vector<Subset> supersets(std::size_t n, Subset core)
{
    std::vector<Subset> out;
    for (Subset s = 0; s <= full_set(n); ++s) {
        if (subset_of(core, s)) {
            out.push_back(s);
        }
    }
    return out;
}

Subset image(Subset s, const std::vector<std::size_t>& map)
{
    Subset out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if ((s >> i) & 1U) {
            out |= singleton(map[i]);
        }
    }
    return out;
}

Subset preimage(Subset s, const std::vector<std::size_t>& map)
{
    Subset out = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if ((s >> map[i]) & 1U) {
            out |= singleton(i);
        }
    }
    return out;
}

// Families of subsets of an n-point carrier, as bitmasks over the 2^n subsets.
template <class Accept>
std::vector<std::vector<Subset>> enumerate_families(std::size_t n, Accept accept)
{
    if (n == 0 || n > 4) {
        throw DomainError("enumeration is bounded to carriers of 1 to 4 points");
    }
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::vector<Subset>> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        std::vector<Subset> members;
        for (std::size_t s = 0; s < subsets; ++s) {
            if ((fam >> s) & 1U) {
                members.push_back(static_cast<Subset>(s));
            }
        }
        if (accept(members)) {
            out.push_back(std::move(members));
        }
    }
    return out;
}

}  // namespace

LawReport check_topology_axioms(std::size_t n, const std::vector<Subset>& opens)
{
    LawReport report;
    report.suite = "topology axioms";
    const Subset all = full_set(n);
    const auto has = [&](Subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
    ++report.cases;
    if (!std::is_sorted(opens.begin(), opens.end())) {
        report.add_violation("sorted", "opens", "sorted family", "unsorted");
        return report;
    }
    for (Subset s : opens) {
        if (!subset_of(s, all)) {
            report.add_violation("subsets", mask_string(s), "subset of carrier", "outside");
        }
    }
    ++report.cases;
    if (!has(0)) {
        report.add_violation("empty open", "{}", "open", "missing");
    }
    ++report.cases;
    if (!has(all)) {
        report.add_violation("carrier open", mask_string(all), "open", "missing");
    }
    for (Subset a : opens) {
        for (Subset b : opens) {
            report.cases += 2;
            if (!has(a | b)) {
                report.add_violation("union", mask_string(a) + " " + mask_string(b), "open", "missing");
            }
            if (!has(a & b)) {
                report.add_violation("intersection", mask_string(a) + " " + mask_string(b), "open", "missing");
            }
        }
    }
    return report;
}

LawReport check_filter_axioms(std::size_t n, const std::vector<Subset>& sets)
{
    LawReport report;
    report.suite = "filter axioms";
    const Subset all = full_set(n);
    const auto has = [&](Subset s) { return std::binary_search(sets.begin(), sets.end(), s); };
    ++report.cases;
    if (!std::is_sorted(sets.begin(), sets.end())) {
        report.add_violation("sorted", "sets", "sorted family", "unsorted");
        return report;
    }
    ++report.cases;
    if (sets.empty()) {
        report.add_violation("nonempty", "{}", "some member", "none");
    }
    ++report.cases;
    if (has(0)) {
        report.add_violation("proper", "{}", "empty set excluded", "member");
    }
    for (Subset a : sets) {
        if (!subset_of(a, all)) {
            report.add_violation("subsets", mask_string(a), "subset of carrier", "outside");
            continue;
        }
        for (Subset b = 0; b <= all; ++b) {
            if (subset_of(a, b)) {
                ++report.cases;
                if (!has(b)) {
                    report.add_violation("upward closed", mask_string(a) + " " + mask_string(b), "member", "missing");
                }
            }
        }
        for (Subset b : sets) {
            ++report.cases;
            if (!has(a & b)) {
                report.add_violation("intersection", mask_string(a) + " " + mask_string(b), "member", "missing");
            }
        }
    }
    return report;
}

FiniteTopology::FiniteTopology(std::vector<std::string> labels, std::vector<Subset> opens)
    : labels_(std::move(labels)), opens_(sorted_unique(std::move(opens)))
{
    check_carrier(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw DomainError("duplicate carrier point '" + labels_[i] + "'");
            }
        }
    }
    const auto report = check_topology_axioms(labels_.size(), opens_);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw DomainError("not a topology: " + v.law + " fails at " + v.inputs);
    }
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

}  // namespace

FiniteTopology FiniteTopology::discrete(std::size_t n)
{
    check_carrier(n);
    std::vector<Subset> opens;
    for (Subset s = 0; s <= full_set(n); ++s) {
        opens.push_back(s);
    }
    return {numeric_labels(n), std::move(opens)};
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n)
{
    check_carrier(n);
    return {numeric_labels(n), {0, full_set(n)}};
}

FiniteTopology FiniteTopology::sierpinski()
{
    return {numeric_labels(2), {0, singleton(1), full_set(2)}};
}

std::size_t FiniteTopology::index_of(const std::string& label) const
{
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw DomainError("'" + label + "' is not a carrier point");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::string FiniteTopology::show(Subset s) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if ((s >> i) & 1U) {
            out += (first ? "" : ",") + labels_[i];
            first = false;
        }
    }
    return out + "}";
}

bool FiniteTopology::is_open(Subset s) const
{
    return std::binary_search(opens_.begin(), opens_.end(), s);
}

Subset FiniteTopology::minimal_open(std::size_t x) const
{
    if (x >= size()) {
        throw DomainError("point " + std::to_string(x) + " outside the carrier");
    }
    Subset out = carrier();
    for (Subset u : opens_) {
        if ((u >> x) & 1U) {
            out &= u;
        }
    }
    return out;
}

Subset FiniteTopology::closure(Subset s) const
{
    Subset out = carrier();
    for (Subset u : opens_) {
        const Subset closed = carrier() & ~u;
        if (subset_of(s, closed)) {
            out &= closed;
        }
    }
    return out;
}

FiniteFilter::FiniteFilter(std::size_t n, std::vector<Subset> sets) : n_(n), sets_(sorted_unique(std::move(sets)))
{
    check_carrier(n);
    const auto report = check_filter_axioms(n, sets_);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw DomainError("not a proper filter: " + v.law + " fails at " + v.inputs);
    }
}

FiniteFilter FiniteFilter::principal(std::size_t n, Subset core)
{
    check_carrier(n);
    if (core == 0 || !subset_of(core, full_set(n))) {
        throw DomainError("principal filter needs a nonempty core inside the carrier");
    }
    return {n, supersets(n, core)};
}

FiniteFilter FiniteFilter::generated_by(std::size_t n, const std::vector<Subset>& base)
{
    check_carrier(n);
    Subset core = full_set(n);
    for (Subset s : base) {
        core &= s;
    }
    if (core == 0) {
        throw DomainError("generating family has empty finite intersections");
    }
    return principal(n, core);
}

bool FiniteFilter::contains(Subset s) const
{
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

Subset FiniteFilter::core() const
{
    Subset out = full_set(n_);
    for (Subset s : sets_) {
        out &= s;
    }
    return out;
}

bool filter_leq(const FiniteFilter& f, const FiniteFilter& g)
{
    return std::includes(g.sets().begin(), g.sets().end(), f.sets().begin(), f.sets().end());
}

PreorderRel<FiniteFilter> filter_inclusion()
{
    return {"filter inclusion", filter_leq};
}

PreorderRel<Subset> reverse_inclusion()
{
    return {"reverse inclusion", [](Subset a, Subset b) { return subset_of(b, a); }};
}

FiniteFilter neighborhood_filter(const FiniteTopology& top, std::size_t x)
{
    return FiniteFilter::principal(top.size(), top.minimal_open(x));
}

Subset convergence_points(const FiniteTopology& top, const FiniteFilter& f)
{
    if (f.carrier_size() != top.size()) {
        throw DomainError("filter and topology live on different carriers");
    }
    Subset out = 0;
    for (std::size_t x = 0; x < top.size(); ++x) {
        if (filter_leq(neighborhood_filter(top, x), f)) {
            out |= singleton(x);
        }
    }
    return out;
}

Subset limit_set(const FiniteTopology& top, const FiniteFilter& f)
{
    if (convergence_points(top, f) == 0) {
        throw NotConvergent("filter refines no neighbourhood filter");
    }
    Subset out = top.carrier();
    for (Subset s : f.sets()) {
        out &= top.closure(s);
    }
    return out;
}

std::vector<FiniteFilter> enumerate_filters(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<FiniteFilter>> cache;
    const std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    std::vector<FiniteFilter> out;
    const auto families =
        enumerate_families(n, [n](const std::vector<Subset>& s) { return check_filter_axioms(n, s).ok(); });
    for (const auto& fam : families) {
        out.emplace_back(n, fam);
    }
    cache[n] = out;
    return out;
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n)
{
    const Subset all = full_set(n);
    const auto families = enumerate_families(n, [n, all](const std::vector<Subset>& s) {
        return !s.empty() && s.front() == 0 && s.back() == all && check_topology_axioms(n, s).ok();
    });
    std::vector<FiniteTopology> out;
    for (const auto& fam : families) {
        out.emplace_back(numeric_labels(n), fam);
    }
    return out;
}

FilterCensus filter_census(const FiniteTopology& top)
{
    const auto filters = enumerate_filters(top.size());
    std::vector<char> convergent;
    FilterCensus census;
    census.filters = filters.size();
    for (const auto& f : filters) {
        convergent.push_back(convergence_points(top, f) != 0 ? 1 : 0);
        census.convergent += convergent.back();
    }
    for (const auto& f : filters) {
        bool below = false;
        bool above = false;
        for (std::size_t j = 0; j < filters.size(); ++j) {
            if (convergent[j] != 0) {
                below = below || filter_leq(filters[j], f);
                above = above || filter_leq(f, filters[j]);
            }
        }
        census.k_bounded += (below && above) ? 1 : 0;
    }
    return census;
}

LawReport kbounded_closure_check(const FiniteTopology& top)
{
    if (top.size() > 4) {
        throw DomainError("filter enumeration is bounded to 4 points");
    }
    LawReport report;
    report.suite = "kbounded closure";
    const auto filters = enumerate_filters(top.size());
    std::vector<char> convergent;
    for (const auto& f : filters) {
        convergent.push_back(convergence_points(top, f) != 0 ? 1 : 0);
    }
    const auto order = reverse_inclusion();
    for (std::size_t i = 0; i < filters.size(); ++i) {
        bool below = false;
        bool above = false;
        for (std::size_t j = 0; j < filters.size(); ++j) {
            if (convergent[j] != 0) {
                below = below || filter_leq(filters[j], filters[i]);
                above = above || filter_leq(filters[i], filters[j]);
            }
        }
        const std::string who = mask_string(filters[i].core());
        if (below && above) {
            ++report.cases;
            if (convergent[i] == 0) {
                report.add_violation("K-bounded in K", "filter with core " + who, "convergent", "not convergent");
            }
        }
        if (convergent[i] == 0) {
            continue;
        }
        const Subset li = limit_set(top, filters[i]);
        for (std::size_t j = 0; j < filters.size(); ++j) {
            if (convergent[j] == 0 || !filter_leq(filters[i], filters[j])) {
                continue;
            }
            ++report.cases;
            const Subset lj = limit_set(top, filters[j]);
            if (!order.leq(li, lj)) {
                report.add_violation("antitone limit set", who + " <= " + mask_string(filters[j].core()),
                                     mask_string(li) + " contains " + mask_string(lj), "not contained");
            }
        }
    }
    return report;
}

FiniteFilter pushforward(const FiniteFilter& f, const std::vector<std::size_t>& map, std::size_t target_size)
{
    std::vector<Subset> base;
    for (Subset s : f.sets()) {
        base.push_back(image(s, map));
    }
    return FiniteFilter::generated_by(target_size, base);
}

namespace {

void check_map(const FiniteTopology& x, const FiniteTopology& y, const std::vector<std::size_t>& map)
{
    if (map.size() != x.size()) {
        throw DomainError("map must assign an image to every point");
    }
    for (std::size_t v : map) {
        if (v >= y.size()) {
            throw DomainError("map leaves the target carrier");
        }
    }
}

}  // namespace

std::vector<PointContinuity> filter_continuity(const FiniteTopology& x, const FiniteTopology& y,
                                               const std::vector<std::size_t>& map)
{
    check_map(x, y, map);
    std::vector<PointContinuity> out;
    for (std::size_t p = 0; p < x.size(); ++p) {
        PointContinuity pc;
        pc.point = p;
        pc.by_filters = filter_leq(neighborhood_filter(y, map[p]), pushforward(neighborhood_filter(x, p), map, y.size()));
        pc.by_preimages = true;
        for (Subset v : y.opens()) {
            if (((v >> map[p]) & 1U) == 0) {
                continue;
            }
            bool found = false;
            for (Subset u : x.opens()) {
                if (((u >> p) & 1U) != 0 && subset_of(image(u, map), v)) {
                    found = true;
                    break;
                }
            }
            pc.by_preimages = pc.by_preimages && found;
        }
        out.push_back(pc);
    }
    return out;
}

bool globally_continuous(const FiniteTopology& x, const FiniteTopology& y, const std::vector<std::size_t>& map)
{
    check_map(x, y, map);
    return std::all_of(y.opens().begin(), y.opens().end(),
                       [&](Subset v) { return x.is_open(preimage(v, map)); });
}

LawReport continuity_cross_check(std::size_t max_size)
{
    LawReport report;
    report.suite = "filter continuity cross-check";
    for (std::size_t n = 1; n <= max_size; ++n) {
        const auto xs = enumerate_topologies(n);
        for (std::size_t m = 1; m <= max_size; ++m) {
            const auto ys = enumerate_topologies(m);
            std::size_t maps = 1;
            for (std::size_t i = 0; i < n; ++i) {
                maps *= m;
            }
            for (std::size_t xi = 0; xi < xs.size(); ++xi) {
                for (std::size_t yi = 0; yi < ys.size(); ++yi) {
                    for (std::size_t code = 0; code < maps; ++code) {
                        std::vector<std::size_t> map(n);
                        std::size_t c = code;
                        for (auto& v : map) {
                            v = c % m;
                            c /= m;
                        }
                        const auto points = filter_continuity(xs[xi], ys[yi], map);
                        bool everywhere = true;
                        std::string who = std::to_string(n) + "->" + std::to_string(m) + " top#" + std::to_string(xi) +
                                          "->top#" + std::to_string(yi) + " map#" + std::to_string(code);
                        for (const auto& pc : points) {
                            ++report.cases;
                            if (pc.by_filters != pc.by_preimages) {
                                report.add_violation("pointwise agreement", who + " at " + std::to_string(pc.point),
                                                     pc.by_preimages ? "continuous" : "discontinuous",
                                                     pc.by_filters ? "continuous" : "discontinuous");
                            }
                            everywhere = everywhere && pc.by_filters;
                        }
                        ++report.cases;
                        if (everywhere != globally_continuous(xs[xi], ys[yi], map)) {
                            report.add_violation("global agreement", who, "same verdict", "differs");
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace ordclose
