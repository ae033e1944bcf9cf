#include "ordclose/closure_systems.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>

#include "ordclose/random.hpp"

namespace ordclose {

namespace {

constexpr std::size_t kBruteForceCarrier = 20;
constexpr std::size_t kEnumeratedGroup = 16;
constexpr std::size_t kMaxOmega = 5;

bool contained(ElementSet a, ElementSet b)
{
    return (a & ~b) == 0;
}

ElementSet bit(std::size_t i)
{
    return ElementSet{1} << i;
}

std::vector<std::string> one_based_labels(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

// Every closed set, by the enumeration or by brute force on small carriers.
std::optional<std::vector<ElementSet>> all_closed(const ClosureSystem& system)
{
    if (system.closed_sets) {
        return system.closed_sets();
    }
    if (system.size <= kBruteForceCarrier && system.is_closed) {
        std::vector<ElementSet> out;
        for (ElementSet s = 0; s <= system.top(); ++s) {
            if (system.is_closed(s)) {
                out.push_back(s);
            }
        }
        return out;
    }
    return std::nullopt;
}

std::string family_string(const std::vector<Subset>& family, const std::function<std::string(Subset)>& show)
{
    std::string out = "[";
    for (std::size_t i = 0; i < family.size(); ++i) {
        out += (i == 0 ? "" : ",") + show(family[i]);
    }
    return out + "]";
}

}  // namespace

ElementSet ClosureSystem::top() const
{
    return size >= 64 ? ~ElementSet{0} : bit(size) - 1;
}

std::string ClosureSystem::show(ElementSet s) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < size; ++i) {
        if ((s >> i) & 1U) {
            out += (first ? "" : ",") + (i < labels.size() ? labels[i] : std::to_string(i));
            first = false;
        }
    }
    return out + "}";
}

ElementSet ClosureSystem::parse(const std::vector<std::string>& members) const
{
    ElementSet out = 0;
    for (const auto& m : members) {
        const auto it = std::find(labels.begin(), labels.end(), m);
        if (it == labels.end()) {
            throw DomainError("'" + m + "' is not an element of " + name);
        }
        out |= bit(static_cast<std::size_t>(it - labels.begin()));
    }
    return out;
}

ClosureResult l_closure(ElementSet k, const ClosureSystem& system)
{
    if (!contained(k, system.top())) {
        throw DomainError("set outside the carrier of " + system.name);
    }
    ClosureResult result;
    if (const auto closed = all_closed(system)) {
        ElementSet acc = system.top();
        bool bounded = false;
        for (ElementSet c : *closed) {
            if (contained(k, c)) {
                acc &= c;
                bounded = true;
            }
        }
        if (!bounded) {
            throw NotBoundedAbove("no closed superset of " + system.show(k) + " in " + system.name);
        }
        result.by_intersection = acc;
    }
    if (system.close_step) {
        ElementSet s = k;
        while (true) {
            const ElementSet t = s | system.close_step(s);
            if (t == s) {
                break;
            }
            s = t;
        }
        if (!system.is_closed(s)) {
            throw ContractViolation(system.name + ": rules stop at a set that is not closed");
        }
        result.by_fixpoint = s;
    }
    if (!result.by_intersection && !result.by_fixpoint) {
        throw ContractViolation(system.name + ": neither an enumeration nor rules to compute closures");
    }
    if (result.by_intersection && result.by_fixpoint && *result.by_intersection != *result.by_fixpoint) {
        throw ContractViolation(system.name + ": intersection " + system.show(*result.by_intersection) +
                                " and fixpoint " + system.show(*result.by_fixpoint) + " disagree");
    }
    result.closure = result.by_intersection ? *result.by_intersection : *result.by_fixpoint;
    return result;
}

LawReport check_closure_system(const ClosureSystem& system)
{
    LawReport report;
    report.suite = "closure system:" + system.name;
    ++report.cases;
    if (!system.is_closed(system.top())) {
        report.add_violation("top closed", system.show(system.top()), "closed", "not closed");
    }
    const auto closed = all_closed(system);
    if (!closed) {
        return report;
    }
    for (ElementSet c : *closed) {
        ++report.cases;
        if (!system.is_closed(c)) {
            report.add_violation("enumeration", system.show(c), "closed", "not closed");
        }
    }
    for (ElementSet a : *closed) {
        for (ElementSet b : *closed) {
            ++report.cases;
            if (!system.is_closed(a & b)) {
                report.add_violation("intersection", system.show(a) + " " + system.show(b), "closed", "not closed");
            }
        }
    }
    return report;
}

LawReport closure_operator_laws(const ClosureSystem& system, std::size_t samples, std::uint64_t seed)
{
    LawReport report;
    report.suite = "closure operator:" + system.name;
    report.seed = seed;
    std::vector<ElementSet> sets;
    if (system.size <= 10) {
        for (ElementSet s = 0; s <= system.top(); ++s) {
            sets.push_back(s);
        }
    } else {
        SeededRng rng(seed);
        for (std::size_t i = 0; i < samples; ++i) {
            ElementSet s = 0;
            const long picks = rng.integer(0, 3);
            for (long j = 0; j < picks; ++j) {
                s |= bit(rng.index(system.size));
            }
            sets.push_back(s);
        }
    }
    std::vector<ElementSet> closures;
    for (ElementSet s : sets) {
        ++report.cases;
        try {
            closures.push_back(l_closure(s, system).closure);
        } catch (const ContractViolation& e) {
            report.add_violation("methods agree", system.show(s), "one closure", e.what());
            closures.push_back(system.top());
            continue;
        }
        const ElementSet c = closures.back();
        if (!contained(s, c)) {
            report.add_violation("extensive", system.show(s), "K within cl K", system.show(c));
        }
        if (l_closure(c, system).closure != c) {
            report.add_violation("idempotent", system.show(s), system.show(c), "cl cl K differs");
        }
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i != j && contained(sets[i], sets[j])) {
                ++report.cases;
                if (!contained(closures[i], closures[j])) {
                    report.add_violation("isotone", system.show(sets[i]) + " within " + system.show(sets[j]),
                                         "cl within cl", system.show(closures[i]) + " vs " + system.show(closures[j]));
                }
            }
        }
    }
    return report;
}

ClosureSystem topological_system(const FiniteTopology& top)
{
    ClosureSystem system;
    system.name = "topology";
    system.size = top.size();
    system.labels = top.labels();
    const ElementSet carrier = top.carrier();
    std::vector<ElementSet> closed;
    for (Subset u : top.opens()) {
        closed.push_back(carrier & ~ElementSet{u});
    }
    std::sort(closed.begin(), closed.end());
    system.is_closed = [closed](ElementSet s) { return std::binary_search(closed.begin(), closed.end(), s); };
    system.closed_sets = [closed] { return closed; };
    // Adherent points: x whose smallest open neighbourhood meets K.
    system.close_step = [top](ElementSet s) {
        ElementSet out = 0;
        for (std::size_t x = 0; x < top.size(); ++x) {
            if ((top.minimal_open(x) & s) != 0) {
                out |= bit(x);
            }
        }
        return out;
    };
    return system;
}

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(labels)), table_(std::move(table))
{
    const std::size_t n = labels_.size();
    if (n == 0 || n > kMaxClosureCarrier) {
        throw DomainError("groups need between 1 and " + std::to_string(kMaxClosureCarrier) + " elements");
    }
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
        throw DomainError("group element labels must be distinct");
    }
    if (table_.size() != n) {
        throw DomainError("operation table must be n x n");
    }
    for (const auto& row : table_) {
        if (row.size() != n || std::any_of(row.begin(), row.end(), [n](std::size_t v) { return v >= n; })) {
            throw DomainError("operation table must be n x n with entries below n");
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    throw DomainError("operation is not associative at (" + labels_[a] + "," + labels_[b] + "," +
                                      labels_[c] + ")");
                }
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = table_[e][a] == a && table_[a][e] == a;
        }
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) {
        throw DomainError("operation has no identity");
    }
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == n) {
            throw DomainError("element " + labels_[a] + " has no inverse");
        }
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
            table[a][b] = (a + b) % n;
        }
    }
    return {std::move(labels), std::move(table)};
}

std::string cycle_notation(const std::vector<std::size_t>& images)
{
    const bool wide = images.size() > 9;
    std::vector<char> seen(images.size(), 0);
    std::string out;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start] != 0 || images[start] == start) {
            continue;
        }
        out += "(";
        std::size_t x = start;
        bool first = true;
        while (seen[x] == 0) {
            seen[x] = 1;
            out += (wide && !first ? " " : "") + std::to_string(x + 1);
            first = false;
            x = images[x];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<std::vector<std::size_t>>& generators)
{
    if (degree == 0 || degree > 8) {
        throw DomainError("permutation degree must be between 1 and 8");
    }
    using Perm = std::vector<std::size_t>;
    std::vector<Perm> gens;
    for (const auto& g : generators) {
        if (g.size() != degree) {
            throw DomainError("generator has the wrong degree");
        }
        Perm p;
        std::vector<char> hit(degree, 0);
        for (std::size_t v : g) {
            if (v < 1 || v > degree || hit[v - 1] != 0) {
                throw DomainError("generator is not a permutation of 1.." + std::to_string(degree));
            }
            hit[v - 1] = 1;
            p.push_back(v - 1);
        }
        gens.push_back(std::move(p));
    }
    const auto compose = [degree](const Perm& a, const Perm& b) {
        Perm out(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            out[x] = a[b[x]];
        }
        return out;
    };
    Perm identity(degree);
    for (std::size_t x = 0; x < degree; ++x) {
        identity[x] = x;
    }
    std::vector<Perm> elements{identity};
    std::set<Perm> known{identity};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Perm next = compose(g, elements[i]);
            if (known.insert(next).second) {
                elements.push_back(std::move(next));
                if (elements.size() > kMaxClosureCarrier) {
                    throw DomainError("generated group exceeds " + std::to_string(kMaxClosureCarrier) + " elements");
                }
            }
        }
    }
    std::sort(elements.begin(), elements.end(), [](const Perm& a, const Perm& b) {
        const auto moved = [](const Perm& p) {
            std::size_t m = 0;
            for (std::size_t x = 0; x < p.size(); ++x) {
                m += p[x] != x ? 1 : 0;
            }
            return m;
        };
        return std::pair(moved(a), cycle_notation(a)) < std::pair(moved(b), cycle_notation(b));
    });
    const std::size_t n = elements.size();
    std::vector<std::string> labels;
    for (const auto& e : elements) {
        labels.push_back(cycle_notation(e));
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const auto c = compose(elements[a], elements[b]);
            table[a][b] = static_cast<std::size_t>(std::find(elements.begin(), elements.end(), c) - elements.begin());
        }
    }
    return {std::move(labels), std::move(table)};
}

FiniteGroup FiniteGroup::symmetric(std::size_t degree)
{
    std::vector<std::vector<std::size_t>> gens;
    if (degree >= 2) {
        std::vector<std::size_t> swap(degree);
        std::vector<std::size_t> cycle(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            swap[x] = x + 1;
            cycle[x] = (x + 1) % degree + 1;
        }
        std::swap(swap[0], swap[1]);
        gens = {swap, cycle};
    }
    return from_permutations(degree, gens);
}

bool FiniteGroup::is_subgroup(ElementSet s) const
{
    if (((s >> identity_) & 1U) == 0) {
        return false;
    }
    for (std::size_t a = 0; a < size(); ++a) {
        if (((s >> a) & 1U) == 0) {
            continue;
        }
        if (((s >> inverse_[a]) & 1U) == 0) {
            return false;
        }
        for (std::size_t b = 0; b < size(); ++b) {
            if (((s >> b) & 1U) != 0 && ((s >> table_[a][b]) & 1U) == 0) {
                return false;
            }
        }
    }
    return true;
}

ClosureSystem subgroup_system(const FiniteGroup& group)
{
    ClosureSystem system;
    system.name = "subgroups";
    system.size = group.size();
    system.labels = group.labels();
    system.is_closed = [group](ElementSet s) { return group.is_subgroup(s); };
    if (group.size() <= kEnumeratedGroup) {
        auto closed = std::make_shared<std::vector<ElementSet>>();
        for (ElementSet s = 0; s <= system.top(); ++s) {
            if (group.is_subgroup(s)) {
                closed->push_back(s);
            }
        }
        system.closed_sets = [closed] { return *closed; };
    }
    system.close_step = [group](ElementSet s) {
        ElementSet out = bit(group.identity());
        for (std::size_t a = 0; a < group.size(); ++a) {
            if (((s >> a) & 1U) == 0) {
                continue;
            }
            out |= bit(group.inverse(a));
            for (std::size_t b = 0; b < group.size(); ++b) {
                if (((s >> b) & 1U) != 0) {
                    out |= bit(group.op(a, b));
                }
            }
        }
        return out;
    };
    return system;
}

namespace {

// Set partitions of {0..n-1} as lists of blocks.
void partitions(std::size_t n, std::size_t i, std::vector<Subset>& blocks, std::vector<std::vector<Subset>>& out)
{
    if (i == n) {
        out.push_back(blocks);
        return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        blocks[j] |= singleton(i);
        partitions(n, i + 1, blocks, out);
        blocks[j] &= ~singleton(i);
    }
    blocks.push_back(singleton(i));
    partitions(n, i + 1, blocks, out);
    blocks.pop_back();
}

}  // namespace

ClosureSystem sigma_system(std::size_t n, std::vector<std::string> omega_labels)
{
    if (n == 0 || n > kMaxOmega) {
        throw DomainError("sigma-algebra systems need 1 to 5 points");
    }
    if (omega_labels.empty()) {
        omega_labels = one_based_labels(n);
    }
    if (omega_labels.size() != n) {
        throw DomainError("one label per point required");
    }
    const Subset omega = full_set(n);
    ClosureSystem system;
    system.name = "sigma-algebras";
    system.size = std::size_t{1} << n;
    for (Subset s = 0; s <= omega; ++s) {
        std::string label = "{";
        bool first = true;
        for (std::size_t x = 0; x < n; ++x) {
            if ((s >> x) & 1U) {
                label += (first ? "" : ",") + omega_labels[x];
                first = false;
            }
        }
        system.labels.push_back(label + "}");
    }
    system.is_closed = [omega](ElementSet fam) {
        if (((fam >> omega) & 1U) == 0) {
            return false;
        }
        for (Subset a = 0; a <= omega; ++a) {
            if (((fam >> a) & 1U) == 0) {
                continue;
            }
            if (((fam >> (omega & ~a)) & 1U) == 0) {
                return false;
            }
            for (Subset b = 0; b <= omega; ++b) {
                if (((fam >> b) & 1U) != 0 && ((fam >> (a | b)) & 1U) == 0) {
                    return false;
                }
            }
        }
        return true;
    };
    // Each sigma-algebra on a finite set is the unions of a partition's blocks.
    auto closed = std::make_shared<std::vector<ElementSet>>();
    std::vector<std::vector<Subset>> parts;
    std::vector<Subset> blocks;
    partitions(n, 0, blocks, parts);
    for (const auto& p : parts) {
        ElementSet fam = 0;
        for (std::size_t pick = 0; pick < (std::size_t{1} << p.size()); ++pick) {
            Subset u = 0;
            for (std::size_t j = 0; j < p.size(); ++j) {
                if ((pick >> j) & 1U) {
                    u |= p[j];
                }
            }
            fam |= bit(u);
        }
        closed->push_back(fam);
    }
    std::sort(closed->begin(), closed->end());
    system.closed_sets = [closed] { return *closed; };
    system.close_step = [omega](ElementSet fam) {
        ElementSet out = bit(0) | bit(omega);
        for (Subset a = 0; a <= omega; ++a) {
            if (((fam >> a) & 1U) == 0) {
                continue;
            }
            out |= bit(omega & ~a);
            for (Subset b = 0; b <= omega; ++b) {
                if ((fam >> b) & 1U) {
                    out |= bit(a | b);
                }
            }
        }
        return out;
    };
    return system;
}

OneSidedProblem<ElementSet, ElementSet> closure_problem(const ClosureSystem& system)
{
    OneSidedProblem<ElementSet, ElementSet> p;
    p.name = "closure:" + system.name;
    p.order = {"inclusion", contained};
    p.values.rel = p.order;
    p.values.meet = [](ElementSet a, ElementSet b) -> std::optional<ElementSet> { return a & b; };
    p.values.join = [](ElementSet a, ElementSet b) -> std::optional<ElementSet> { return a | b; };
    p.in_kernel = system.is_closed;
    p.phi = [](ElementSet b) { return b; };
    auto closed = all_closed(system);
    if (closed) {
        auto shared = std::make_shared<std::vector<ElementSet>>(std::move(*closed));
        p.upper_candidates = [shared](ElementSet) { return *shared; };
    } else {
        p.upper_candidates = [system](ElementSet f) {
            return std::vector<ElementSet>{l_closure(f, system).closure, system.top()};
        };
    }
    return p;
}

LawReport one_sided_laws(const ClosureSystem& system, std::size_t samples, std::uint64_t seed)
{
    LawReport report;
    report.suite = "one-sided extension:" + system.name;
    report.seed = seed;
    const auto problem = closure_problem(system);
    if (const auto closed = all_closed(system)) {
        for (ElementSet c : *closed) {
            ++report.cases;
            if (one_sided_extend(problem, c) != c) {
                report.add_violation("continuation", system.show(c), system.show(c),
                                     system.show(one_sided_extend(problem, c)));
            }
        }
    }
    SeededRng rng(seed);
    const auto random_set = [&] {
        ElementSet s = 0;
        const long picks = rng.integer(0, 3);
        for (long j = 0; j < picks; ++j) {
            s |= bit(rng.index(system.size));
        }
        return s;
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const ElementSet a = random_set();
        const ElementSet b = a | random_set();
        const ElementSet ea = one_sided_extend(problem, a);
        const ElementSet eb = one_sided_extend(problem, b);
        report.cases += 2;
        if (!contained(ea, eb)) {
            report.add_violation("isotone", system.show(a) + " within " + system.show(b), "extension within",
                                 system.show(ea) + " vs " + system.show(eb));
        }
        if (ea != l_closure(a, system).closure) {
            report.add_violation("agrees with closure", system.show(a), system.show(l_closure(a, system).closure),
                                 system.show(ea));
        }
    }
    return report;
}

LawReport check_ring_axioms(std::size_t omega, const std::vector<Subset>& members)
{
    LawReport report;
    report.suite = "ring axioms";
    const Subset all = full_set(omega);
    const auto has = [&](Subset s) { return std::find(members.begin(), members.end(), s) != members.end(); };
    ++report.cases;
    if (!has(0)) {
        report.add_violation("empty set", "{}", "member", "missing");
    }
    for (Subset a : members) {
        if (!subset_of(a, all)) {
            report.add_violation("subsets", std::to_string(a), "subset of Omega", "outside");
        }
        for (Subset b : members) {
            report.cases += 2;
            if (!has(a | b)) {
                report.add_violation("union", std::to_string(a) + " " + std::to_string(b), "member", "missing");
            }
            if (!has(a & ~b)) {
                report.add_violation("difference", std::to_string(a) + " " + std::to_string(b), "member", "missing");
            }
        }
    }
    return report;
}

SetRing::SetRing(std::size_t omega, std::vector<Subset> members, std::vector<std::string> labels)
    : omega_(omega), members_(std::move(members)), labels_(std::move(labels))
{
    if (omega == 0 || omega > kMaxOmega) {
        throw DomainError("rings need 1 to 5 points");
    }
    if (labels_.empty()) {
        labels_ = one_based_labels(omega);
    }
    if (labels_.size() != omega) {
        throw DomainError("one label per point required");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    const auto report = check_ring_axioms(omega, members_);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw DomainError("not a ring of sets: " + v.law + " fails at " + v.inputs);
    }
}

bool SetRing::contains(Subset s) const
{
    return std::binary_search(members_.begin(), members_.end(), s);
}

Subset SetRing::cover() const
{
    Subset out = 0;
    for (Subset s : members_) {
        out |= s;
    }
    return out;
}

std::string SetRing::show(Subset s) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t x = 0; x < omega_; ++x) {
        if ((s >> x) & 1U) {
            out += (first ? "" : ",") + labels_[x];
            first = false;
        }
    }
    return out + "}";
}

PreMeasure::PreMeasure(SetRing ring, std::map<Subset, ExtRational> values) : PreMeasure(std::move(ring), std::move(values), true)
{
}

PreMeasure PreMeasure::unchecked(SetRing ring, std::map<Subset, ExtRational> values)
{
    return {std::move(ring), std::move(values), false};
}

PreMeasure::PreMeasure(SetRing ring, std::map<Subset, ExtRational> values, bool check)
    : ring_(std::move(ring)), values_(std::move(values))
{
    values_.try_emplace(0, ExtRational(0));
    for (const auto& [s, v] : values_) {
        if (!ring_.contains(s)) {
            throw DomainError("pre-measure value on " + ring_.show(s) + ", which is not a ring member");
        }
        if (v.is_finite() && v.value().sign() < 0) {
            throw DomainError("pre-measure value on " + ring_.show(s) + " is negative");
        }
    }
    for (Subset s : ring_.members()) {
        if (!values_.contains(s)) {
            throw DomainError("pre-measure has no value on " + ring_.show(s));
        }
    }
    if (values_.at(0) != ExtRational(0)) {
        throw DomainError("pre-measure of the empty set must be 0");
    }
    if (!check) {
        return;
    }
    for (Subset a : ring_.members()) {
        for (Subset b : ring_.members()) {
            if ((a & b) == 0 && values_.at(a | b) != values_.at(a) + values_.at(b)) {
                throw DomainError("pre-measure is not additive on " + ring_.show(a) + " and " + ring_.show(b));
            }
        }
    }
}

const ExtRational& PreMeasure::operator()(Subset s) const
{
    const auto it = values_.find(s);
    if (it == values_.end()) {
        throw DomainError("pre-measure evaluated off the ring at " + ring_.show(s));
    }
    return it->second;
}

std::vector<std::vector<Subset>> disjoint_ring_families(const SetRing& ring)
{
    std::vector<Subset> pieces;
    for (Subset s : ring.members()) {
        if (s != 0) {
            pieces.push_back(s);
        }
    }
    std::vector<std::vector<Subset>> out;
    std::vector<Subset> current;
    const std::function<void(std::size_t, Subset)> walk = [&](std::size_t from, Subset used) {
        out.push_back(current);
        for (std::size_t i = from; i < pieces.size(); ++i) {
            if ((pieces[i] & used) == 0) {
                current.push_back(pieces[i]);
                walk(i + 1, used | pieces[i]);
                current.pop_back();
            }
        }
    };
    walk(0, 0);
    return out;
}

namespace {

Subset union_of(const std::vector<Subset>& family)
{
    Subset out = 0;
    for (Subset s : family) {
        out |= s;
    }
    return out;
}

ExtRational family_mass(const PreMeasure& pre, const std::vector<Subset>& family)
{
    ExtRational total(0);
    for (Subset s : family) {
        total = total + pre(s);
    }
    return total;
}

}  // namespace

OneSidedProblem<std::vector<Subset>, ExtRational> premeasure_problem(const PreMeasure& pre)
{
    using Family = std::vector<Subset>;
    OneSidedProblem<Family, ExtRational> p;
    p.name = "outer measure";
    p.order = {"union containment", [](const Family& f, const Family& g) { return subset_of(union_of(f), union_of(g)); }};
    p.values = ext_rational_order();
    p.in_kernel = [ring = pre.ring()](const Family& f) {
        Subset used = 0;
        for (Subset s : f) {
            if (!ring.contains(s) || (s & used) != 0) {
                return false;
            }
            used |= s;
        }
        return true;
    };
    p.phi = [pre](const Family& f) { return family_mass(pre, f); };
    auto families = std::make_shared<std::vector<Family>>(disjoint_ring_families(pre.ring()));
    p.upper_candidates = [families](const Family&) { return *families; };
    return p;
}

ExtRational outer_measure(const PreMeasure& pre, Subset s)
{
    const Subset omega = full_set(pre.ring().omega());
    if (pre.ring().cover() != omega) {
        throw NoCover("ring members do not cover Omega; missing " + pre.ring().show(omega & ~pre.ring().cover()));
    }
    if (!subset_of(s, omega)) {
        throw DomainError("set outside Omega");
    }
    return one_sided_extend(premeasure_problem(pre), std::vector<Subset>{s});
}

LawReport outer_measure_laws(const PreMeasure& pre)
{
    LawReport report;
    report.suite = "outer measure";
    const Subset omega = full_set(pre.ring().omega());
    std::vector<ExtRational> mu;
    for (Subset s = 0; s <= omega; ++s) {
        mu.push_back(outer_measure(pre, s));
    }
    const auto& ring = pre.ring();
    ++report.cases;
    if (mu[0] != ExtRational(0)) {
        report.add_violation("null", "{}", "0", mu[0].to_string());
    }
    for (Subset s = 0; s <= omega; ++s) {
        if (ring.contains(s)) {
            ++report.cases;
            if (mu[s] != pre(s)) {
                report.add_violation("continuation", ring.show(s), pre(s).to_string(), mu[s].to_string());
            }
        }
        for (Subset t = 0; t <= omega; ++t) {
            report.cases += 2;
            if (subset_of(s, t) && mu[t] < mu[s]) {
                report.add_violation("monotone", ring.show(s) + " within " + ring.show(t), "<=",
                                     mu[s].to_string() + " > " + mu[t].to_string());
            }
            if (mu[s] + mu[t] < mu[s | t]) {
                report.add_violation("subadditive", ring.show(s) + " " + ring.show(t),
                                     "<= " + (mu[s] + mu[t]).to_string(), mu[s | t].to_string());
            }
        }
    }
    return report;
}

LawReport premeasure_isotonicity(const PreMeasure& pre)
{
    LawReport report;
    report.suite = "pre-measure isotonicity";
    const auto families = disjoint_ring_families(pre.ring());
    const auto show = [&](Subset s) { return pre.ring().show(s); };
    for (const auto& f : families) {
        for (const auto& g : families) {
            if (!subset_of(union_of(f), union_of(g))) {
                continue;
            }
            ++report.cases;
            if (family_mass(pre, g) < family_mass(pre, f)) {
                report.add_violation("isotone", family_string(f, show) + " <= " + family_string(g, show),
                                     "sum mu(f) <= sum mu(g)",
                                     family_mass(pre, f).to_string() + " > " + family_mass(pre, g).to_string());
            }
        }
    }
    return report;
}

RestrictedMeasure caratheodory_restrict(const PreMeasure& pre)
{
    const std::size_t n = pre.ring().omega();
    const auto system = sigma_system(n, pre.ring().labels());
    ElementSet generators = 0;
    for (Subset s : pre.ring().members()) {
        generators |= bit(s);
    }
    const ElementSet sigma = l_closure(generators, system).closure;
    RestrictedMeasure out;
    for (Subset s = 0; s <= full_set(n); ++s) {
        if ((sigma >> s) & 1U) {
            out.sigma_algebra.push_back(s);
            out.measure.emplace(s, outer_measure(pre, s));
        }
    }
    for (Subset a : out.sigma_algebra) {
        for (Subset b : out.sigma_algebra) {
            if ((a & b) == 0 && out.measure.at(a | b) != out.measure.at(a) + out.measure.at(b)) {
                throw AdditivityViolation("mu* is not additive on " + pre.ring().show(a) + " and " + pre.ring().show(b),
                                          a, b);
            }
        }
    }
    return out;
}

}  // namespace ordclose
