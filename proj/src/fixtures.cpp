#include "ordclose/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace ordclose {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

// Splits a sum at top-level '+', leaving exponent signs ("1e+3") alone.
std::vector<std::string> split_terms(std::string_view expr)
{
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < expr.size(); ++i) {
        const char c = expr[i];
        if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            --depth;
        } else if (c == '+' && depth == 0) {
            const bool exponent_sign = i >= 2 && (expr[i - 1] == 'e' || expr[i - 1] == 'E') &&
                                       (std::isdigit(static_cast<unsigned char>(expr[i - 2])) != 0 || expr[i - 2] == '.');
            if (!exponent_sign) {
                out.push_back(trim(expr.substr(start, i - start)));
                start = i + 1;
            }
        }
    }
    out.push_back(trim(expr.substr(start)));
    return out;
}

Rational parse_rational(std::string_view text, const std::string& where)
{
    try {
        return Rational::parse(trim(text));
    } catch (const ParseError& e) {
        throw InputError(where, e.what());
    }
}

std::optional<Rational> try_rational(std::string_view text)
{
    try {
        return Rational::parse(trim(text));
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

std::vector<Rational> parse_rational_list(std::string_view text, const std::string& where)
{
    std::vector<Rational> out;
    const auto items = split(text, ',');
    for (std::size_t i = 0; i < items.size(); ++i) {
        out.push_back(parse_rational(items[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

// "head:rest" -> (head, rest); rest empty when there is no ':'.
std::pair<std::string, std::string> split_head(std::string_view name)
{
    const auto colon = name.find(':');
    if (colon == std::string_view::npos) {
        return {std::string(name), ""};
    }
    return {std::string(name.substr(0, colon)), std::string(name.substr(colon + 1))};
}

// Sum of "[coef*]name" terms; a bare rational is a constant term and a
// leading '-' on a name negates it.
template <class T>
T combine(std::string_view expr, const std::string& kind, const std::function<T(const Rational&)>& constant,
          const std::function<std::optional<T>(const std::string&, const std::string&)>& named)
{
    if (trim(expr).empty()) {
        throw InputError(kind, "empty expression");
    }
    std::optional<T> total;
    const auto terms = split_terms(expr);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string where = kind + " term " + std::to_string(i + 1) + " '" + terms[i] + "'";
        if (terms[i].empty()) {
            throw InputError(where, "empty term");
        }
        T term = [&]() -> T {
            if (auto c = try_rational(terms[i])) {
                return constant(*c);
            }
            std::string name = terms[i];
            std::optional<Rational> coef;
            const auto star = name.find('*');
            if (star != std::string::npos) {
                coef = parse_rational(name.substr(0, star), where);
                name = trim(name.substr(star + 1));
            } else if (!name.empty() && name.front() == '-') {
                coef = Rational(-1);
                name = trim(name.substr(1));
            }
            auto base = named(name, where);
            if (!base) {
                throw InputError(where, "unknown " + kind + " '" + name + "' (see `fixtures`)");
            }
            return coef ? (*coef) * (*base) : std::move(*base);
        }();
        total = total ? (*total) + term : std::move(term);
    }
    total->name = trim(expr);
    return std::move(*total);
}

Rational json_rational(const json& v, const std::string& where)
{
    if (v.is_string()) {
        return parse_rational(v.get<std::string>(), where);
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    if (v.is_number()) {
        return parse_rational(v.dump(), where);
    }
    throw InputError(where, "expected a rational (string or number)");
}

ExtRational json_ext_rational(const json& v, const std::string& where)
{
    try {
        if (v.is_string()) {
            return ExtRational::parse(v.get<std::string>());
        }
    } catch (const ParseError& e) {
        throw InputError(where, e.what());
    }
    const Rational r = json_rational(v, where);
    if (r.sign() < 0) {
        throw InputError(where, "must be nonnegative");
    }
    return ExtRational(r);
}

const json& require(const json& doc, const char* key, const std::string& context)
{
    if (!doc.is_object() || !doc.contains(key)) {
        throw InputError(context.empty() ? key : context + "." + key, "missing field");
    }
    return doc.at(key);
}

std::string path(const std::string& base, std::size_t i)
{
    return base + "[" + std::to_string(i) + "]";
}

std::string label_of(const json& v, const std::string& where)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long>());
    }
    throw InputError(where, "expected a label (string or integer)");
}

Subset subset_of_labels(const json& members, const std::vector<std::string>& labels, const std::string& where)
{
    if (!members.is_array()) {
        throw InputError(where, "expected an array of carrier labels");
    }
    Subset s = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto label = label_of(members[i], path(where, i));
        const auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) {
            throw InputError(path(where, i), "'" + label + "' is not in the carrier");
        }
        s |= singleton(static_cast<std::size_t>(it - labels.begin()));
    }
    return s;
}

std::optional<std::size_t> parse_size(const std::string& text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::stoul(text));
}

std::string builtin_name(const json& doc)
{
    if (doc.is_string()) {
        return doc.get<std::string>();
    }
    if (doc.is_object() && doc.contains("builtin") && doc.at("builtin").is_string()) {
        return doc.at("builtin").get<std::string>();
    }
    return "";
}

}  // namespace

json load_json(const std::string& path_or_inline)
{
    const std::string text = trim(path_or_inline);
    std::string body;
    std::string source;
    if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
        body = text;
        source = "<inline>";
    } else if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
        source = text;
    } else {
        // A bare word names a builtin fixture.
        return json(text);
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, body.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (body[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column), "invalid JSON");
    }
}

std::vector<std::string> parse_labels(const json& carrier, const std::string& field)
{
    if (carrier.is_number_unsigned() || carrier.is_number_integer()) {
        const long n = carrier.get<long>();
        if (n < 1) {
            throw InputError(field, "carrier size must be positive");
        }
        std::vector<std::string> out;
        for (long i = 1; i <= n; ++i) {
            out.push_back(std::to_string(i));
        }
        return out;
    }
    if (!carrier.is_array()) {
        throw InputError(field, "expected an array of labels or a size");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        out.push_back(label_of(carrier[i], path(field, i)));
    }
    return out;
}

TailedSequence parse_sequence(std::string_view expr)
{
    const std::function<TailedSequence(const Rational&)> constant = constant_sequence;
    return combine<TailedSequence>(
        expr, "sequence", constant, [](const std::string& name, const std::string& where) -> std::optional<TailedSequence> {
            const auto [head, arg] = split_head(name);
            if (name == "harmonic" || name == "1/n") {
                return harmonic_sequence();
            }
            if (name == "alt" || name == "alternating" || name == "(-1)^n") {
                return alternating_sequence();
            }
            if (name == "damped" || name == "(-1)^n/n") {
                return damped_alternating_sequence();
            }
            try {
                if (head == "geometric") {
                    return geometric_sequence(parse_rational(arg, where));
                }
                if (head == "const") {
                    return constant_sequence(parse_rational(arg, where));
                }
                if (head == "shifted") {
                    return shifted_harmonic(parse_rational(arg, where));
                }
            } catch (const DomainError& e) {
                throw InputError(where, e.what());
            }
            return std::nullopt;
        });
}

LocalFunction parse_local_function(std::string_view expr, const Rational& at)
{
    const std::function<LocalFunction(const Rational&)> constant = [at](const Rational& c) {
        return LocalFunction::constant_function(at, c);
    };
    return combine<LocalFunction>(
        expr, "function", constant,
        [&at](const std::string& name, const std::string& where) -> std::optional<LocalFunction> {
            const auto [head, arg] = split_head(name);
            const Polynomial x(std::vector<Rational>{Rational(0), Rational(1)});
            if (name == "x" || name == "id") {
                return LocalFunction::polynomial("x", at, x);
            }
            if (name == "x^2" || name == "square") {
                return LocalFunction::polynomial("x^2", at, x * x);
            }
            if (name == "abs" || name == "|x|") {
                if (at.sign() == 0) {
                    return abs_function();
                }
                return LocalFunction::polynomial("|x|", at, Polynomial::constant(Rational(at.sign())) * x);
            }
            if (name == "sign") {
                if (at.sign() == 0) {
                    return sign_function();
                }
                return LocalFunction::constant_function(at, Rational(at.sign()));
            }
            if (head == "poly") {
                return LocalFunction::polynomial(name, at, Polynomial(parse_rational_list(arg, where)));
            }
            if (head == "const") {
                return LocalFunction::constant_function(at, parse_rational(arg, where));
            }
            if (head == "bump") {
                const Polynomial zero = Polynomial::constant(Rational(0));
                return LocalFunction::piecewise_polynomial(name, at, zero, parse_rational(arg, where), zero);
            }
            return std::nullopt;
        });
}

Integrand1D parse_integrand(std::string_view expr, const Rational& lo, const Rational& hi)
{
    if (hi <= lo) {
        throw InputError("domain", "need a < b");
    }
    const std::function<Integrand1D(const Rational&)> constant = [lo, hi](const Rational& c) {
        return Integrand1D::from_step(c.to_string(), StepFunction1D::constant(lo, hi, c));
    };
    return combine<Integrand1D>(
        expr, "integrand", constant,
        [&lo, &hi](const std::string& name, const std::string& where) -> std::optional<Integrand1D> {
            const auto [head, arg] = split_head(name);
            const Polynomial x(std::vector<Rational>{Rational(0), Rational(1)});
            if (name == "x" || name == "identity") {
                return Integrand1D::from_polynomial("x", lo, hi, x);
            }
            if (name == "x^2" || name == "square") {
                return Integrand1D::from_polynomial("x^2", lo, hi, x * x);
            }
            if (name == "dirichlet") {
                return Integrand1D::from_oracle("dirichlet", lo, hi, dirichlet_oracle());
            }
            if (head == "const") {
                return Integrand1D::from_step(name, StepFunction1D::constant(lo, hi, parse_rational(arg, where)));
            }
            if (head == "poly") {
                return Integrand1D::from_polynomial(name, lo, hi, Polynomial(parse_rational_list(arg, where)));
            }
            if (head == "step") {
                // step:x0,x1,...,xm:v1,...,vm
                const auto [breaks, values] = split_head(arg);
                auto b = parse_rational_list(breaks, where + " breakpoints");
                auto v = parse_rational_list(values, where + " values");
                if (b.front() != lo || b.back() != hi) {
                    throw InputError(where, "breakpoints must run from the domain's a to its b");
                }
                try {
                    return Integrand1D::from_step(name, StepFunction1D(std::move(b), std::move(v)));
                } catch (const DomainError& e) {
                    throw InputError(where, e.what());
                }
            }
            if (head == "lipschitz") {
                // lipschitz:C:c0,c1,... -- a polynomial with a declared Lipschitz constant.
                const auto [c, coeffs] = split_head(arg);
                const Rational lc = parse_rational(c, where + " constant");
                if (lc.sign() < 0) {
                    throw InputError(where, "Lipschitz constant must be nonnegative");
                }
                const Polynomial p(parse_rational_list(coeffs, where + " coefficients"));
                return Integrand1D::from_oracle(
                    name, lo, hi, lipschitz_oracle(name, [p](const Rational& t) { return p(t); }, lc));
            }
            return std::nullopt;
        });
}

AtomicFunction parse_atomic_function(const json& doc)
{
    if (doc.is_object() && doc.contains("values")) {
        const auto& values = doc.at("values");
        if (!values.is_array()) {
            throw InputError("values", "expected an array");
        }
        std::vector<Rational> out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            out.push_back(json_rational(values[i], path("values", i)));
        }
        return AtomicFunction::from_values("values", std::move(out));
    }
    std::string expr = builtin_name(doc);
    if (expr.empty() && doc.is_object() && doc.contains("expr") && doc.at("expr").is_string()) {
        expr = doc.at("expr").get<std::string>();
    }
    if (expr.empty()) {
        throw InputError("f", "expected {values:[...]}, {builtin:name} or {expr:sum}");
    }
    const std::function<AtomicFunction(const Rational&)> constant = atomic_constant;
    auto f = combine<AtomicFunction>(
        expr, "atomic function", constant,
        [](const std::string& name, const std::string& where) -> std::optional<AtomicFunction> {
            const auto [head, arg] = split_head(name);
            if (name == "one") {
                return atomic_constant(Rational(1));
            }
            if (name == "reciprocal" || name == "1/n") {
                return atomic_reciprocal();
            }
            if (name == "alternating" || name == "(-1)^n") {
                return atomic_alternating();
            }
            if (name == "exp2" || name == "2^n") {
                return atomic_exponential(Rational(2));
            }
            if (head == "geometric" || head == "power") {
                return atomic_exponential(parse_rational(arg, where));
            }
            if (head == "const") {
                return atomic_constant(parse_rational(arg, where));
            }
            return std::nullopt;
        });
    if (doc.is_object() && doc.contains("scale")) {
        const auto name = f.name;
        f = json_rational(doc.at("scale"), "scale") * f;
        f.name = doc.at("scale").dump() + "*(" + name + ")";
    }
    return f;
}

AtomicMeasureSpace parse_measure_space(const json& doc)
{
    const std::string builtin = builtin_name(doc);
    if (!builtin.empty()) {
        const auto [head, arg] = split_head(builtin);
        if (head == "geometric") {
            const Rational r = arg.empty() ? Rational(1, 2) : parse_rational(arg, "space");
            try {
                return AtomicMeasureSpace::geometric(r);
            } catch (const DomainError& e) {
                throw InputError("space", e.what());
            }
        }
        throw InputError("space", "unknown builtin space '" + builtin + "' (see `fixtures`)");
    }
    const auto& atoms = require(doc, "atoms", "");
    const auto& weights = require(doc, "weights", "");
    if (atoms.is_string()) {
        if (atoms.get<std::string>() != "nat") {
            throw InputError("atoms", "expected an array or \"nat\"");
        }
        if (!weights.is_object()) {
            throw InputError("weights", "countable spaces need a weight formula {formula, ...}");
        }
        const auto formula = require(weights, "formula", "weights");
        if (!formula.is_string() || formula.get<std::string>() != "geometric") {
            throw InputError("weights.formula", "supported formulas: \"geometric\"");
        }
        const Rational ratio = json_rational(require(weights, "ratio", "weights"), "weights.ratio");
        try {
            return AtomicMeasureSpace::geometric(ratio);
        } catch (const DomainError& e) {
            throw InputError("weights.ratio", e.what());
        }
    }
    const auto labels = parse_labels(atoms, "atoms");
    if (!weights.is_array()) {
        throw InputError("weights", "finite spaces need one weight per atom");
    }
    if (weights.size() != labels.size()) {
        throw InputError("weights", "expected " + std::to_string(labels.size()) + " weights, got " +
                                        std::to_string(weights.size()));
    }
    std::vector<ExtRational> w;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        w.push_back(json_ext_rational(weights[i], path("weights", i)));
    }
    return AtomicMeasureSpace::finite(std::move(w), labels);
}

FiniteTopology parse_topology(const json& doc)
{
    const std::string builtin = builtin_name(doc);
    if (!builtin.empty()) {
        const auto [head, arg] = split_head(builtin);
        const auto n = parse_size(arg);
        if (builtin == "sierpinski") {
            return FiniteTopology::sierpinski();
        }
        try {
            if (head == "discrete" && n) {
                return FiniteTopology::discrete(*n);
            }
            if (head == "indiscrete" && n) {
                return FiniteTopology::indiscrete(*n);
            }
        } catch (const DomainError& e) {
            throw InputError("space", e.what());
        }
        throw InputError("space", "no such file or builtin topology '" + builtin + "' (see `fixtures`)");
    }
    const auto labels = parse_labels(require(doc, "carrier", ""), "carrier");
    if (labels.size() > kMaxCarrier) {
        throw InputError("carrier", "at most " + std::to_string(kMaxCarrier) + " points");
    }
    const auto& opens = require(doc, "opens", "");
    if (!opens.is_array()) {
        throw InputError("opens", "expected an array of label arrays");
    }
    std::vector<Subset> sets;
    for (std::size_t i = 0; i < opens.size(); ++i) {
        sets.push_back(subset_of_labels(opens[i], labels, path("opens", i)));
    }
    try {
        return FiniteTopology(labels, sets);
    } catch (const DomainError& e) {
        throw InputError("opens", e.what());
    }
}

namespace {

// "(12)(34)", "(1 2)", "(1,2)" or "()" over letters 1..degree.
std::vector<std::size_t> parse_cycles(const std::string& text, std::size_t degree, const std::string& where)
{
    std::vector<std::size_t> images(degree);
    for (std::size_t x = 0; x < degree; ++x) {
        images[x] = x + 1;
    }
    std::size_t i = 0;
    const std::string s = trim(text);
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i])) != 0) {
            ++i;
            continue;
        }
        if (s[i] != '(') {
            throw InputError(where, "expected '(' in cycle notation");
        }
        const auto close = s.find(')', i);
        if (close == std::string::npos) {
            throw InputError(where, "unbalanced '(' in cycle notation");
        }
        const std::string body = s.substr(i + 1, close - i - 1);
        std::vector<std::size_t> cycle;
        const bool separated = body.find_first_of(" ,") != std::string::npos;
        const auto tokens = separated ? split(body, body.find(',') != std::string::npos ? ',' : ' ')
                                      : [&] {
                                            std::vector<std::string> out;
                                            for (char c : body) {
                                                out.emplace_back(1, c);
                                            }
                                            return out;
                                        }();
        for (const auto& t : tokens) {
            if (t.empty()) {
                continue;
            }
            const auto v = parse_size(t);
            if (!v || *v < 1 || *v > degree) {
                throw InputError(where, "'" + t + "' is not a letter in 1.." + std::to_string(degree));
            }
            if (std::find(cycle.begin(), cycle.end(), *v) != cycle.end()) {
                throw InputError(where, "letter " + t + " repeated in a cycle");
            }
            cycle.push_back(*v);
        }
        // Cycles compose right to left.
        std::vector<std::size_t> c(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            c[x] = x + 1;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            c[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
        }
        std::vector<std::size_t> next(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            next[x] = images[c[x] - 1];
        }
        images = std::move(next);
        i = close + 1;
    }
    return images;
}

std::size_t max_letter(const std::string& text)
{
    std::size_t m = 1;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            m = std::max<std::size_t>(m, static_cast<std::size_t>(c - '0'));
        }
    }
    return m;
}

}  // namespace

std::string canonical_cycle(const std::string& text, std::size_t degree)
{
    auto images = parse_cycles(text, degree, "permutation '" + text + "'");
    for (auto& v : images) {
        --v;
    }
    return cycle_notation(images);
}

FiniteGroup parse_group(const json& doc)
{
    const std::string builtin = builtin_name(doc);
    if (!builtin.empty()) {
        const auto [head, arg] = split_head(builtin);
        try {
            if (builtin.size() == 2 && builtin[0] == 'S' && std::isdigit(static_cast<unsigned char>(builtin[1])) != 0) {
                return FiniteGroup::symmetric(static_cast<std::size_t>(builtin[1] - '0'));
            }
            if (head == "symmetric" && parse_size(arg)) {
                return FiniteGroup::symmetric(*parse_size(arg));
            }
            if (head == "cyclic" && parse_size(arg)) {
                return FiniteGroup::cyclic(*parse_size(arg));
            }
            if (builtin == "klein") {
                return FiniteGroup::from_permutations(4, {{2, 1, 4, 3}, {3, 4, 1, 2}});
            }
        } catch (const DomainError& e) {
            throw InputError("input", e.what());
        }
        throw InputError("input", "no such file or builtin group '" + builtin + "' (see `fixtures`)");
    }
    if (doc.is_object() && doc.contains("table")) {
        const auto labels = parse_labels(require(doc, "elements", ""), "elements");
        const auto& table = doc.at("table");
        if (!table.is_array() || table.size() != labels.size()) {
            throw InputError("table", "expected " + std::to_string(labels.size()) + " rows");
        }
        std::vector<std::vector<std::size_t>> rows;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (!table[i].is_array() || table[i].size() != labels.size()) {
                throw InputError(path("table", i), "expected " + std::to_string(labels.size()) + " entries");
            }
            std::vector<std::size_t> row;
            for (std::size_t j = 0; j < table[i].size(); ++j) {
                const auto where = path(path("table", i), j);
                const auto label = label_of(table[i][j], where);
                const auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end()) {
                    throw InputError(where, "'" + label + "' is not an element");
                }
                row.push_back(static_cast<std::size_t>(it - labels.begin()));
            }
            rows.push_back(std::move(row));
        }
        try {
            return FiniteGroup(labels, rows);
        } catch (const DomainError& e) {
            throw InputError("table", e.what());
        }
    }
    const auto& gens = require(doc, "generators", "");
    if (!gens.is_array()) {
        throw InputError("generators", "expected an array");
    }
    std::size_t degree = 0;
    if (doc.contains("degree")) {
        if (!doc.at("degree").is_number_integer() || doc.at("degree").get<long>() < 1) {
            throw InputError("degree", "expected a positive integer");
        }
        degree = static_cast<std::size_t>(doc.at("degree").get<long>());
    } else {
        for (const auto& g : gens) {
            degree = std::max(degree, g.is_string() ? max_letter(g.get<std::string>()) : g.size());
        }
    }
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto where = path("generators", i);
        if (gens[i].is_string()) {
            perms.push_back(parse_cycles(gens[i].get<std::string>(), degree, where));
            continue;
        }
        if (!gens[i].is_array()) {
            throw InputError(where, "expected cycle notation or an image array");
        }
        std::vector<std::size_t> p;
        for (std::size_t j = 0; j < gens[i].size(); ++j) {
            if (!gens[i][j].is_number_integer() || gens[i][j].get<long>() < 1) {
                throw InputError(path(where, j), "expected a letter 1.." + std::to_string(degree));
            }
            p.push_back(static_cast<std::size_t>(gens[i][j].get<long>()));
        }
        perms.push_back(std::move(p));
    }
    try {
        return FiniteGroup::from_permutations(degree, perms);
    } catch (const DomainError& e) {
        throw InputError("generators", e.what());
    }
}

PreMeasure parse_premeasure(const json& doc)
{
    const auto labels = parse_labels(require(doc, "carrier", ""), "carrier");
    if (labels.size() > 5) {
        throw InputError("carrier", "at most 5 points");
    }
    const auto& sets = require(doc, "sets", "");
    if (!sets.is_array()) {
        throw InputError("sets", "expected an array of label arrays");
    }
    std::vector<Subset> members;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        members.push_back(subset_of_labels(sets[i], labels, path("sets", i)));
    }
    if (std::find(members.begin(), members.end(), Subset{0}) == members.end()) {
        members.push_back(0);
    }
    std::optional<SetRing> ring;
    try {
        ring.emplace(labels.size(), members, labels);
    } catch (const DomainError& e) {
        throw InputError("sets", e.what());
    }
    std::map<Subset, ExtRational> mu{{Subset{0}, ExtRational(0)}};
    const auto& values = require(doc, "mu", "");
    if (values.is_array()) {
        if (values.size() != sets.size()) {
            throw InputError("mu", "expected one value per entry of sets");
        }
        for (std::size_t i = 0; i < values.size(); ++i) {
            mu[members[i]] = json_ext_rational(values[i], path("mu", i));
        }
    } else if (values.is_object()) {
        for (const auto& [key, value] : values.items()) {
            std::string inner = trim(key);
            if (!inner.empty() && (inner.front() == '{' || inner.front() == '[')) {
                inner = inner.substr(1, inner.size() >= 2 ? inner.size() - 2 : 0);
            }
            json list = json::array();
            if (!trim(inner).empty()) {
                for (const auto& item : split(inner, ',')) {
                    list.push_back(item);
                }
            }
            const std::string where = "mu[\"" + key + "\"]";
            mu[subset_of_labels(list, labels, where)] = json_ext_rational(value, where);
        }
    } else {
        throw InputError("mu", "expected an object keyed by sets or an array aligned with sets");
    }
    for (Subset m : ring->members()) {
        if (!mu.contains(m)) {
            throw InputError("mu", "no value for ring member " + ring->show(m));
        }
    }
    for (const auto& [s, v] : mu) {
        if (!ring->contains(s)) {
            throw InputError("mu", ring->show(s) + " is not a member of the ring");
        }
    }
    try {
        return PreMeasure(*ring, mu);
    } catch (const DomainError& e) {
        throw InputError("mu", e.what());
    }
}

std::vector<FixtureEntry> fixture_catalog()
{
    return {
        {"harmonic", "sequence", "1/n (alias 1/n)", "tail range (0, 1/N]; exact closed form"},
        {"alt", "sequence", "(-1)^n (aliases alternating, (-1)^n)", "tail range [-1, 1], both values recurring"},
        {"damped", "sequence", "(-1)^n/n (alias (-1)^n/n)", "tail range [-1/N, 1/N]; exact closed form"},
        {"geometric:r", "sequence", "r^n for 0 <= r < 1", "tail range [0, r^N]; exact closed form"},
        {"const:c", "sequence", "constant c (a bare rational also works)", "kernel element"},
        {"shifted:c", "sequence", "c + 1/n", "tail range (c, c + 1/N]"},
        {"x", "function", "identity near p (alias id)", "polynomial germ"},
        {"x^2", "function", "x^2 near p (alias square)", "polynomial germ"},
        {"abs", "function", "|x| (alias |x|)", "two-sided polynomial germ at 0"},
        {"sign", "function", "sign(x), sign(0) = 0", "germ -1 | 0 | 1 at 0; range [-1, 1] on every ball"},
        {"poly:c0,c1,...", "function", "c0 + c1 x + ... expanded at p", "polynomial germ"},
        {"const:c", "function", "constant c", "kernel element"},
        {"bump:v", "function", "0 off p, v at p", "germ 0 | v | 0"},
        {"x", "integrand", "identity on [a, b] (alias identity)", "exact polynomial range"},
        {"x^2", "integrand", "x^2 on [a, b] (alias square)", "exact polynomial range"},
        {"dirichlet", "integrand", "indicator of the rationals", "range [0, 1] on every box; oscillation floor 1"},
        {"poly:c0,c1,...", "integrand", "polynomial", "polynomial range bound"},
        {"const:c", "integrand", "constant c", "kernel element (step function)"},
        {"step:x0,...,xm:v1,...,vm", "integrand", "v_i on [x_{i-1}, x_i)", "exact step function"},
        {"lipschitz:C:c0,c1,...", "integrand", "polynomial with declared Lipschitz constant C", "midpoint +- C w/2"},
        {"one", "atomic function", "constant 1", "eventually constant"},
        {"reciprocal", "atomic function", "1/n (alias 1/n)", "|f(n)| <= 1/N beyond N"},
        {"alternating", "atomic function", "(-1)^n", "|f(n)| <= 1"},
        {"geometric:r", "atomic function", "r^n (alias power:r)", "|f(n)| <= |r|^N when |r| <= 1, else unbounded"},
        {"exp2", "atomic function", "2^n", "no bound (not integrable on infinite-mass tails)"},
        {"geometric", "space", "atoms 1, 2, ... with mu({n}) = r^n (default r = 1/2)", "exact tail mass r^N/(1-r)"},
        {"sierpinski", "topology", "({0, 1}, {{}, {1}, {0, 1}})", "finite enumeration"},
        {"discrete:n", "topology", "all subsets open", "finite enumeration"},
        {"indiscrete:n", "topology", "only {} and the carrier open", "finite enumeration"},
        {"S3", "group", "symmetric group on 3 letters (also symmetric:n, n <= 4)", "Cayley table"},
        {"cyclic:n", "group", "Z/n", "Cayley table"},
        {"klein", "group", "<(12)(34), (13)(24)>", "Cayley table"},
    };
}

}  // namespace ordclose
