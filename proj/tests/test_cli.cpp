#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "ordclose/cli.hpp"
#include "ordclose/fixtures.hpp"
#include "ordclose/random.hpp"

using namespace ordclose;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    [[nodiscard]] json doc() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

const std::string kRing =
    R"({"carrier":[1,2,3],"sets":[[1],[2,3],[1,2,3]],"mu":{"{1}":"2","{2,3}":1,"{1,2,3}":"3"}})";

}  // namespace

TEST(Cli, RootExample)
{
    const auto r = run({"root", "--radicand", "2", "--degree", "2", "--tol", "1e-9", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = r.doc();
    EXPECT_EQ(d["status"], "Converged");
    const auto lo = Rational::parse(d["lower"].get<std::string>());
    const auto hi = Rational::parse(d["upper"].get<std::string>());
    EXPECT_LE(lo * lo, Rational(2));
    EXPECT_GE(hi * hi, Rational(2));
    EXPECT_LE(lo, Rational::parse("1.414213562"));
    EXPECT_GE(hi, Rational::parse("1.414213562"));
    EXPECT_LE(hi - lo, Rational::parse("1e-9"));
}

TEST(Cli, ResultRoundTripsThroughExactEndpoints)
{
    const auto d = run({"pow", "--base", "3", "--exp", "2/3", "--tol", "1e-8"}).doc();
    const RationalEnclosure e(Rational::parse(d["lower"].get<std::string>()),
                              Rational::parse(d["upper"].get<std::string>()));
    EXPECT_EQ(width(e).to_string(), d["width"]);
    EXPECT_EQ(decimal_display(e, display_digits(Rational::parse("1e-8"))), d["decimal_display"]);
    // (3^(2/3))^3 = 9.
    EXPECT_LE(e.lower().pow(3), Rational(9));
    EXPECT_GE(e.upper().pow(3), Rational(9));
}

TEST(Cli, AlternatingLimitIsCertifiedGap)
{
    const auto r = run({"limit", "--seq", "alt", "--json"});
    EXPECT_EQ(r.code, 2);
    const auto d = r.doc();
    EXPECT_EQ(d["status"], "GapAtLeast");
    EXPECT_EQ(d["width"], "2");
    EXPECT_EQ(d["gap"], "2");
}

TEST(Cli, LawSuiteExample)
{
    const auto r = run({"laws", "--suite", "additivity", "--instance", "riemann", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto d = r.doc();
    EXPECT_TRUE(d["report"]["violations"].empty());
    EXPECT_EQ(d["report"]["seed"], 7);
    EXPECT_GT(d["report"]["cases"].get<int>(), 0);
}

TEST(Cli, FixtureCatalog)
{
    const auto d = run({"fixtures"}).doc();
    std::set<std::string> names;
    for (const auto& f : d["fixtures"]) {
        names.insert(f["name"].get<std::string>());
    }
    EXPECT_TRUE(names.contains("harmonic"));
    EXPECT_TRUE(names.contains("dirichlet"));
    EXPECT_TRUE(names.contains("sierpinski"));
    const auto tops = run({"fixtures", "--kind", "topology"}).doc();
    for (const auto& f : tops["fixtures"]) {
        EXPECT_EQ(f["kind"], "topology");
    }
}

TEST(Cli, ExitCodeTaxonomy)
{
    EXPECT_EQ(run({"integrate", "riemann", "--domain", "0,1", "--oracle", "dirichlet"}).code, 2);
    EXPECT_EQ(run({"integrate", "riemann", "--domain", "0,1", "--oracle", "x", "--tol", "1/64"}).code, 0);
    EXPECT_EQ(run({"root", "--radicand", "2", "--budget", "3"}).code, 3);
    EXPECT_EQ(run({"continuity", "--fn", "sign", "--at", "0"}).code, 2);
    EXPECT_EQ(run({"continuity", "--fn", "sign", "--at", "-1/2"}).code, 0);
    EXPECT_EQ(run({"derivative", "--fn", "abs"}).code, 2);
    EXPECT_EQ(run({"derivative", "--fn", "x^2"}).code, 0);
    EXPECT_EQ(run({"filters", "--space", "discrete:5"}).code, 3);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"root"}).code, 1);
    EXPECT_EQ(run({"--tol", "0", "root", "--radicand", "2"}).code, 1);
    EXPECT_EQ(run({"--json", "--plain", "fixtures"}).code, 1);
    EXPECT_EQ(run({"laws", "--suite", "nope"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InputDiagnosticsNameTheField)
{
    const auto bad_weight = run({"integrate", "lebesgue", "--space", R"({"atoms":[1,2],"weights":["1/2","x"]})", "--f",
                                 R"({"values":[1,1]})"});
    EXPECT_EQ(bad_weight.code, 1);
    EXPECT_NE(bad_weight.err.find("weights[1]"), std::string::npos) << bad_weight.err;

    const auto syntax = run({"filters", "--space", "{\n  \"carrier\": [0, 1],\n  \"opens\": [[0],, ]\n}"});
    EXPECT_EQ(syntax.code, 1);
    EXPECT_NE(syntax.err.find("<inline>:3:"), std::string::npos) << syntax.err;

    const auto label = run({"filters", "--space", R"({"carrier":["a","b"],"opens":[[],["c"],["a","b"]]})"});
    EXPECT_EQ(label.code, 1);
    EXPECT_NE(label.err.find("opens[1][0]"), std::string::npos) << label.err;

    const auto term = run({"limit", "--seq", "harmonic+3*nope"});
    EXPECT_EQ(term.code, 1);
    EXPECT_NE(term.err.find("term 2"), std::string::npos) << term.err;
}

TEST(Cli, BudgetFromEnvironment)
{
    ::setenv("ORDCLOSE_BUDGET", "4", 1);
    const auto d = run({"root", "--radicand", "2"});
    ::setenv("ORDCLOSE_BUDGET", "zero", 1);
    const auto bad = run({"root", "--radicand", "2"});
    ::unsetenv("ORDCLOSE_BUDGET");
    EXPECT_EQ(d.code, 3);
    EXPECT_EQ(d.doc()["budget"], 4);
    EXPECT_EQ(bad.code, 1);
    // An explicit flag wins over the environment.
    ::setenv("ORDCLOSE_BUDGET", "4", 1);
    const auto flag = run({"--budget", "100", "root", "--radicand", "2"});
    ::unsetenv("ORDCLOSE_BUDGET");
    EXPECT_EQ(flag.code, 0);
}

TEST(Cli, ClosureAndMeasureCommands)
{
    const auto s3 = run({"closure", "group", "--input", R"j({"degree":3,"generators":["(12)","(23)"]})j", "--set",
                         "(1 2),(2 3)"});
    ASSERT_EQ(s3.code, 0) << s3.err;
    EXPECT_EQ(s3.doc()["size"], 6);
    const auto sigma = run({"closure", "sigma", "--input", R"({"carrier":[1,2,3]})", "--set", "{1}"});
    ASSERT_EQ(sigma.code, 0) << sigma.err;
    EXPECT_EQ(sigma.doc()["size"], 4);
    const auto topo = run({"closure", "topo", "--input", "sierpinski", "--set", "1"});
    EXPECT_EQ(topo.doc()["closure"], json::array({"0", "1"}));

    const auto mu = run({"measure", "extend", "--ring", kRing, "--set", "1"});
    ASSERT_EQ(mu.code, 0) << mu.err;
    EXPECT_EQ(mu.doc()["outer_measure"], "2");
    EXPECT_EQ(run({"measure", "extend", "--ring", kRing, "--set", "1,3"}).doc()["outer_measure"], "3");
    EXPECT_EQ(run({"measure", "restrict", "--ring", kRing}).doc()["sigma_algebra"].size(), 4U);
    const auto uncovered = run({"measure", "extend", "--ring", R"({"carrier":[1,2],"sets":[[1]],"mu":[1]})", "--set", "1"});
    EXPECT_EQ(uncovered.code, 1);
    const auto not_additive =
        run({"measure", "extend", "--ring", R"({"carrier":[1,2],"sets":[[1],[2],[1,2]],"mu":[1,1,5]})", "--set", "1"});
    EXPECT_EQ(not_additive.code, 1);
    EXPECT_NE(not_additive.err.find("mu"), std::string::npos);
}

TEST(Cli, PlainOutput)
{
    const auto r = run({"--plain", "limit", "--seq", "harmonic"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("status: Converged\n"), std::string::npos);
    EXPECT_NE(r.out.find("lower: 0\n"), std::string::npos);
}

TEST(Cli, IdenticalArgumentsGiveIdenticalBytes)
{
    const std::vector<std::vector<std::string>> matrix = {
        {"laws", "--suite", "scaling", "--instance", "limits", "--seed", "3", "--cases", "20"},
        {"laws", "--suite", "infsup", "--seed", "11", "--cases", "20"},
        {"filters", "--space", "sierpinski", "--map", "1,0"},
        {"integrate", "lebesgue", "--space", "geometric:1/3", "--f", "reciprocal+alternating"},
    };
    for (const auto& args : matrix) {
        const auto a = run(args);
        const auto b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(DecimalDisplay, ContainsTheExactInterval)
{
    SeededRng rng(5);
    for (int i = 0; i < 500; ++i) {
        const Rational a(rng.integer(-100000, 100000), rng.integer(1, 9999));
        const Rational b = a + Rational(rng.integer(0, 1000), rng.integer(1, 999));
        const int digits = static_cast<int>(rng.integer(0, 12));
        const RationalEnclosure e(a, b);
        const auto text = decimal_display(e, digits);
        const auto comma = text.find(", ");
        const auto down = Rational::parse(text.substr(1, comma - 1));
        const auto up = Rational::parse(text.substr(comma + 2, text.size() - comma - 3));
        EXPECT_LE(down, a) << text;
        EXPECT_GE(up, b) << text;
    }
    EXPECT_EQ(display_digits(Rational::parse("1e-6")), 7);
    EXPECT_EQ(display_digits(Rational(1)), 6);
}

TEST(Fixtures, SequenceExpressionsCombineTerms)
{
    const auto f = parse_sequence("2+3*harmonic+-1*alt");
    for (std::size_t n = 1; n < 20; ++n) {
        const Rational expected = Rational(2) + Rational(3) / Rational(static_cast<long>(n)) - (n % 2 == 0 ? 1 : -1);
        EXPECT_EQ(f.eval(n), expected);
    }
    EXPECT_EQ(parse_sequence("1e+2").constant, Rational(100));
    EXPECT_EQ(parse_sequence("-harmonic").eval(4), Rational(-1, 4));
    EXPECT_THROW(parse_sequence(""), InputError);
    EXPECT_THROW(parse_sequence("harmonic+"), InputError);
    EXPECT_THROW(parse_sequence("geometric:2"), InputError);
}

TEST(Fixtures, LocalAndIntegrandExpressions)
{
    const auto abs_right = parse_local_function("abs", Rational(2));
    EXPECT_EQ(abs_right.eval(Rational(3)), Rational(3));
    const auto abs_left = parse_local_function("abs", Rational(-2));
    EXPECT_EQ(abs_left.eval(Rational(-3)), Rational(3));
    EXPECT_EQ(parse_local_function("poly:1,0,1", Rational(1)).eval(Rational(3)), Rational(10));

    const auto step = parse_integrand("step:0,1/2,1:1,3", Rational(0), Rational(1));
    ASSERT_TRUE(step.step.has_value());
    EXPECT_EQ(step_integral(*step.step), Rational(2));
    EXPECT_THROW(parse_integrand("step:0,1/2:1", Rational(0), Rational(1)), InputError);
    EXPECT_THROW(parse_integrand("x", Rational(1), Rational(0)), InputError);
}

TEST(Fixtures, CycleNotation)
{
    EXPECT_EQ(canonical_cycle("(1 2)", 3), "(12)");
    EXPECT_EQ(canonical_cycle("(2,1)", 3), "(12)");
    // Right to left: (23) first, then (12).
    EXPECT_EQ(canonical_cycle("(12)(23)", 3), "(123)");
    EXPECT_EQ(canonical_cycle("()", 3), "()");
    EXPECT_THROW(canonical_cycle("(14)", 3), InputError);
    EXPECT_THROW(canonical_cycle("(11)", 3), InputError);
}

TEST(Fixtures, StructuredInputs)
{
    const auto space = parse_measure_space(json::parse(R"({"atoms":["a","b"],"weights":["1/2","inf"]})"));
    EXPECT_FALSE(space.weight(1).is_finite());
    EXPECT_THROW(parse_measure_space(json::parse(R"({"atoms":["a"],"weights":[1,2]})")), InputError);
    EXPECT_THROW(parse_measure_space(json::parse(R"({"atoms":"nat","weights":{"formula":"zeta"}})")), InputError);

    const auto klein = parse_group(json("klein"));
    EXPECT_EQ(klein.size(), 4U);
    const auto table = parse_group(json::parse(R"({"elements":["e","a"],"table":[["e","a"],["a","e"]]})"));
    EXPECT_EQ(table.size(), 2U);
    EXPECT_THROW(parse_group(json::parse(R"({"elements":["e","a"],"table":[["e","a"],["a","a"]]})")), InputError);

    const auto pre = parse_premeasure(json::parse(kRing));
    EXPECT_EQ(pre(Subset{1}), ExtRational(2));
    EXPECT_THROW(parse_premeasure(json::parse(R"({"carrier":[1,2],"sets":[[1],[2],[1,2]],"mu":{"{1}":1}})")),
                 InputError);
}
