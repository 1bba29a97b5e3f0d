#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "nilcert/builtins.hpp"
#include "nilcert/document.hpp"

using namespace nilcert;

namespace {

std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(NILCERT_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CheckReport report_for(const std::string& text, CheckOptions options = {})
{
    const InputDocument doc = InputDocument::parse(text);
    return build_report(doc, resolve(doc), options);
}

int run(const std::string& text, CheckOptions options, std::string* out = nullptr, std::string* err = nullptr)
{
    std::ostringstream o, e;
    const int code = run_check(text, options, o, e);
    if (out)
        *out = o.str();
    if (err)
        *err = e.str();
    return code;
}

}  // namespace

TEST(Document, ParsesAndRoundTrips)
{
    const InputDocument doc = InputDocument::parse(read_data("phi1.json"));
    EXPECT_EQ(doc.name, "phi1");
    EXPECT_EQ(doc.degree, 3u);
    ASSERT_EQ(doc.pattern.size(), 3u);
    EXPECT_EQ(doc.pattern[1].inverted_primes, (std::vector<Prime>{2}));
    EXPECT_EQ(doc.matrix[2][2], "1/2");
    const InputDocument again = InputDocument::parse(doc.to_json().dump());
    EXPECT_EQ(again.to_json(), doc.to_json());
}

TEST(Document, BasisOrderIsHonoured)
{
    // The same φ₁ listed in canonical order E12, E23, E13.
    InputDocument doc = InputDocument::parse(read_data("phi1.json"));
    doc.basis_order = {{1, 2}, {2, 3}, {1, 3}};
    doc.matrix = {{"2", "0", "0"}, {"0", "1/2", "0"}, {"0", "0", "1"}};
    const ResolvedInput a = resolve(doc);
    const ResolvedInput b = resolve(InputDocument::parse(read_data("phi1.json")));
    EXPECT_EQ(a.endomorphism->phi(), b.endomorphism->phi());
}

TEST(Document, MalformedInputs)
{
    const auto code = [](const std::string& text) { return run(text, {}); };
    EXPECT_EQ(code("{"), exit_malformed);
    EXPECT_EQ(code("[]"), exit_malformed);
    EXPECT_EQ(code(R"({"name": "x"})"), exit_malformed);
    for (const char* f : {"bad_closure.json", "bad_swap.json", "bad_rational.json", "bad_homomorphism.json"}) {
        std::string err;
        EXPECT_EQ(run(read_data(f), {}, nullptr, &err), exit_malformed) << f;
        EXPECT_FALSE(err.empty());
    }
    std::string err;
    run(read_data("bad_closure.json"), {}, nullptr, &err);
    EXPECT_NE(err.find("closure"), std::string::npos) << err;

    InputDocument doc = InputDocument::parse(read_data("phi1.json"));
    doc.basis_order.pop_back();
    EXPECT_THROW(resolve(doc), InputError);
    doc = InputDocument::parse(read_data("phi1.json"));
    doc.basis_order[0] = {2, 1};
    EXPECT_THROW(resolve(doc), InputError);
    doc = InputDocument::parse(read_data("phi1.json"));
    doc.matrix[0].pop_back();
    EXPECT_THROW(resolve(doc), InputError);
    doc = InputDocument::parse(read_data("phi1.json"));
    doc.pattern.push_back(doc.pattern[0]);
    EXPECT_THROW(resolve(doc), InputError);
    // Numbers instead of strings are rejected, never rounded.
    std::string numeric = read_data("identity.json");
    numeric.replace(numeric.find("\"1\""), 3, "1");
    EXPECT_EQ(code(numeric), exit_malformed);
}

TEST(Document, Phi1Report)
{
    const CheckReport r = report_for(read_data("phi1.json"));
    EXPECT_EQ(r.centre_determinant, "1");
    EXPECT_EQ(r.abelianisation_charpoly, "x^2 - (5/2)x + 1");
    EXPECT_FALSE(r.verdicts.central.hypotheses[1].passed);
    EXPECT_EQ(r.verdicts.oracle.outcome, OracleOutcome::proper_injection);
    EXPECT_EQ(r.verdicts.oracle.witness->position.label(), "E12");
    EXPECT_EQ(r.verdicts.oracle.witness->value, Rational(1));
    EXPECT_TRUE(r.consistent());
}

TEST(Document, Phi2WithEmptyPiOverride)
{
    CheckOptions options;
    options.pi_override = parse_prime_list("");
    const CheckReport r = report_for(read_data("phi2.json"), options);
    EXPECT_TRUE(r.verdicts.central.hypotheses[1].passed);
    EXPECT_EQ(r.centre_determinant, "2");
    EXPECT_FALSE(r.verdicts.central.hypotheses[2].passed);
    EXPECT_EQ(r.verdicts.oracle.outcome, OracleOutcome::proper_injection);
}

TEST(Document, IdentityIsAutomorphismEverywhere)
{
    const CheckReport r = report_for(read_data("identity.json"));
    EXPECT_EQ(r.verdicts.central.conclusion, Conclusion::automorphism);
    EXPECT_EQ(r.verdicts.tfab.conclusion, Conclusion::automorphism);
    EXPECT_EQ(r.verdicts.oracle.outcome, OracleOutcome::automorphism);
}

TEST(Document, PiOverrideChangesVerdict)
{
    CheckOptions options;
    options.pi_override = parse_prime_list("2");
    const CheckReport r = report_for(read_data("phi2.json"), options);
    EXPECT_EQ(r.pi, (std::vector<Prime>{2}));
    EXPECT_FALSE(r.pi_divisible);  // E12 has ring Z
    EXPECT_EQ(r.verdicts.central.conclusion, Conclusion::not_applicable);
    EXPECT_THROW(parse_prime_list("2,x"), InputError);
    EXPECT_THROW(parse_prime_list("4"), InputError);
    EXPECT_EQ(parse_prime_list(" 3, 2 ,2").primes(), (std::vector<Prime>{2, 3}));
}

TEST(Document, ReportJsonRoundTrip)
{
    for (const auto& ex : builtin_examples())
        for (bool oracle : {true, false}) {
            CheckOptions options;
            options.run_oracle = oracle;
            options.seed = 77;
            const CheckReport r = report_for(ex.document, options);
            const std::string text = r.to_json().dump(2);
            const CheckReport back = CheckReport::from_json(nlohmann::json::parse(text));
            EXPECT_EQ(back, r) << ex.name;
            EXPECT_EQ(back.to_json().dump(2), text);
        }
}

TEST(Document, DeterministicOutput)
{
    for (const auto& ex : builtin_examples())
        for (auto format : {CheckOptions::Format::text, CheckOptions::Format::json}) {
            CheckOptions options;
            options.format = format;
            options.seed = 5;
            std::string first, second;
            EXPECT_EQ(run(ex.document, options, &first), exit_ok) << ex.name;
            EXPECT_EQ(run(ex.document, options, &second), exit_ok);
            EXPECT_EQ(first, second);
        }
}

TEST(Document, RationalsAreStrings)
{
    const auto j = report_for(read_data("phi1.json")).to_json();
    EXPECT_TRUE(j["endomorphism"]["determinant"].is_string());
    EXPECT_TRUE(j["oracle"]["witness"]["value"].is_string());
    EXPECT_EQ(j["criteria"]["central"]["criterion"], "central");
    EXPECT_EQ(j["criteria"]["tfab"]["criterion"], "tfab");
    EXPECT_TRUE(j.contains("oracle"));
}

TEST(Builtins, Registry)
{
    std::vector<std::string> names;
    for (const auto& e : builtin_examples())
        names.push_back(e.name);
    EXPECT_EQ(names, (std::vector<std::string>{"heisenberg-phi1", "heisenberg-phi2", "heisenberg-z",
                                               "heisenberg-z-half-anosov", "ut4-integer"}));
    EXPECT_FALSE(find_builtin("nope"));
    for (const auto& e : builtin_examples()) {
        const CheckReport r = report_for(e.document);
        EXPECT_TRUE(r.consistent()) << e.name;
        EXPECT_EQ(r.name, e.name);
    }
    const CheckReport anosov = report_for(find_builtin("heisenberg-z-half-anosov")->document);
    EXPECT_EQ(anosov.verdicts.central.conclusion, Conclusion::automorphism);
    EXPECT_EQ(anosov.pi, (std::vector<Prime>{2}));
    EXPECT_GT(anosov.cross_checks.roots_checked, 0u);
}
