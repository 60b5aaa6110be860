#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "hopfcalc/verification.hpp"

using namespace hopfcalc;

namespace {

SuiteConfig tiny_config() {
    SuiteConfig cfg;
    cfg.n = 2;
    cfg.k = 2;
    cfg.l = 2;
    cfg.max_degree = 8;
    return cfg;
}

}  // namespace

TEST_CASE("registry lists the twelve checks in suite order") {
    std::vector<std::string> names;
    for (const CheckEntry& e : check_registry()) names.emplace_back(e.name);
    REQUIRE(names == std::vector<std::string>{"lemma22", "lemma23-oracle", "lemma33", "lemma34",
                                              "lemma35", "remark36", "theorem38", "prop314",
                                              "example316", "beta-idempotent", "witt-agreement",
                                              "decomposition"});
}

TEST_CASE("the whole suite passes at a reduced grid and anchors are pinned") {
    std::vector<VerificationReport> reports = run_suite(tiny_config());
    REQUIRE(reports.size() == 12);
    REQUIRE(all_pass(reports));

    std::map<std::string, std::string> anchors;
    for (const VerificationReport& r : reports) anchors[r.check] = r.anchor;
    REQUIRE(anchors.at("lemma22") == "Lemma 2.2");
    REQUIRE(anchors.at("lemma23-oracle") == "Lemma 2.3");
    REQUIRE(anchors.at("lemma33") == "Lemma 3.3");
    REQUIRE(anchors.at("lemma34") == "Lemma 3.4");
    REQUIRE(anchors.at("lemma35") == "Lemma 3.5");
    REQUIRE(anchors.at("remark36") == "Remark 3.6");
    REQUIRE(anchors.at("theorem38") == "Theorem 3.8");
    REQUIRE(anchors.at("prop314") == "Proposition 3.14");
    REQUIRE(anchors.at("example316") == "Example 3.16");
    REQUIRE(anchors.at("beta-idempotent") == "Section 4");
    REQUIRE(anchors.at("witt-agreement") == "Section 4");
    REQUIRE(anchors.at("decomposition") == "Theorem 1.6 / Corollary 4.1 / Corollary 4.2");
}

TEST_CASE("selection semantics: empty runs nothing, names run in registry order") {
    SuiteConfig cfg = tiny_config();
    REQUIRE(run_suite(cfg, {}).empty());

    std::vector<VerificationReport> two = run_suite(cfg, {"example316", "remark36"});
    REQUIRE(two.size() == 2);
    REQUIRE(two[0].check == "remark36");
    REQUIRE(two[1].check == "example316");

    REQUIRE_THROWS_AS(run_suite(cfg, {"bogus"}), std::invalid_argument);
    REQUIRE_THROWS_AS(run_suite(cfg, {"remark36", "lemma99"}), std::invalid_argument);
}

TEST_CASE("config validation enforces the hard caps") {
    SuiteConfig cfg;
    cfg.n = 11;
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.k = 4;
    cfg.l = 3;
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.max_degree = 0;
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.order_policy = "bogus";
    REQUIRE_THROWS_AS(validate_config(cfg), std::invalid_argument);

    cfg = SuiteConfig{};
    cfg.order_policy = "lex";
    REQUIRE_NOTHROW(validate_config(cfg));
}

TEST_CASE("json output is byte-identical across reruns with the same seed") {
    SuiteConfig cfg;
    cfg.n = 3;
    cfg.max_degree = 12;
    std::vector<std::string> sel{"lemma33", "remark36", "example316", "decomposition"};
    std::string first = emit_json(run_suite(cfg, sel));
    std::string second = emit_json(run_suite(cfg, sel));
    REQUIRE(first == second);
    REQUIRE(first.find("\"verdict\": \"pass\"") != std::string::npos);
    REQUIRE(first.find("\"verdict\": \"fail\"") == std::string::npos);
    REQUIRE(first.find("\"duration_ms\": 0") != std::string::npos);

    // a different seed must not change the verdicts
    SuiteConfig reseeded = cfg;
    reseeded.seed = 987654321;
    REQUIRE(all_pass(run_suite(reseeded, sel)));
}

TEST_CASE("a corrupted shuffle enumeration order leaves prop314 green") {
    SuiteConfig cfg;
    cfg.n = 4;
    cfg.k = 2;
    cfg.l = 2;
    cfg.shuffle_order = ShuffleOrder::scrambled;
    std::vector<VerificationReport> reports = run_suite(cfg, {"prop314"});
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].pass);
    bool saw_param = false;
    for (const auto& [k, v] : reports[0].params)
        if (k == "shuffle_order") saw_param = v == "scrambled";
    REQUIRE(saw_param);
}

TEST_CASE("text emitter prints one status line per report") {
    VerificationReport ok;
    ok.check = "lemma23-oracle";
    ok.anchor = "Lemma 2.3";
    ok.params = {{"n", "8"}, {"k", "3"}};
    ok.pass = true;
    ok.duration_ms = 412;
    REQUIRE(emit_text({ok}) == "PASS lemma23-oracle n=8 k=3 [Lemma 2.3] (412 ms)\n");

    VerificationReport bad;
    bad.check = "lemma22";
    bad.anchor = "Lemma 2.2";
    bad.params = {{"n", "2"}};
    bad.pass = false;
    bad.counterexample = {{"identity", "(3) ring"}};
    bad.lhs_ring = {{"1", "1"}, {"e(1)", "2"}};
    bad.rhs_ring = {{"1", "1"}};
    std::string text = emit_text({bad});
    REQUIRE(text.find("FAIL lemma22 n=2 [Lemma 2.2]") == 0);
    REQUIRE(text.find("    identity: (3) ring\n") != std::string::npos);
    REQUIRE(text.find("    lhs: 1*1 2*e(1)\n") != std::string::npos);
    REQUIRE(text.find("    rhs: 1*1\n") != std::string::npos);
}

TEST_CASE("json emitter carries counterexample rings on failures") {
    VerificationReport bad;
    bad.check = "lemma34";
    bad.anchor = "Lemma 3.4";
    bad.params = {{"n", "3"}};
    bad.pass = false;
    bad.duration_ms = 55;
    bad.counterexample = {{"a", "g(1)^2"}, {"y", "g(2)"}};
    bad.lhs_ring = {{"1", "1"}, {"e(1)(2)", "-3"}};
    bad.rhs_ring = {{"1", "1"}};
    std::string js = emit_json({bad});
    REQUIRE(js.front() == '[');
    REQUIRE(js.substr(js.size() - 2) == "]\n");
    REQUIRE(js.find("\"check\": \"lemma34\"") != std::string::npos);
    REQUIRE(js.find("\"anchor\": \"Lemma 3.4\"") != std::string::npos);
    REQUIRE(js.find("\"verdict\": \"fail\"") != std::string::npos);
    REQUIRE(js.find("\"duration_ms\": 0") != std::string::npos);
    REQUIRE(js.find("\"counterexample\": {") != std::string::npos);
    REQUIRE(js.find("\"a\": \"g(1)^2\"") != std::string::npos);
    REQUIRE(js.find("\"lhs_ring\": {") != std::string::npos);
    REQUIRE(js.find("\"e(1)(2)\": \"-3\"") != std::string::npos);
    REQUIRE(js.find("\"rhs_ring\": {") != std::string::npos);

    // escaping of control and quote characters in values
    VerificationReport esc;
    esc.check = "x";
    esc.anchor = "y";
    esc.pass = false;
    esc.counterexample = {{"msg", "a\"b\\c\nd"}};
    std::string out = emit_json({esc});
    REQUIRE(out.find("a\\\"b\\\\c\\nd") != std::string::npos);
}

TEST_CASE("emit dispatches on the format name") {
    VerificationReport ok;
    ok.check = "remark36";
    ok.anchor = "Remark 3.6";
    ok.pass = true;
    std::vector<VerificationReport> rs{ok};
    REQUIRE(emit(rs, "text") == emit_text(rs));
    REQUIRE(emit(rs, "json") == emit_json(rs));
    REQUIRE_THROWS_AS(emit(rs, "yaml"), std::invalid_argument);
}

TEST_CASE("all_pass reflects any failure") {
    VerificationReport a, b;
    a.pass = true;
    b.pass = false;
    REQUIRE(all_pass({a}));
    REQUIRE_FALSE(all_pass({a, b}));
    REQUIRE(all_pass({}));
}
