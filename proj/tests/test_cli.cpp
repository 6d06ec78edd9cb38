#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"
#include "syzlab/runner.hpp"

using namespace syzlab;

namespace {

const char* kExampleSession = R"(label R_ex
ring char 32003 vars x, y, z ideal x^2, x*y, y^2*z
option bound 4
let W = cok([[y],[z]])
let M = subq([[y,0],[0,z]], [[y],[z]])
verify cor_3_8 bound=4
invariants M
)";

std::string temp_dir(const std::string& tag)
{
    auto p = std::filesystem::temp_directory_path() / ("syzlab-test-" + tag);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p.string();
}

}  // namespace

TEST_CASE("parse_session", "[cli]")
{
    SECTION("the example ring declaration")
    {
        Session s = parse_session("ring char 32003 vars x,y,z ideal x^2, x*y, y^2*z");
        REQUIRE(s.has_ring);
        REQUIRE(s.ring.characteristic == 32003);
        REQUIRE(s.ring.vars == std::vector<std::string>{"x", "y", "z"});
        REQUIRE(s.ring.ideal.size() == 3);
    }
    SECTION("module bindings parse")
    {
        Session s = parse_session(kExampleSession);
        REQUIRE(s.bindings.size() == 2);
        REQUIRE(s.bindings[1].first == "M");
        REQUIRE(s.bindings[1].second->kind == ModExpr::Kind::subq);
        REQUIRE(s.bindings[1].second->m1.rows() == 2);
        REQUIRE(s.bindings[1].second->m2.cols() == 1);
    }
    SECTION("empty ideal clause gives the polynomial ring")
    {
        Session s = parse_session("ring char 101 vars x, y ideal\nverify cor_3_8");
        REQUIRE(s.ring.ideal.empty());
        REQUIRE(s.commands.size() == 1);
    }
    SECTION("parse errors carry positions")
    {
        try {
            parse_session("ring char 32003 vars x ideal x^2\nlet M = cok([[x],)");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 2);
            REQUIRE(e.col() > 0);
        }
    }
    SECTION("nonhomogeneous ideals are rejected")
    {
        REQUIRE_THROWS_MATCHES(parse_session("ring char 32003 vars x, y ideal x^2 + y"), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == Errc::parse_error &&
                                          std::string(e.what()).find("NONHOMOGENEOUS_IDEAL") !=
                                              std::string::npos;
                               }));
    }
    SECTION("unknown names are rejected at parse time")
    {
        REQUIRE_THROWS_MATCHES(
            parse_session("ring char 32003 vars x ideal x^2\nlet M = tr(unbound)"), Error,
            Catch::Matchers::Predicate<Error>([](const Error& e) {
                return std::string(e.what()).find("UNKNOWN_NAME") != std::string::npos;
            }));
        REQUIRE_THROWS_AS(parse_session("ring char 32003 vars x ideal x^2\ninvariants nothing"),
                          ParseError);
    }
    SECTION("duplicate bindings are rejected")
    {
        REQUIRE_THROWS_AS(
            parse_session("ring char 32003 vars x ideal x^2\nlet M = free(1)\nlet M = free(2)"),
            ParseError);
        REQUIRE_THROWS_AS(parse_session("ring char 32003 vars x ideal x^2\nlet k = free(1)"),
                          ParseError);
    }
    SECTION("unknown theorem ids are rejected")
    {
        REQUIRE_THROWS_AS(parse_session("ring char 32003 vars x ideal x^2\nverify thm_9_9"),
                          ParseError);
        REQUIRE_THROWS_AS(
            parse_session("ring char 32003 vars x ideal x^2\nverify cor_3_8 bnd=6"), ParseError);
    }
}

TEST_CASE("session print/parse round trip", "[cli]")
{
    const char* sources[] = {
        kExampleSession,
        "ring char 101 vars a, b ideal a^2\n"
        "let X = dsum(free(2), residue_field)\n"
        "let Y = ext(X, X, 1)\n"
        "let Z = dual(syz(Y, 2))\n"
        "resolve Z 3\n"
        "ext_table X Y 2\n"
        "verify thm_3_6 M=X bound=5\n",
        "ring char 32003 vars x, y ideal\nverify cor_3_9 bound=2\n",
    };
    for (const char* src : sources) {
        Session s1 = parse_session(src);
        std::string printed = print_session(s1);
        Session s2 = parse_session(printed);
        REQUIRE(s1 == s2);
        REQUIRE(print_session(s2) == printed);
    }
}

TEST_CASE("run_command fragments", "[cli]")
{
    SECTION("invariants of the residue field over S")
    {
        RunResult r = run_session_text("label S_2\n"
                                       "ring char 32003 vars x, y ideal\n"
                                       "option bound 3\n"
                                       "invariants residue_field\n",
                                       {});
        REQUIRE(r.human.find("depth 2") != std::string::npos);
        REQUIRE(r.human.find("betti: 1 2 1 0") != std::string::npos);
        REQUIRE_FALSE(r.any_fail());
    }
    SECTION("resolve is deterministic across reruns")
    {
        std::string src = "ring char 32003 vars x, y, z ideal x^2, x*y, y^2*z\n"
                          "let M = subq([[y,0],[0,z]], [[y],[z]])\n"
                          "resolve M 4\n";
        RunResult a = run_session_text(src, {});
        RunResult b = run_session_text(src, {});
        REQUIRE(a.human == b.human);
        REQUIRE(a.human.find("betti:") != std::string::npos);
    }
    SECTION("failing checks flip the exit contract")
    {
        std::string src = "ring char 32003 vars x, y ideal x^2, x*y, y^2\n"
                          "verify cor_3_8 bound=4 corrupt=1\n";
        RunResult r = run_session_text(src, {});
        REQUIRE(r.any_fail());
        REQUIRE(r.machine.find("FAIL") != std::string::npos);
    }
    SECTION("empty command list gives an empty report")
    {
        RunResult r = run_session_text("ring char 32003 vars x ideal x^2\n", {});
        REQUIRE(r.machine.empty());
        REQUIRE_FALSE(r.any_fail());
    }
}

TEST_CASE("machine report determinism", "[cli]")
{
    std::string src = "label R_2\n"
                      "ring char 32003 vars x, y ideal x^2, x*y, y^2\n"
                      "option bound 4\n"
                      "verify cor_3_8\nverify remark_3_7 M=R\nverify cor_3_9 bound=2\n";
    RunResult a = run_session_text(src, {});
    RunResult b = run_session_text(src, {});
    REQUIRE(a.machine == b.machine);
    REQUIRE(a.human == b.human);
    REQUIRE(a.machine.find("cor_3_8\tR_2") != std::string::npos);
}

TEST_CASE("resolution cache files reload bit-exactly", "[cli]")
{
    auto R = testsup::ring_R2();
    Resolution res(residue_field(R));
    res.extend(3);
    std::string text = serialize_resolution(res);
    auto parsed = parse_resolution(text, R);
    REQUIRE(parsed.has_value());
    REQUIRE(serialize_resolution(*parsed) == text);
    // extension from the reloaded state matches a fresh computation
    parsed->extend(5);
    Resolution fresh(residue_field(R));
    fresh.extend(5);
    REQUIRE(serialize_resolution(*parsed) == serialize_resolution(fresh));
    // a foreign ring is rejected
    REQUIRE_FALSE(parse_resolution(text, testsup::ring_Rg()).has_value());
}

TEST_CASE("cache soundness", "[cli]")
{
    std::string dir = temp_dir("cache");
    std::string src = "label R_2\n"
                      "ring char 32003 vars x, y ideal x^2, x*y, y^2\n"
                      "option bound 4\n"
                      "let Trk = tr(residue_field)\n"
                      "verify cor_3_8\nresolve Trk 4\n";
    RunOptions opt;
    opt.cache_dir = dir;
    RunResult cold = run_session_text(src, opt);
    REQUIRE_FALSE(std::filesystem::is_empty(dir));
    RunResult warm = run_session_text(src, opt);
    RunResult nocache = run_session_text(src, {});
    REQUIRE(cold.machine == warm.machine);
    REQUIRE(cold.human == warm.human);
    REQUIRE(cold.human == nocache.human);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corpus aggregation", "[cli]")
{
    std::string dir = temp_dir("corpus");
    {
        std::ofstream a(std::filesystem::path(dir) / "a.syz");
        a << "label R_g\nring char 32003 vars x, y ideal x^2, y^2\nverify cor_3_8 bound=3\n";
        std::ofstream b(std::filesystem::path(dir) / "b.syz");
        b << "label S_2\nring char 32003 vars x, y ideal\nverify cor_3_8 bound=3\n";
    }
    RunOptions opt;
    RunResult one = run_corpus(dir, opt);
    opt.jobs = 2;
    RunResult two = run_corpus(dir, opt);
    REQUIRE(one.machine == two.machine);
    REQUIRE(one.human == two.human);
    REQUIRE(one.per_theorem.at("cor_3_8").first == 2);
    REQUIRE(one.human.find("corpus summary") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corpus as a session command", "[cli]")
{
    std::string dir = temp_dir("nested");
    {
        std::ofstream a(std::filesystem::path(dir) / "inner.syz");
        a << "label R_g\nring char 32003 vars x, y ideal x^2, y^2\nverify cor_3_8 bound=2\n";
    }
    RunResult r = run_session_text("corpus " + dir + "\n", {});
    REQUIRE_FALSE(r.any_fail());
    REQUIRE(r.per_theorem.at("cor_3_8").first == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("option overrides", "[cli]")
{
    std::string src = "ring char 32003 vars x, y ideal x^2, x*y, y^2\nverify cor_3_8\n";
    RunOptions opt;
    opt.bound_override = 3;
    RunResult r = run_session_text(src, opt);
    // bound 3 keeps the tail at a single index i = 3
    REQUIRE(r.machine.find("Ext^3") != std::string::npos);
    REQUIRE(r.machine.find("Ext^4") == std::string::npos);

    RunOptions opt2;
    opt2.char_override = 101;
    RunResult r2 = run_session_text(src, opt2);
    REQUIRE_FALSE(r2.any_fail());
}
