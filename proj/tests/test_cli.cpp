#include "zdense/cli.hpp"
#include "zdense/error.hpp"
#include "zdense/finite_field.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>

using namespace zdense;
using namespace zdense::cli;

namespace {

std::string fixture(const std::string& name)
{
    return std::string(ZDENSE_FIXTURES) + "/" + name;
}

int run_binary(const std::string& args)
{
    const std::string cmd = std::string(ZDENSE_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

RunConfig config_for(const std::string& name, Mode mode, std::uint64_t seed = 1)
{
    RunConfig c;
    c.input_path = fixture(name);
    c.mode = mode;
    c.seed = seed;
    return c;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("input parsing")
    {
        const Input sl = parse_input_text(R"({"group": "SL", "dim": 2, "generators": [[[0, -1], [1, 0]]]})");
        REQUIRE(std::holds_alternative<GeneratorSet>(sl));
        CHECK(std::get<GeneratorSet>(sl).kind() == GroupKind::SpecialLinear);

        const Input big = parse_input_text(R"({"poly": ["-1", "-1", 0, "1"]})");
        REQUIRE(std::holds_alternative<IntPolynomial>(big));
        CHECK(std::get<IntPolynomial>(big) == IntPolynomial { -1, -1, 0, 1 });

        const Input plain = parse_input_text("1 0 1\n");
        REQUIRE(std::holds_alternative<IntPolynomial>(plain));
        CHECK(std::get<IntPolynomial>(plain) == IntPolynomial { 1, 0, 1 });

        CHECK_THROWS_AS(parse_input_text(R"({"poly": [1.5, 1]})"), InvalidArgument);
        CHECK_THROWS_AS(parse_input_text(R"({"group": "GL", "dim": 2, "generators": [[[1,0],[0,1]]]})"), Error);
        CHECK_THROWS_AS(parse_input_text(R"({"group": "Sp", "dim": 3, "generators": [[[1,0,0],[0,1,0],[0,0,1]]]})"),
            ValidationError);
        CHECK_THROWS_AS(parse_input_text("{\"group\": "), Error);
        CHECK(parse_mode("adjoint") == Mode::Adjoint);
        CHECK_THROWS_AS(parse_mode("fast"), InvalidArgument);
    }

    TEST_CASE("exit codes of the binary")
    {
        CHECK(run_binary(fixture("sl2_st.json") + " --seed 42") == 0);
        CHECK(run_binary(fixture("sl3_heisenberg.json") + " --seed 42") == 1);
        CHECK(run_binary(fixture("sl2_commuting.json") + " --seed 42") == 1);
        CHECK(run_binary(fixture("sp3_odd.json")) == 2);
        CHECK(run_binary(fixture("malformed.json")) == 2);
        CHECK(run_binary(fixture("missing.json")) == 2);
        CHECK(run_binary(fixture("sl2_st.json") + " --epsilon 2") == 2);
        CHECK(run_binary(fixture("sl2_st.json") + " --mode adjoint --seed 42") == 0);
        CHECK(run_binary(fixture("x2_plus_1.txt") + " --mode galois") == 0);
        CHECK(run_binary(fixture("phi5.json") + " --mode galois") == 1);
        CHECK(run_binary(fixture("hyperoctahedral_quartic.json") + " --mode galois") == 0);
    }

    TEST_CASE("report witnesses are checkable")
    {
        const RunOutcome out = run(config_for("hyperoctahedral_quartic.json", Mode::GaloisOnly));
        REQUIRE(out.exit_code == kDense);
        const auto& g = out.report["trials"][0]["galois"];
        CHECK(g["answer"] == "ConfirmedHyperoctahedral");
        const IntPolynomial f { 1, 3, 1, 3, 1 };
        for (const auto& w : g["witnesses"]) {
            std::vector<unsigned> degrees = w["degrees"].get<std::vector<unsigned>>();
            CHECK(factor_degrees_mod(f, w["prime"].get<std::uint64_t>()) == DegreeMultiset(degrees));
        }
        CHECK(out.report["verdict"]["positive"] == true);
    }

    TEST_CASE("identical seeds give identical reports")
    {
        for (const char* name : { "sl2_st.json", "sl3_heisenberg.json", "sp4_standard.json" }) {
            RunConfig c = config_for(name, Mode::Weyl, 7);
            c.trials = 3;
            const auto a = strip_timings(run(c).report).dump();
            const auto b = strip_timings(run(c).report).dump();
            CHECK(a == b);
            CHECK(a.find("timings_ms") == std::string::npos);
        }
    }

    TEST_CASE("trial seeds")
    {
        CHECK(trial_seed(5, 0) == 5);
        CHECK(trial_seed(5, 1) != trial_seed(5, 2));
    }
}
