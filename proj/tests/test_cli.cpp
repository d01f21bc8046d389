#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lkd/cli.hpp"

using namespace lkd;

namespace {

std::string output(const RunConfig& c, int& code) {
    std::ostringstream os;
    code = run(c, os);
    return os.str();
}

}  // namespace

TEST_CASE("subspace problem config") {
    RunConfig c = parse_config(
        R"({"field":"Q","problem":{"type":"subspaces","E_dim":2,"F1":[[1,0]],"F2":[[0,1]]},"window":{"i":[-4,4],"j":[-8,8]},"command":"intersect"})");
    CHECK(c.field == FieldSpec::rationals());
    CHECK(c.window == Window{-4, 4, -8, 8});
    CHECK(c.command == "intersect");
    REQUIRE(std::holds_alternative<SubspaceProblem>(c.problem));
    int code = -1;
    std::string out = output(c, code);
    CHECK(code == 0);
    CHECK(out.find("# table primal\n0\t0\t1\n") != std::string::npos);
    CHECK(out.find("PASS oracle[primal]") != std::string::npos);
}

TEST_CASE("map config with rational entries") {
    RunConfig c = parse_config(R"({"field":"Q","problem":{"type":"map","V_dim":1,"W_dim":2,"f":[[1],["-2/3"]]},"command":"cohomology"})");
    const auto& d = std::get<TwoTermData>(c.problem);
    CHECK(d.V_dim == 1);
    CHECK(d.W_dim == 2);
    CHECK(d.f.at(1, 0) == Scalar(mpq_class(-2, 3)));
}

TEST_CASE("input errors name the offending field") {
    auto message = [](const char* text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"field":{"Fp":4},"problem":{"type":"map","V_dim":0,"W_dim":0}})").find("4 is not prime") != std::string::npos);
    CHECK(message(R"({"field":"Q","problem":{"type":"map","V_dim":1,"W_dim":2,"f":[[1]]}})").find("problem.f") != std::string::npos);
    CHECK(message(R"({"field":"Q","problem":{"type":"map","V_dim":2,"W_dim":1,"f":[[1]]}})").find("problem.f[0]") != std::string::npos);
    CHECK(message(R"({"field":"Q","problem":{"type":"subspaces","E_dim":2,"F1":[[1,0],[2,0]],"F2":[]}})").find("F1") != std::string::npos);
    CHECK(message(R"({"field":"Q","problem":{"type":"map","V_dim":0,"W_dim":0},"window":{"i":[2,1],"j":[0,0]}})").find("window.i") !=
          std::string::npos);
    CHECK(message(R"({"field":"F2","problem":{"type":"map","V_dim":1,"W_dim":1,"f":[["1/2"]]}})").find("problem.f[0][0]") !=
          std::string::npos);
    CHECK(message("{\"field\": \n 1,,}").find("malformed JSON") != std::string::npos);
    CHECK(message(R"({"field":"Q"})").find("config.problem") != std::string::npos);
}

TEST_CASE("flags") {
    CHECK(parse_window("-1,2,-3,4") == Window{-1, 2, -3, 4});
    CHECK(parse_cell("2,-4") == Window{2, 2, -4, -4});
    CHECK_THROWS_AS(parse_window("1,2,3"), ConfigError);
    CHECK_THROWS_AS(parse_cell("a,b"), ConfigError);
    RunConfig c = parse_config(R"({"field":"Q","problem":{"type":"map","V_dim":0,"W_dim":0}})");
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.command = "nonsense";
    CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("commands pass and repeat byte for byte") {
    RunConfig c = parse_config(R"({"field":"F2","problem":{"type":"map","V_dim":1,"W_dim":2,"f":[[1],[0]]},"max_rank":2,"count":3})");
    for (const char* cmd : {"check-axioms", "koszul-lemmas", "roundtrip", "cohomology", "kappa"}) {
        CAPTURE(cmd);
        c.command = cmd;
        int a = -1;
        int b = -1;
        std::string first = output(c, a);
        CHECK(a == 0);
        CHECK(first == output(c, b));
        c.format = OutputFormat::Json;
        CHECK(output(c, a).find("\"status\":\"PASS\"") != std::string::npos);
        c.format = OutputFormat::Tsv;
    }
    c.command = "intersect";
    CHECK_THROWS_AS(run(c, std::cout), ConfigError);
}

TEST_CASE("unknown objects are input errors") {
    RunConfig c = parse_config(R"({"field":"Q","problem":{"type":"map","V_dim":1,"W_dim":1,"f":[[1]]},"command":"cohomology","object":"nothing"})");
    CHECK_THROWS_WITH_AS(run(c, std::cout), doctest::Contains("object"), ConfigError);
}
