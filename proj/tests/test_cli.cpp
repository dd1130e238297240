#include <cstdlib>
#include <random>

#include "doctest.h"
#include "golden_io.hpp"
#include "ribbonmod/report.hpp"

using namespace ribbonmod;
using golden::run;

TEST_CASE("golden outputs") {
    for (const auto& c : golden::cases())
        for (const auto& [fmt, ext] : golden::formats()) {
            auto args = c.args;
            args.insert(args.end(), {"--format", fmt});
            auto r = run(args);
            CAPTURE(c.stem);
            CAPTURE(fmt);
            CHECK(r.code == 0);
            CHECK(r.out == golden::read(c.stem + "." + ext));
            CHECK(run(args).out == r.out);
        }
}

TEST_CASE("components json content") {
    auto r = run({"components", "--gbar", "2", "--delta", "2", "--rank", "3", "--degree", "0", "--format", "json"});
    auto j = Json::parse(r.out);
    CHECK(j["status"] == "conjectural");
    REQUIRE(j["components"].size() == 2);
    CHECK(j["components"][1]["r0"] == 2);
    CHECK(j["components"][1]["d0"] == 1);
    CHECK(j["components"][1]["dimension"] == 10);
    CHECK(j["query"]["rank"] == 3);
}

TEST_CASE("jobs does not change output") {
    std::vector<std::string> base{"components", "--gbar", "5", "--delta", "4", "--rank", "7", "--degree", "3"};
    auto one = run(base);
    auto more = base;
    more.insert(more.end(), {"--jobs", "4"});
    CHECK(run(more).out == one.out);
}

TEST_CASE("component budget") {
    std::vector<std::string> args{"components", "--gbar", "2", "--delta", "4", "--rank", "3", "--degree", "0"};
    auto ok = args;
    ok.insert(ok.end(), {"--max-components", "3"});
    CHECK(run(ok).code == cli::kOk);
    auto tight = args;
    tight.insert(tight.end(), {"--max-components", "2"});
    CHECK(run(tight).code == cli::kDomain);
}

TEST_CASE("deg-n alias") {
    auto a = run({"components", "--gbar", "2", "--deg-n", "-2", "--rank", "3", "--degree", "0", "--format", "csv"});
    auto b = run({"components", "--gbar", "2", "--delta", "2", "--rank", "3", "--degree", "0", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto both = run({"components", "--gbar", "2", "--deg-n", "-2", "--delta", "2", "--rank", "3", "--degree", "0"});
    CHECK(both.code == cli::kUsage);
}

TEST_CASE("rank3 table") {
    auto r = run({"rank3", "--delta", "3", "--d0", "0", "--format", "csv"});
    CHECK(r.out == "d0,d1,verdict\n0,-3,StrictlySemistable\n0,-2,Stable\n0,0,StrictlySemistable\n");
    auto n = run({"rank3", "--deg-n", "-3", "--d0", "0", "--format", "csv"});
    CHECK(n.out == r.out);
}

TEST_CASE("verify-lemmas") {
    auto r = run({"verify-lemmas", "--samples", "2000", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 counterexamples") != std::string::npos);
    CHECK(run({"verify-lemmas", "--samples", "0"}).code == cli::kUsage);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"components", "--gbar", "2", "--delta", "2", "--bogus"}).code == cli::kUsage);
    CHECK(run({"components", "--gbar", "2", "--rank", "3", "--degree", "0"}).code == cli::kUsage);
    CHECK(run({"components", "--gbar", "1", "--delta", "2", "--rank", "3", "--degree", "0"}).code == cli::kDomain);
    CHECK(run({"invariants", "--gbar", "2", "--delta", "1", "--gvb-rank", "1", "--degree", "0", "--index", "0"}).code ==
          cli::kIntegrality);
    CHECK(run({"dim", "gvb", "--gbar", "2", "--delta", "0", "--r", "1"}).code == cli::kDomain);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("other subcommands run") {
    CHECK(run({"invariants", "--gbar", "2", "--delta", "1", "--r0", "2", "--r1", "1", "--d0", "1", "--d1", "-1"}).code ==
          0);
    CHECK(run({"exists", "qlf", "--gbar", "2", "--delta", "1", "--r0", "2", "--r1", "1", "--d0", "3", "--d1", "1"})
              .code == 0);
    CHECK(run({"exists", "L", "--gbar", "2", "--delta", "2", "--n", "1", "--index", "1", "--d0", "3", "--d1", "0",
               "--cross-check"})
              .code == 0);
    CHECK(run({"dim", "stratum", "--gbar", "2", "--delta", "4", "--n", "1", "--parts", "2,1"}).code == 0);
    CHECK(run({"blowup", "--gbar", "2", "--delta", "3", "--index", "2"}).code == 0);
    auto s = run({"strata", "--gbar", "2", "--delta", "5", "--n", "1", "--index", "3", "--format", "csv"});
    CHECK(s.code == 0);
    CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4); // header plus p(3) rows
}

TEST_CASE("integer robustness within one million") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> any(-1'000'000, 1'000'000);
    auto num = [&] { return std::to_string(any(rng)); };
    for (int i = 0; i < 60; ++i) {
        std::vector<std::vector<std::string>> calls{
            {"invariants", "--gbar", num(), "--delta", num(), "--r0", num(), "--r1", num(), "--d0", num(), "--d1", num()},
            {"exists", "qlf", "--gbar", num(), "--delta", num(), "--r0", num(), "--r1", num(), "--d0", num(), "--d1",
             num()},
            {"exists", "rigid", "--gbar", num(), "--delta", num(), "--a", num(), "--d0", num(), "--d1", num()},
            {"exists", "gvb", "--gbar", num(), "--delta", num(), "--r", num(), "--index", num()},
            {"exists", "L", "--gbar", num(), "--delta", num(), "--n", num(), "--index", num(), "--d0", num(), "--d1",
             num(), "--cross-check"},
            {"exists", "vb", "--gbar", num(), "--delta", num(), "--rank", num(), "--degree", num()},
            {"exists", "deform", "--gbar", num(), "--delta", num(), "--rank", num(), "--degree", num()},
            {"dim", "qlf", "--gbar", num(), "--delta", num(), "--r0", num(), "--r1", num()},
            {"dim", "rigid", "--gbar", num(), "--delta", num(), "--a", num()},
            {"dim", "vb", "--gbar", num(), "--delta", num(), "--rank", num(), "--degree", num()},
            {"dim", "gvb", "--gbar", num(), "--delta", num(), "--r", num()},
            {"dim", "L", "--gbar", num(), "--delta", num(), "--n", num(), "--index", num()},
            {"components", "--gbar", num(), "--delta", num(), "--rank", num(), "--degree", num()},
            {"rank3", "--delta", num(), "--d0", num()},
            {"blowup", "--gbar", num(), "--delta", num(), "--index", num()},
            {"strata", "--gbar", num(), "--delta", num(), "--n", num(), "--index", num()},
        };
        for (const auto& args : calls) {
            auto r = run(args);
            CAPTURE(args.front());
            CHECK((r.code == cli::kOk || r.code == cli::kDomain || r.code == cli::kIntegrality));
        }
    }
}
