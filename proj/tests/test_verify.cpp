#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/core/types.hpp"
#include "../src/core/verify.hpp"

#include <string>

using namespace riccati;

TEST_CASE("every advertised suite runs green") {
    for (const std::string& name : verify::suite_names()) {
        CAPTURE(name);
        verify::Report rep = verify::run_suite(name);
        CHECK(rep.suite == name);
        CHECK_FALSE(rep.checks.empty());
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass);
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(verify::run_suite("nope"), Error);
    try {
        verify::run_suite("nope");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("higher resonances pass the oscillator-pair suite") {
    verify::Options opt;
    opt.n1 = 1;
    opt.n2 = 2;
    CHECK(verify::run_suite("superint-oscillator", opt).all_pass);
    opt.n1 = 2;
    opt.n2 = 3;
    CHECK(verify::run_suite("superint-oscillator", opt).all_pass);
}

TEST_CASE("json rendering carries the full report structure") {
    verify::Report rep = verify::run_suite("energy");
    std::string json = verify::to_json(rep);
    CHECK(json.find("\"suite\"") != std::string::npos);
    CHECK(json.find("\"energy\"") != std::string::npos);
    CHECK(json.find("\"checks\"") != std::string::npos);
    CHECK(json.find("\"tolerance\"") != std::string::npos);
    CHECK(json.find("\"all_pass\"") != std::string::npos);
}

TEST_CASE("a fixed seed makes the random sweeps reproducible") {
    verify::Options opt;
    opt.seed = 12345;
    std::string a = verify::to_json(verify::run_suite("hamiltonian", opt));
    std::string b = verify::to_json(verify::run_suite("hamiltonian", opt));
    CHECK(a == b);
}
