#include <doctest.h>

#include "affs/errors.hpp"
#include "affs/verify.hpp"

using namespace affs;

TEST_CASE("harness tallies and witnesses") {
    Harness h("custom", 3, 1);
    h.record("always", true, [] { return json::object(); });
    h.record("sometimes", false, [] { return json{{"x", 1}}; });
    h.guarded("throws", json{{"y", 2}}, []() -> bool { throw IdentityFailed("boom"); });
    const auto& rep = h.report();
    CHECK(!rep.ok());
    CHECK(rep.total_failed() == 2);
    REQUIRE(rep.witnesses.size() == 2);
    CHECK(rep.witnesses[0]["check"] == "sometimes");
    CHECK(rep.witnesses[1]["y"] == 2);
    CHECK(rep.witnesses[1]["error"].get<std::string>().find("boom") != std::string::npos);
    CHECK(rep.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("witness lists are capped") {
    Harness h("custom", 3, 1);
    for (int i = 0; i < 100; ++i) h.record("p", false, [i] { return json{{"i", i}}; });
    CHECK(h.report().propositions.front().failed == 100);
    CHECK(!h.report().witnesses.empty());
    CHECK(h.report().witnesses.size() < 100);
}

TEST_CASE("suites run clean and are deterministic") {
    for (const char* suite : {"lengths", "bruhat", "kappa", "varpi"}) {
        const auto a = run_suite(suite, 4, 9);
        CHECK_MESSAGE(a.ok(), a.to_text());
        CHECK(a.to_json().dump() == run_suite(suite, 4, 9).to_json().dump());
    }
    CHECK_THROWS_AS(run_suite("nope", 3, 1), InvalidInput);
    CHECK_THROWS_AS(run_suite("kappa", 0, 1), InvalidInput);
}

TEST_CASE("the combined suite covers every operation") {
    const auto rep = run_suite("all", 3, 7);
    CHECK_MESSAGE(rep.ok(), rep.to_text());
    CHECK(rep.missing_operations.empty());
    for (const auto& op : covered_operation_names()) CHECK_MESSAGE(rep.operations.count(op), op);
}
