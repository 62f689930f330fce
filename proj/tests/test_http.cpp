#include <catch2/catch_amalgamated.hpp>

#include "gqlbench/datagen.hpp"
#include "gqlbench/metadata.hpp"
#include "gqlbench/server/http.hpp"
#include "gqlbench/workload.hpp"

using namespace gqlbench;
using nlohmann::json;

namespace {
DataSourceConfig fast_cfg() {
    DataSourceConfig cfg;
    cfg.perRequestLatencyMs = 0;
    return cfg;
}
}  // namespace

TEST_CASE("server answers queries and accounts backend requests") {
    GraphQLServer server(generate(ScaleFactor{1}, 42), fast_cfg(), ExecMode::Naive);
    int port = server.start();
    httplib::Client cli("127.0.0.1", port);

    auto md = emit_metadata(server.data_source().dataset());
    auto xs = instantiate(find_template("QT3"), md, 5, 42);

    auto post = [&](const json& body) {
        auto res = cli.Post("/graphql", body.dump(), "application/json");
        REQUIRE(res);
        return res;
    };

    // reset, run N three-hop queries, expect exactly 4N backend requests
    REQUIRE(cli.Post("/stats/reset", "", "application/json"));
    for (const auto& q : xs) {
        auto res = post({{"query", q.queryText}, {"variables", q.variables}});
        CHECK(res->status == 200);
        json body = json::parse(res->body);
        REQUIRE(body.contains("data"));
        CHECK(!body.contains("errors"));
        CHECK(!body.at("data").at("publication").is_null());
    }
    auto stats = json::parse(cli.Get("/stats")->body);
    CHECK(stats.at("totalBackendRequests").get<std::uint64_t>() == 4 * xs.size());
    CHECK(stats.at("totalQueries").get<std::uint64_t>() == xs.size());
    CHECK(stats.at("mode").get<std::string>() == "naive");

    SECTION("stats reset zeroes the counters") {
        REQUIRE(cli.Post("/stats/reset", "", "application/json"));
        auto zeroed = json::parse(cli.Get("/stats")->body);
        CHECK(zeroed.at("totalBackendRequests").get<std::uint64_t>() == 0);
        CHECK(zeroed.at("totalQueries").get<std::uint64_t>() == 0);
    }

    SECTION("invalid JSON body is a transport-level 400") {
        auto res = cli.Post("/graphql", "{not json", "application/json");
        REQUIRE(res);
        CHECK(res->status == 400);
    }

    SECTION("malformed body shape is a 400") {
        auto res = cli.Post("/graphql", R"({"nope": 1})", "application/json");
        REQUIRE(res);
        CHECK(res->status == 400);
    }

    SECTION("parse and validation problems come back as a GraphQL error envelope") {
        auto res = post({{"query", "{ university(nr:1) { bogusField } }"}});
        CHECK(res->status == 200);
        json body = json::parse(res->body);
        REQUIRE(body.contains("errors"));
        REQUIRE(!body.at("errors").empty());
        CHECK(body.at("errors")[0].contains("message"));

        auto res2 = post({{"query", "{ broken"}});
        CHECK(res2->status == 200);
        CHECK(json::parse(res2->body).contains("errors"));
    }

    SECTION("missing variables surface as GraphQL errors, not crashes") {
        auto res = post({{"query", xs[0].queryText}});
        CHECK(res->status == 200);
        CHECK(json::parse(res->body).contains("errors"));
    }

    server.stop();
}

TEST_CASE("execution modes are selectable per server instance") {
    GraphQLServer server(generate(ScaleFactor{1}, 42), fast_cfg(), ExecMode::Batch);
    int port = server.start();
    httplib::Client cli("127.0.0.1", port);

    auto md = emit_metadata(server.data_source().dataset());
    auto q = instantiate(find_template("QT5"), md, 1, 42).at(0);
    auto res = cli.Post("/graphql",
                        json({{"query", q.queryText}, {"variables", q.variables}}).dump(),
                        "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    auto stats = json::parse(cli.Get("/stats")->body);
    CHECK(stats.at("mode").get<std::string>() == "batch");
    CHECK(stats.at("totalBackendRequests").get<std::uint64_t>() <= 4);
    server.stop();
}
