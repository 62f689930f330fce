#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <mutex>
#include <thread>

#include "gqlbench/bench/driver.hpp"

using namespace gqlbench;
using nlohmann::json;

namespace {

// Minimal stand-in endpoint: records arrival order, answers a fixed envelope
// after an optional delay.
class StubEndpoint {
public:
    explicit StubEndpoint(double delayMs = 0, std::string body = R"({"data":{}})")
        : delayMs_(delayMs), body_(std::move(body)) {
        svr_.Post("/graphql", [this](const httplib::Request& req,
                                     httplib::Response& res) {
            {
                std::lock_guard lk(mu_);
                json b = json::parse(req.body);
                seen_.push_back(b.value("operationName", ""));
            }
            if (delayMs_ > 0)
                std::this_thread::sleep_for(
                    std::chrono::duration<double, std::milli>(delayMs_));
            res.set_content(body_, "application/json");
        });
        svr_.set_tcp_nodelay(true);
        port_ = svr_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { svr_.listen_after_bind(); });
        svr_.wait_until_ready();
    }
    ~StubEndpoint() {
        svr_.stop();
        thread_.join();
    }

    Endpoint endpoint() const { return Endpoint{"127.0.0.1", port_, "/graphql", 5}; }
    std::vector<std::string> seen() const {
        std::lock_guard lk(mu_);
        return seen_;
    }

private:
    httplib::Server svr_;
    std::thread thread_;
    int port_ = 0;
    double delayMs_;
    std::string body_;
    mutable std::mutex mu_;
    std::vector<std::string> seen_;
};

QueryInstance qi(const std::string& instance, const std::string& tmpl) {
    return {instance, tmpl, "query { f }", json::object()};
}

}  // namespace

TEST_CASE("single client wraps around the workload in order") {
    StubEndpoint stub;
    std::vector<QueryInstance> workload{qi("q1", "T"), qi("q2", "T"), qi("q3", "T")};
    auto run = run_one_throughput_run(stub.endpoint(), workload, 1, 0.3);
    REQUIRE(run.records.size() >= 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(run.records[i].instanceId == workload[i % 3].instanceId);
        CHECK(run.records[i].errorCode == 0);
        CHECK(run.records[i].qrtMs <= run.records[i].qetMs + 1e-9);
    }
    CHECK(run.completed == static_cast<std::int64_t>(run.records.size()));
}

TEST_CASE("workload splits round-robin across clients") {
    StubEndpoint stub;
    std::vector<QueryInstance> workload{qi("q0", "T"), qi("q1", "T"), qi("q2", "T"),
                                        qi("q3", "T")};
    auto run = run_one_throughput_run(stub.endpoint(), workload, 2, 0.3);
    REQUIRE(run.records.size() >= 8);
    std::vector<std::vector<std::string>> perClient(2);
    for (const auto& r : run.records) {
        REQUIRE(r.clientId >= 0);
        REQUIRE(r.clientId < 2);
        perClient[static_cast<std::size_t>(r.clientId)].push_back(r.instanceId);
    }
    // client 0 cycles q0,q2; client 1 cycles q1,q3
    REQUIRE(perClient[0].size() >= 2);
    REQUIRE(perClient[1].size() >= 2);
    for (std::size_t i = 0; i < perClient[0].size(); ++i)
        CHECK(perClient[0][i] == (i % 2 == 0 ? "q0" : "q2"));
    for (std::size_t i = 0; i < perClient[1].size(); ++i)
        CHECK(perClient[1][i] == (i % 2 == 0 ? "q1" : "q3"));
}

TEST_CASE("completed count tracks the analytic bound for a fixed-delay endpoint") {
    StubEndpoint stub(10.0);
    std::vector<QueryInstance> workload{qi("q1", "T")};
    auto run = run_one_throughput_run(stub.endpoint(), workload, 1, 1.0);
    // 1 s of strictly sequential 10 ms responses: ~100 minus overhead
    CHECK(run.completed >= 50);
    CHECK(run.completed <= 101);
}

TEST_CASE("multi-run protocol separates warm-up from measured runs") {
    StubEndpoint stub;
    std::vector<QueryInstance> workload{qi("q1", "T")};
    ThroughputOptions opts;
    opts.clients = 1;
    opts.durationSeconds = 0.1;
    opts.runs = 6;
    opts.warmupRuns = 1;
    auto res = run_throughput(stub.endpoint(), workload, opts, "T");
    REQUIRE(res.runs.size() == 6);
    CHECK(res.runs[0].warmup);
    for (std::size_t i = 1; i < 6; ++i) CHECK(!res.runs[i].warmup);
    CHECK(res.aTP.kind == "aTPt");
    CHECK(res.aTP.stat.n == 5);  // averaged over exactly the measured runs

    ThroughputOptions bad = opts;
    bad.warmupRuns = 6;
    CHECK_THROWS(run_throughput(stub.endpoint(), workload, bad, "T"));
}

TEST_CASE("latency driver walks templates round-robin") {
    StubEndpoint stub;
    std::vector<std::vector<QueryInstance>> perTemplate{
        {qi("T1q1", "T1"), qi("T1q2", "T1")},
        {qi("T2q1", "T2"), qi("T2q2", "T2")},
        {qi("T3q1", "T3"), qi("T3q2", "T3")},
    };
    LatencyOptions opts;
    opts.interQueryWaitMs = 1;
    auto records = run_latency(stub.endpoint(), perTemplate, opts);
    REQUIRE(records.size() == 6);
    const char* expected[] = {"T1q1", "T2q1", "T3q1", "T1q2", "T2q2", "T3q2"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(records[i].instanceId == expected[i]);
        CHECK(records[i].errorCode == 0);
        CHECK(records[i].qrtMs <= records[i].qetMs + 1e-9);
    }

    SECTION("uneven template lists skip exhausted templates") {
        std::vector<std::vector<QueryInstance>> uneven{
            {qi("A1", "A"), qi("A2", "A")},
            {qi("B1", "B")},
        };
        auto rs = run_latency(stub.endpoint(), uneven, opts);
        REQUIRE(rs.size() == 3);
        CHECK(rs[0].instanceId == "A1");
        CHECK(rs[1].instanceId == "B1");
        CHECK(rs[2].instanceId == "A2");
    }

    SECTION("single template, single instance gives exactly one record") {
        std::vector<std::vector<QueryInstance>> one{{qi("only", "T")}};
        CHECK(run_latency(stub.endpoint(), one, opts).size() == 1);
    }
}

TEST_CASE("error classification") {
    SECTION("GraphQL errors in the envelope map to errorCode 3") {
        StubEndpoint stub(0, R"({"errors":[{"message":"boom"}]})");
        std::vector<QueryInstance> workload{qi("q1", "T")};
        auto run = run_one_throughput_run(stub.endpoint(), workload, 1, 0.1);
        REQUIRE(!run.records.empty());
        CHECK(run.records[0].errorCode == 3);
        CHECK(run.completed == 0);
    }
    SECTION("unreachable endpoint maps to errorCode 1") {
        Endpoint dead{"127.0.0.1", 1, "/graphql", 1};
        auto cli = make_client(dead);
        auto rec = issue_query(*cli, dead, qi("q1", "T"), 0);
        CHECK(rec.errorCode == 1);
    }
}
