#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "json.hpp"

#include "gqlbench/bench/metrics.hpp"
#include "gqlbench/workload.hpp"

namespace gqlbench {

namespace bench_detail {

using Clock = std::chrono::steady_clock;

inline double ms_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

}  // namespace bench_detail

struct Endpoint {
    std::string host = "127.0.0.1";
    int port = 0;
    std::string path = "/graphql";
    double timeoutSeconds = 30;
};

// Issues one query and measures QET (complete result received) and QRT
// (first result bytes received) on a monotonic clock.
inline MeasurementRecord issue_query(httplib::Client& cli, const Endpoint& ep,
                                     const QueryInstance& q, int clientId) {
    using bench_detail::Clock;
    MeasurementRecord rec;
    rec.instanceId = q.instanceId;
    rec.templateId = q.templateId;
    rec.clientId = clientId;

    nlohmann::json body = {{"query", q.queryText}, {"variables", q.variables}};

    httplib::Request req;
    req.method = "POST";
    req.path = ep.path;
    req.body = body.dump();
    req.set_header("Content-Type", "application/json");

    std::string payload;
    Clock::time_point firstByte{};
    bool gotByte = false;
    req.content_receiver = [&](const char* data, std::size_t n, std::uint64_t,
                               std::uint64_t) {
        if (!gotByte) {
            firstByte = Clock::now();
            gotByte = true;
        }
        payload.append(data, n);
        return true;
    };

    const Clock::time_point start = Clock::now();
    httplib::Result result = cli.send(req);
    const Clock::time_point end = Clock::now();

    rec.qetMs = bench_detail::ms_between(start, end);
    rec.qrtMs = gotByte ? bench_detail::ms_between(start, firstByte) : rec.qetMs;

    if (!result) {
        bool timedOut = result.error() == httplib::Error::ConnectionTimeout ||
                        rec.qetMs >= ep.timeoutSeconds * 1000.0;
        rec.errorCode = timedOut ? 2 : 1;
        return rec;
    }
    if (result->status != 200) {
        rec.errorCode = 3;
        return rec;
    }
    auto parsed = nlohmann::json::parse(payload, nullptr, false);
    if (parsed.is_discarded() ||
        (parsed.contains("errors") && !parsed["errors"].empty()))
        rec.errorCode = 3;
    return rec;
}

inline std::unique_ptr<httplib::Client> make_client(const Endpoint& ep) {
    auto cli = std::make_unique<httplib::Client>(ep.host, ep.port);
    auto secs = static_cast<time_t>(ep.timeoutSeconds);
    auto usecs = static_cast<time_t>((ep.timeoutSeconds - static_cast<double>(secs)) * 1e6);
    cli->set_connection_timeout(secs, usecs);
    cli->set_read_timeout(secs, usecs);
    cli->set_keep_alive(true);
    cli->set_tcp_nodelay(true);  // Nagle + delayed ACK costs ~40 ms per request on loopback
    return cli;
}

// ---- throughput driver ----

struct ThroughputOptions {
    int clients = 1;
    double durationSeconds = 60;
    int runs = 6;
    int warmupRuns = 1;
};

struct ThroughputRun {
    std::vector<MeasurementRecord> records;
    std::int64_t completed = 0;  // success records
    std::int64_t abandoned = 0;  // in flight at the deadline; not counted
    bool warmup = false;
};

struct ThroughputResult {
    std::vector<ThroughputRun> runs;
    MetricReport aTP;  // mean completed per measured run, with stddev
};

// One timed run: the workload sequence is split round-robin across clients
// (client i gets queries i, i+k, i+2k, ...); each client issues its
// subsequence strictly sequentially and wraps around until the deadline.
inline ThroughputRun run_one_throughput_run(const Endpoint& ep,
                                            const std::vector<QueryInstance>& workload,
                                            int clients, double durationSeconds) {
    using bench_detail::Clock;
    if (workload.empty()) throw std::invalid_argument("workload is empty");
    if (clients < 1) throw std::invalid_argument("clients must be >= 1");

    ThroughputRun run;
    std::vector<std::vector<MeasurementRecord>> perClient(
        static_cast<std::size_t>(clients));
    std::vector<std::int64_t> abandoned(static_cast<std::size_t>(clients), 0);
    const Clock::time_point deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(durationSeconds));

    std::vector<std::thread> threads;
    for (int c = 0; c < clients; ++c) {
        threads.emplace_back([&, c] {
            auto cli = make_client(ep);
            auto& out = perClient[static_cast<std::size_t>(c)];
            std::size_t i = static_cast<std::size_t>(c);
            while (Clock::now() < deadline) {
                const QueryInstance& q = workload[i % workload.size()];
                MeasurementRecord rec = issue_query(*cli, ep, q, c);
                if (Clock::now() > deadline) {
                    // completed after the deadline: abandoned, not counted
                    ++abandoned[static_cast<std::size_t>(c)];
                    break;
                }
                out.push_back(std::move(rec));
                i += static_cast<std::size_t>(clients);
            }
        });
    }
    for (auto& t : threads) t.join();

    for (int c = 0; c < clients; ++c) {
        auto& v = perClient[static_cast<std::size_t>(c)];
        run.records.insert(run.records.end(), std::make_move_iterator(v.begin()),
                           std::make_move_iterator(v.end()));
        run.abandoned += abandoned[static_cast<std::size_t>(c)];
    }
    for (const auto& r : run.records)
        if (r.errorCode == 0) ++run.completed;
    return run;
}

inline ThroughputResult run_throughput(const Endpoint& ep,
                                       const std::vector<QueryInstance>& workload,
                                       const ThroughputOptions& opts,
                                       const std::string& subject = "workload") {
    if (opts.runs < 1 || opts.warmupRuns < 0 || opts.warmupRuns >= opts.runs)
        throw std::invalid_argument("need runs >= 1 and 0 <= warmupRuns < runs");
    ThroughputResult res;
    std::vector<double> measured;
    for (int r = 0; r < opts.runs; ++r) {
        ThroughputRun run = run_one_throughput_run(ep, workload, opts.clients,
                                                   opts.durationSeconds);
        run.warmup = r < opts.warmupRuns;
        if (!run.warmup) measured.push_back(static_cast<double>(run.completed));
        res.runs.push_back(std::move(run));
    }
    res.aTP = throughput_report("aTPt", subject, measured);
    return res;
}

// ---- latency driver ----

struct LatencyOptions {
    double interQueryWaitMs = 1000;
};

// Round-robin over templates: instance 1 of every template, then instance 2
// of every template, and so on; waits after each response; one record per
// instance. Template instance lists may have different lengths.
inline std::vector<MeasurementRecord> run_latency(
    const Endpoint& ep, const std::vector<std::vector<QueryInstance>>& perTemplate,
    const LatencyOptions& opts = {}) {
    std::vector<MeasurementRecord> records;
    auto cli = make_client(ep);
    std::size_t maxLen = 0;
    for (const auto& v : perTemplate) maxLen = std::max(maxLen, v.size());
    for (std::size_t i = 0; i < maxLen; ++i) {
        for (const auto& v : perTemplate) {
            if (i >= v.size()) continue;
            records.push_back(issue_query(*cli, ep, v[i], 0));
            if (opts.interQueryWaitMs > 0)
                std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(
                    opts.interQueryWaitMs));
        }
    }
    return records;
}

}  // namespace gqlbench
