#pragma once

#include <atomic>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "gqlbench/gql/parser.hpp"
#include "gqlbench/gql/schema.hpp"
#include "gqlbench/gql/validate.hpp"
#include "gqlbench/server/datasource.hpp"
#include "gqlbench/server/executor.hpp"

namespace gqlbench {

// HTTP front end: POST /graphql with {"query","variables"}, GET /stats,
// POST /stats/reset. Query execution errors use the conventional errors
// envelope with HTTP 200; only malformed request bodies get a 400.
class GraphQLServer {
public:
    GraphQLServer(Dataset ds, DataSourceConfig cfg, ExecMode mode,
                  int httpWorkers = 64)
        : src_(std::move(ds), cfg), mode_(mode), schema_(gql::benchmark_schema()) {
        svr_.set_tcp_nodelay(true);
        svr_.new_task_queue = [httpWorkers] {
            return new httplib::ThreadPool(static_cast<std::size_t>(httpWorkers));
        };

        svr_.Post("/graphql", [this](const httplib::Request& req,
                                     httplib::Response& res) {
            handle_graphql(req, res);
        });

        svr_.Get("/stats", [this](const httplib::Request&, httplib::Response& res) {
            res.set_content(stats_json().dump(), "application/json");
        });

        svr_.Post("/stats/reset", [this](const httplib::Request&,
                                         httplib::Response& res) {
            src_.reset_stats();
            totalQueries_.store(0, std::memory_order_relaxed);
            res.set_content("{}", "application/json");
        });
    }

    ExecMode mode() const { return mode_; }
    DataSource& data_source() { return src_; }

    // Binds an ephemeral port (or the given one) and serves on a background
    // thread until stop().
    int start(const std::string& host = "127.0.0.1", int port = 0) {
        if (port == 0) {
            port_ = svr_.bind_to_any_port(host);
            if (port_ < 0) throw std::runtime_error("failed to bind a port");
        } else {
            if (!svr_.bind_to_port(host, port))
                throw std::runtime_error("failed to bind port " + std::to_string(port));
            port_ = port;
        }
        thread_ = std::thread([this] { svr_.listen_after_bind(); });
        svr_.wait_until_ready();
        return port_;
    }

    int port() const { return port_; }

    void stop() {
        if (thread_.joinable()) {
            svr_.stop();
            thread_.join();
        }
    }

    ~GraphQLServer() { stop(); }

    nlohmann::json stats_json() const {
        return {{"totalBackendRequests", src_.total_requests()},
                {"totalBatchedKeys", src_.total_keys()},
                {"poolMaxInFlight", src_.pool_max_in_flight()},
                {"totalQueries", totalQueries_.load(std::memory_order_relaxed)},
                {"mode", exec_mode_name(mode_)}};
    }

    // Request handling is also usable without a socket (direct call in tests).
    nlohmann::json handle_body(const nlohmann::json& body) {
        using nlohmann::json;
        if (!body.is_object() || !body.contains("query") || !body["query"].is_string())
            throw std::invalid_argument("body must be an object with a 'query' string");
        json vars = body.value("variables", json::object());
        gql::QueryDoc doc;
        try {
            doc = gql::parse(body["query"].get<std::string>());
        } catch (const gql::ParseError& e) {
            return errors_envelope(e.what());
        }
        auto issues = gql::validate(schema_, doc);
        if (!issues.empty()) {
            json errs = json::array();
            for (const auto& i : issues)
                errs.push_back({{"message", i.message}, {"path", i.path}});
            return json{{"errors", errs}};
        }
        try {
            auto [data, stats] = execute(src_, doc, vars, mode_);
            (void)stats;
            totalQueries_.fetch_add(1, std::memory_order_relaxed);
            return json{{"data", data}};
        } catch (const ExecError& e) {
            return errors_envelope(e.what());
        }
    }

private:
    static nlohmann::json errors_envelope(const std::string& msg) {
        return {{"errors", nlohmann::json::array({{{"message", msg}}})}};
    }

    void handle_graphql(const httplib::Request& req, httplib::Response& res) {
        nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
        if (body.is_discarded()) {
            res.status = 400;
            res.set_content(errors_envelope("request body is not valid JSON").dump(),
                            "application/json");
            return;
        }
        try {
            res.set_content(handle_body(body).dump(), "application/json");
        } catch (const std::invalid_argument& e) {
            res.status = 400;
            res.set_content(errors_envelope(e.what()).dump(), "application/json");
        }
    }

    DataSource src_;
    ExecMode mode_;
    gql::Schema schema_;
    httplib::Server svr_;
    std::thread thread_;
    std::atomic<std::uint64_t> totalQueries_{0};
    int port_ = -1;
};

}  // namespace gqlbench
