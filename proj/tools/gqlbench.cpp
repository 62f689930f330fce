// Command-line front end: dataset generation, workload generation, the
// reference server, the benchmark drivers, and offline metric reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gqlbench/bench/driver.hpp"
#include "gqlbench/bench/metrics.hpp"
#include "gqlbench/datagen.hpp"
#include "gqlbench/metadata.hpp"
#include "gqlbench/server/http.hpp"
#include "gqlbench/sql.hpp"
#include "gqlbench/workload.hpp"

namespace fs = std::filesystem;
using namespace gqlbench;

namespace {

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    os << content;
}

std::string read_file(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// Every command drops a key=value manifest beside its outputs so any result
// can be regenerated from the recorded parameters.
void write_manifest(const fs::path& dir, const std::string& name,
                    const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << k << "=" << v << "\n";
    write_file(dir / name, os.str());
}

std::map<std::string, std::string> read_manifest(const fs::path& p) {
    std::map<std::string, std::string> kv;
    std::istringstream is(read_file(p));
    std::string line;
    while (std::getline(is, line)) {
        auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

Endpoint parse_endpoint(const std::string& url) {
    // accepts http://host:port[/path]
    std::string rest = url;
    const std::string scheme = "http://";
    if (rest.rfind(scheme, 0) == 0) rest = rest.substr(scheme.size());
    Endpoint ep;
    auto slash = rest.find('/');
    std::string hostPort = slash == std::string::npos ? rest : rest.substr(0, slash);
    if (slash != std::string::npos) ep.path = rest.substr(slash);
    auto colon = hostPort.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("endpoint needs host:port, got " + url);
    ep.host = hostPort.substr(0, colon);
    ep.port = std::stoi(hostPort.substr(colon + 1));
    return ep;
}

DatasetMetadata load_metadata(const std::string& metadataFile, int sf,
                              std::uint64_t seed) {
    if (!metadataFile.empty()) return parse_metadata(read_file(metadataFile));
    return emit_metadata(generate(ScaleFactor{sf}, seed));
}

std::vector<QueryTemplate> select_templates(const std::vector<std::string>& names) {
    if (names.empty() || (names.size() == 1 && names[0] == "all"))
        return builtin_templates();
    std::vector<QueryTemplate> ts;
    for (const auto& n : names) ts.push_back(find_template(n));
    return ts;
}

void print_throughput(const ThroughputResult& res) {
    for (std::size_t i = 0; i < res.runs.size(); ++i) {
        const auto& r = res.runs[i];
        std::cout << "run " << i << (r.warmup ? " (warm-up)" : "") << ": completed="
                  << r.completed << " failed=" << (r.records.size() -
                       static_cast<std::size_t>(r.completed))
                  << " abandoned=" << r.abandoned << "\n";
    }
    std::cout << "aTPt mean=" << res.aTP.stat.mean << " stddev=" << res.aTP.stat.stddev
              << " n=" << res.aTP.stat.n << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GraphQL server benchmark toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file");

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "generate a dataset: SQL dump + metadata");
    int gSf = 1;
    std::uint64_t gSeed = 42;
    std::string gDialect = "postgres";
    std::string gOut = ".";
    gen->add_option("--sf", gSf, "scale factor (number of universities)");
    gen->add_option("--seed", gSeed, "generator seed");
    gen->add_option("--dialect", gDialect, "postgres or mysql");
    gen->add_option("--out-dir", gOut)->envname("GQLBENCH_OUT_DIR");

    // ---- queries ----
    auto* qs = app.add_subcommand("queries", "instantiate query templates into workload files");
    int qSf = 1;
    std::uint64_t qSeed = 42, qQuerySeed = 7;
    std::string qMeta, qOut = ".";
    std::vector<std::string> qTemplates;
    std::int64_t qN = 5000;
    bool qMixed = false;
    qs->add_option("--sf", qSf);
    qs->add_option("--seed", qSeed, "dataset seed (when no metadata file given)");
    qs->add_option("--metadata", qMeta, "metadata file from 'generate'");
    qs->add_option("--template", qTemplates, "template ids, or 'all'");
    qs->add_option("--n", qN, "instances per template (capped by availability)");
    qs->add_option("--query-seed", qQuerySeed);
    qs->add_flag("--mixed", qMixed, "one shuffled mixed workload instead of per-template files");
    qs->add_option("--out-dir", qOut)->envname("GQLBENCH_OUT_DIR");

    // ---- serve ----
    auto* srv = app.add_subcommand("serve", "run the reference GraphQL server");
    int sSf = 1, sPort = 8080, sPool = 10, sService = 2, sWorkers = 64;
    std::uint64_t sSeed = 42;
    double sLatency = 1.0;
    std::string sMode = "naive", sHost = "127.0.0.1", sManifest;
    srv->add_option("--sf", sSf);
    srv->add_option("--seed", sSeed);
    srv->add_option("--dataset-manifest", sManifest,
                    "manifest from 'generate'; its sf/seed regenerate the dataset");
    srv->add_option("--mode", sMode, "naive, cache, batch, or batch-cache");
    srv->add_option("--latency-ms", sLatency, "simulated per-request backend latency");
    srv->add_option("--pool", sPool, "backend connection pool size");
    srv->add_option("--service-parallelism", sService,
                    "simulated backend service slots");
    srv->add_option("--http-workers", sWorkers);
    srv->add_option("--host", sHost);
    srv->add_option("--port", sPort);

    // ---- bench-throughput ----
    auto* bt = app.add_subcommand("bench-throughput", "timed throughput runs");
    std::string btEndpoint = "http://127.0.0.1:8080/graphql", btWorkload, btOut = ".";
    int btClients = 1, btRuns = 6, btWarmup = 1;
    double btDuration = 60;
    bt->add_option("--endpoint", btEndpoint)->envname("GQLBENCH_ENDPOINT");
    bt->add_option("--workload", btWorkload, "workload file from 'queries'")->required();
    bt->add_option("--clients", btClients);
    bt->add_option("--duration", btDuration, "seconds per run");
    bt->add_option("--runs", btRuns);
    bt->add_option("--warmup-runs", btWarmup);
    bt->add_option("--out-dir", btOut)->envname("GQLBENCH_OUT_DIR");

    // ---- bench-latency ----
    auto* bl = app.add_subcommand("bench-latency", "round-robin per-query latency");
    std::string blEndpoint = "http://127.0.0.1:8080/graphql", blOut = ".";
    std::vector<std::string> blWorkloads;
    double blWait = 1000;
    bl->add_option("--endpoint", blEndpoint)->envname("GQLBENCH_ENDPOINT");
    bl->add_option("--workload", blWorkloads,
                   "workload files; queries are grouped by template")->required();
    bl->add_option("--wait-ms", blWait, "pause after each response");
    bl->add_option("--out-dir", blOut)->envname("GQLBENCH_OUT_DIR");

    // ---- report ----
    auto* rp = app.add_subcommand("report", "recompute metrics from records CSVs");
    std::vector<std::string> rpRecords;
    bool rpPerQuery = false;
    std::vector<double> rpRunCounts;
    rp->add_option("--records", rpRecords, "records CSV files");
    rp->add_flag("--per-query", rpPerQuery, "also print per-query aQETq/aQRTq");
    rp->add_option("--run-counts", rpRunCounts,
                   "per-run completion counts for an aTP report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            fs::create_directories(gOut);
            Dataset ds = generate(ScaleFactor{gSf}, gSeed);
            auto violations = validate(ds);
            if (!violations.empty()) {
                for (const auto& v : violations)
                    std::cerr << v.entity << ": " << v.rule << " (" << v.observed << ")\n";
                return 1;
            }
            SqlDialect dialect = parse_dialect(gDialect);
            std::string tag = "sf" + std::to_string(gSf);
            write_file(fs::path(gOut) / ("dataset-" + tag + ".sql"),
                       emit_sql_string(ds, dialect));
            write_file(fs::path(gOut) / ("metadata-" + tag + ".txt"),
                       metadata_to_string(emit_metadata(ds)));
            write_manifest(gOut, "manifest-generate-" + tag + ".txt",
                           {{"command", "generate"},
                            {"sf", std::to_string(gSf)},
                            {"seed", std::to_string(gSeed)},
                            {"dialect", gDialect}});
            std::cout << "wrote dataset-" << tag << ".sql and metadata-" << tag
                      << ".txt (" << ds.total_entities() << " entities)\n";
        } else if (*qs) {
            fs::create_directories(qOut);
            DatasetMetadata md = load_metadata(qMeta, qSf, qSeed);
            auto templates = select_templates(qTemplates);
            if (qMixed) {
                auto wl = compose_mixed(templates, qN, md, qQuerySeed);
                write_file(fs::path(qOut) / "workload-mixed.tsv", workload_to_string(wl));
                std::cout << "wrote workload-mixed.tsv (" << wl.size() << " queries)\n";
            } else {
                for (const auto& t : templates) {
                    std::int64_t n = std::min(qN, count_instances(t, md));
                    auto wl = instantiate(t, md, n, qQuerySeed);
                    write_file(fs::path(qOut) / ("workload-" + t.id + ".tsv"),
                               workload_to_string(wl));
                    std::cout << "wrote workload-" << t.id << ".tsv (" << wl.size()
                              << " queries)\n";
                }
            }
            std::vector<std::string> tnames;
            for (const auto& t : templates) tnames.push_back(t.id);
            std::ostringstream tl;
            for (std::size_t i = 0; i < tnames.size(); ++i)
                tl << (i ? "," : "") << tnames[i];
            write_manifest(qOut, "manifest-queries.txt",
                           {{"command", "queries"},
                            {"sf", std::to_string(md.scaleFactor)},
                            {"seed", std::to_string(md.seed)},
                            {"querySeed", std::to_string(qQuerySeed)},
                            {"perTemplate", std::to_string(qN)},
                            {"mixed", qMixed ? "true" : "false"},
                            {"templates", tl.str()}});
        } else if (*srv) {
            if (!sManifest.empty()) {
                auto kv = read_manifest(sManifest);
                sSf = std::stoi(kv.at("sf"));
                sSeed = std::stoull(kv.at("seed"));
            }
            DataSourceConfig cfg;
            cfg.perRequestLatencyMs = sLatency;
            cfg.poolSize = sPool;
            cfg.serviceParallelism = sService;
            GraphQLServer server(generate(ScaleFactor{sSf}, sSeed), cfg,
                                 parse_exec_mode(sMode), sWorkers);
            int port = server.start(sHost, sPort);
            std::cout << "serving sf=" << sSf << " seed=" << sSeed << " mode=" << sMode
                      << " on http://" << sHost << ":" << port << "/graphql\n"
                      << std::flush;
            // foreground until killed
            while (true) std::this_thread::sleep_for(std::chrono::seconds(3600));
        } else if (*bt) {
            fs::create_directories(btOut);
            Endpoint ep = parse_endpoint(btEndpoint);
            auto workload = parse_workload(read_file(btWorkload));
            ThroughputOptions opts{btClients, btDuration, btRuns, btWarmup};
            ThroughputResult res = run_throughput(ep, workload, opts);
            for (std::size_t i = 0; i < res.runs.size(); ++i) {
                const auto& r = res.runs[i];
                write_file(fs::path(btOut) / ("run-" + std::to_string(i) + ".csv"),
                           records_to_csv(r.records));
                RunSummary sum = summarize(r.records);
                sum.abandoned = r.abandoned;
                sum.durationSeconds = btDuration;
                sum.clients = btClients;
                sum.endpoint = btEndpoint;
                write_file(fs::path(btOut) / ("summary-" + std::to_string(i) + ".txt"),
                           summary_to_string(sum));
            }
            write_manifest(btOut, "manifest-throughput.txt",
                           {{"command", "bench-throughput"},
                            {"endpoint", btEndpoint},
                            {"workload", btWorkload},
                            {"clients", std::to_string(btClients)},
                            {"durationSeconds", std::to_string(btDuration)},
                            {"runs", std::to_string(btRuns)},
                            {"warmupRuns", std::to_string(btWarmup)}});
            print_throughput(res);
        } else if (*bl) {
            fs::create_directories(blOut);
            Endpoint ep = parse_endpoint(blEndpoint);
            std::map<std::string, std::vector<QueryInstance>> grouped;
            std::vector<std::string> order;
            for (const auto& f : blWorkloads)
                for (auto& q : parse_workload(read_file(f))) {
                    if (!grouped.count(q.templateId)) order.push_back(q.templateId);
                    grouped[q.templateId].push_back(std::move(q));
                }
            std::vector<std::vector<QueryInstance>> perTemplate;
            for (const auto& t : order) perTemplate.push_back(grouped[t]);
            auto records = run_latency(ep, perTemplate, {blWait});
            write_file(fs::path(blOut) / "latency-records.csv", records_to_csv(records));
            write_manifest(blOut, "manifest-latency.txt",
                           {{"command", "bench-latency"},
                            {"endpoint", blEndpoint},
                            {"waitMs", std::to_string(blWait)}});
            for (const auto& m : per_query_means(records, false))
                std::cout << "aQETq " << m.subject << " mean=" << m.stat.mean
                          << " stddev=" << m.stat.stddev << " n=" << m.stat.n << "\n";
            std::cout << "wrote latency-records.csv (" << records.size() << " records)\n";
        } else if (*rp) {
            std::vector<MeasurementRecord> records;
            for (const auto& f : rpRecords) {
                auto part = records_from_csv(read_file(f));
                records.insert(records.end(), part.begin(), part.end());
            }
            if (!records.empty()) {
                for (const auto& m : per_template_distributions(records))
                    std::cout << "QETt " << m.subject << " n=" << m.stat.n
                              << " mean=" << m.stat.mean << " stddev=" << m.stat.stddev
                              << " p0=" << m.dist.p0 << " p25=" << m.dist.p25
                              << " p50=" << m.dist.p50 << " p75=" << m.dist.p75
                              << " p100=" << m.dist.p100 << "\n";
                if (rpPerQuery) {
                    for (const auto& m : per_query_means(records, false))
                        std::cout << "aQETq " << m.subject << " mean=" << m.stat.mean
                                  << " stddev=" << m.stat.stddev << "\n";
                    for (const auto& m : per_query_means(records, true))
                        std::cout << "aQRTq " << m.subject << " mean=" << m.stat.mean
                                  << " stddev=" << m.stat.stddev << "\n";
                }
                RunSummary sum = summarize(records);
                std::cout << "totals succeeded=" << sum.total_succeeded()
                          << " failed=" << sum.total_failed() << "\n";
            }
            if (!rpRunCounts.empty()) {
                MetricReport tp = throughput_report("aTP", "runs", rpRunCounts);
                std::cout << "aTP mean=" << tp.stat.mean << " stddev=" << tp.stat.stddev
                          << " n=" << tp.stat.n << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
