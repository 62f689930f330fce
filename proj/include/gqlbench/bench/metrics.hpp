#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqlbench {

struct MeasurementRecord {
    std::string instanceId;
    std::string templateId;
    int clientId = 0;
    double qetMs = 0;   // send start to complete result received
    double qrtMs = 0;   // send start to first result bytes
    int errorCode = 0;  // 0 ok, 1 transport, 2 timeout, 3 graphql errors
};

struct MeanStddev {
    double mean = 0;
    double stddev = 0;  // sample standard deviation; 0 for n < 2
    std::size_t n = 0;
};

inline MeanStddev mean_stddev(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean of an empty sample");
    MeanStddev r;
    r.n = xs.size();
    double sum = 0;
    for (double x : xs) sum += x;
    r.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - r.mean) * (x - r.mean);
        r.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return r;
}

// Linear-interpolation quantile over the sorted sample (the common
// "inclusive" definition: rank = q * (n - 1)).
inline double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) throw std::invalid_argument("quantile of an empty sample");
    if (q < 0 || q > 1) throw std::invalid_argument("quantile out of [0,1]");
    std::sort(xs.begin(), xs.end());
    double rank = q * static_cast<double>(xs.size() - 1);
    auto lo = static_cast<std::size_t>(rank);
    std::size_t hi = std::min(lo + 1, xs.size() - 1);
    double frac = rank - static_cast<double>(lo);
    return xs[lo] + (xs[hi] - xs[lo]) * frac;
}

struct Distribution {
    double p0 = 0, p25 = 0, p50 = 0, p75 = 0, p100 = 0;
    std::vector<double> raw;
};

inline Distribution distribution(std::vector<double> xs) {
    Distribution d;
    d.p0 = quantile(xs, 0.0);
    d.p25 = quantile(xs, 0.25);
    d.p50 = quantile(xs, 0.5);
    d.p75 = quantile(xs, 0.75);
    d.p100 = quantile(xs, 1.0);
    std::sort(xs.begin(), xs.end());
    d.raw = std::move(xs);
    return d;
}

// ---- records CSV ----

inline const char* kRecordsCsvHeader = "instance_id,template_id,client_id,qet_ms,qrt_ms,error_code";

inline std::string records_to_csv(const std::vector<MeasurementRecord>& rs) {
    std::ostringstream os;
    os << kRecordsCsvHeader << "\n";
    for (const auto& r : rs)
        os << r.instanceId << ',' << r.templateId << ',' << r.clientId << ','
           << r.qetMs << ',' << r.qrtMs << ',' << r.errorCode << '\n';
    return os.str();
}

inline std::vector<MeasurementRecord> records_from_csv(const std::string& text) {
    std::vector<MeasurementRecord> out;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kRecordsCsvHeader)
        throw std::runtime_error("records CSV missing the expected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 6)
            throw std::runtime_error("records CSV row needs 6 cells: " + line);
        MeasurementRecord r;
        r.instanceId = cells[0];
        r.templateId = cells[1];
        r.clientId = std::stoi(cells[2]);
        r.qetMs = std::stod(cells[3]);
        r.qrtMs = std::stod(cells[4]);
        r.errorCode = std::stoi(cells[5]);
        out.push_back(std::move(r));
    }
    return out;
}

// ---- per-run summary ----

struct RunSummary {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> byTemplate;  // ok, failed
    std::int64_t abandoned = 0;  // in flight when the run deadline passed
    double durationSeconds = 0;
    int clients = 0;
    std::string endpoint;

    std::int64_t total_succeeded() const {
        std::int64_t n = 0;
        for (const auto& [t, c] : byTemplate) n += c.first;
        return n;
    }
    std::int64_t total_failed() const {
        std::int64_t n = 0;
        for (const auto& [t, c] : byTemplate) n += c.second;
        return n;
    }
};

inline RunSummary summarize(const std::vector<MeasurementRecord>& rs) {
    RunSummary s;
    for (const auto& r : rs) {
        auto& c = s.byTemplate[r.templateId];
        if (r.errorCode == 0) ++c.first;
        else ++c.second;
    }
    return s;
}

inline std::string summary_to_string(const RunSummary& s) {
    std::ostringstream os;
    os << "# duration_seconds=" << s.durationSeconds << " clients=" << s.clients
       << " endpoint=" << s.endpoint << " abandoned=" << s.abandoned << "\n";
    os << "template_id,succeeded,failed\n";
    for (const auto& [t, c] : s.byTemplate)
        os << t << ',' << c.first << ',' << c.second << '\n';
    return os.str();
}

// ---- metric reports ----

struct MetricReport {
    std::string kind;    // aQETq, aQRTq, QETt, aTPt, aTPw, aTPm
    std::string subject; // query instance id, template id, or workload label
    MeanStddev stat;     // for the mean±stddev kinds
    Distribution dist;   // for QETt
    bool hasDist = false;
};

// aQETq / aQRTq: per-query mean over repeated executions
inline std::vector<MetricReport> per_query_means(
    const std::vector<MeasurementRecord>& rs, bool qrt) {
    std::map<std::string, std::vector<double>> byInstance;
    for (const auto& r : rs)
        if (r.errorCode == 0) byInstance[r.instanceId].push_back(qrt ? r.qrtMs : r.qetMs);
    std::vector<MetricReport> out;
    for (const auto& [id, xs] : byInstance)
        out.push_back({qrt ? "aQRTq" : "aQETq", id, mean_stddev(xs), {}, false});
    return out;
}

// QETt: distribution of QETs across the queries of one template
inline std::vector<MetricReport> per_template_distributions(
    const std::vector<MeasurementRecord>& rs) {
    std::map<std::string, std::vector<double>> byTemplate;
    for (const auto& r : rs)
        if (r.errorCode == 0) byTemplate[r.templateId].push_back(r.qetMs);
    std::vector<MetricReport> out;
    for (const auto& [t, xs] : byTemplate) {
        MetricReport m{"QETt", t, mean_stddev(xs), distribution(xs), true};
        out.push_back(std::move(m));
    }
    return out;
}

// aTP*: mean of per-run completion counts over the measured (non-warm-up) runs
inline MetricReport throughput_report(const std::string& kind,
                                      const std::string& subject,
                                      const std::vector<double>& runCounts) {
    return {kind, subject, mean_stddev(runCounts), {}, false};
}

}  // namespace gqlbench
