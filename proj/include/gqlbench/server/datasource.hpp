#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "gqlbench/domain.hpp"

namespace gqlbench {

struct DataSourceConfig {
    double perRequestLatencyMs = 1.0;
    // max concurrent in-flight backend requests (connection pool)
    int poolSize = 10;
    // how many admitted requests the simulated backend actually services in
    // parallel; models a small fixed-capacity database server behind the pool
    int serviceParallelism = 2;
};

// Counting gate with a high-water mark, used for both the connection pool and
// the backend service capacity.
class Gate {
public:
    explicit Gate(int slots) : slots_(slots) {
        if (slots < 1) throw std::invalid_argument("gate needs at least one slot");
    }

    void acquire() {
        std::unique_lock lk(mu_);
        cv_.wait(lk, [&] { return inFlight_ < slots_; });
        ++inFlight_;
        if (inFlight_ > maxInFlight_) maxInFlight_ = inFlight_;
    }

    void release() {
        {
            std::lock_guard lk(mu_);
            --inFlight_;
        }
        cv_.notify_one();
    }

    int max_in_flight() const {
        std::lock_guard lk(mu_);
        return maxInFlight_;
    }

    void reset_max() {
        std::lock_guard lk(mu_);
        maxInFlight_ = inFlight_;
    }

private:
    mutable std::mutex mu_;
    std::condition_variable cv_;
    int slots_;
    int inFlight_ = 0;
    int maxInFlight_ = 0;
};

// In-memory stand-in for the server's database: the dataset plus lookup
// indexes, behind a simulated request path (pool slot, service slot, fixed
// latency). All read methods are const and thread-safe; accounting is atomic.
class DataSource {
public:
    DataSource(Dataset ds, DataSourceConfig cfg)
        : ds_(std::move(ds)), cfg_(cfg), pool_(cfg.poolSize),
          service_(cfg.serviceParallelism) {
        build_indexes();
    }

    const Dataset& dataset() const { return ds_; }
    const DataSourceConfig& config() const { return cfg_; }

    // One simulated backend request carrying `keys` coalesced lookup keys.
    void request(std::size_t keys = 1) {
        pool_.acquire();
        service_.acquire();
        if (cfg_.perRequestLatencyMs > 0) {
            auto us = static_cast<std::int64_t>(cfg_.perRequestLatencyMs * 1000.0);
            std::this_thread::sleep_for(std::chrono::microseconds(us));
        }
        service_.release();
        pool_.release();
        totalRequests_.fetch_add(1, std::memory_order_relaxed);
        totalKeys_.fetch_add(keys, std::memory_order_relaxed);
    }

    std::uint64_t total_requests() const {
        return totalRequests_.load(std::memory_order_relaxed);
    }
    std::uint64_t total_keys() const {
        return totalKeys_.load(std::memory_order_relaxed);
    }
    int pool_max_in_flight() const { return pool_.max_in_flight(); }

    void reset_stats() {
        totalRequests_.store(0, std::memory_order_relaxed);
        totalKeys_.store(0, std::memory_order_relaxed);
        pool_.reset_max();
    }

    // ---- row lookups (ids are dense per entity type) ----
    const University* university(Id id) const {
        return in_range(id, ds_.universities.size())
                   ? &ds_.universities[static_cast<std::size_t>(id)] : nullptr;
    }
    const Department* department(Id nr) const {
        return in_range(nr, ds_.departments.size())
                   ? &ds_.departments[static_cast<std::size_t>(nr)] : nullptr;
    }
    const FacultyMember* faculty(Id id) const {
        return in_range(id, ds_.faculty.size())
                   ? &ds_.faculty[static_cast<std::size_t>(id)] : nullptr;
    }
    const GraduateStudent* graduateStudent(Id id) const {
        return in_range(id, ds_.graduateStudents.size())
                   ? &ds_.graduateStudents[static_cast<std::size_t>(id)] : nullptr;
    }
    const UndergraduateStudent* undergraduateStudent(Id id) const {
        return in_range(id, ds_.undergraduateStudents.size())
                   ? &ds_.undergraduateStudents[static_cast<std::size_t>(id)] : nullptr;
    }
    const Publication* publication(Id id) const {
        return in_range(id, ds_.publications.size())
                   ? &ds_.publications[static_cast<std::size_t>(id)] : nullptr;
    }
    const Course* course(Id id) const {
        return in_range(id, ds_.courses.size())
                   ? &ds_.courses[static_cast<std::size_t>(id)] : nullptr;
    }
    const ResearchGroup* researchGroup(Id id) const {
        return in_range(id, ds_.researchGroups.size())
                   ? &ds_.researchGroups[static_cast<std::size_t>(id)] : nullptr;
    }

    // ---- relationship lists (child ids in ascending id order) ----
    static const std::vector<Id> kEmpty;

    const std::vector<Id>& departmentsOf(Id univ) const {
        return at_or_empty(deptsByUniv_, univ);
    }
    const std::vector<Id>& degreeStudentsOf(Id univ) const {
        return at_or_empty(gradsByDegreeUniv_, univ);
    }
    const std::vector<Id>& graduateStudentsOf(Id dept) const {
        return at_or_empty(gradsByDept_, dept);
    }
    const std::vector<Id>& undergraduateStudentsOf(Id dept) const {
        return at_or_empty(ugsByDept_, dept);
    }
    const std::vector<Id>& facultyOf(Id dept) const {
        return at_or_empty(facByDept_, dept);
    }
    const std::vector<Id>& coursesOf(Id dept) const {
        return at_or_empty(coursesByDept_, dept);
    }
    const std::vector<Id>& researchGroupsOf(Id dept) const {
        return at_or_empty(rgsByDept_, dept);
    }
    const std::vector<Id>& taughtBy(Id facultyId) const {
        return at_or_empty(coursesByTeacher_, facultyId);
    }
    const std::vector<Id>& publicationsWithTitleWord(const std::string& w) const {
        auto it = pubsByTitleWord_.find(w);
        return it == pubsByTitleWord_.end() ? kEmpty : it->second;
    }

private:
    static bool in_range(Id id, std::size_t n) {
        return id >= 0 && static_cast<std::size_t>(id) < n;
    }
    static const std::vector<Id>& at_or_empty(const std::vector<std::vector<Id>>& v,
                                              Id key) {
        return in_range(key, v.size()) ? v[static_cast<std::size_t>(key)] : kEmpty;
    }

    void build_indexes() {
        deptsByUniv_.resize(ds_.universities.size());
        gradsByDegreeUniv_.resize(ds_.universities.size());
        for (const auto& d : ds_.departments)
            deptsByUniv_[static_cast<std::size_t>(d.universityId)].push_back(d.nr);

        gradsByDept_.resize(ds_.departments.size());
        ugsByDept_.resize(ds_.departments.size());
        facByDept_.resize(ds_.departments.size());
        coursesByDept_.resize(ds_.departments.size());
        rgsByDept_.resize(ds_.departments.size());
        coursesByTeacher_.resize(ds_.faculty.size());

        for (const auto& g : ds_.graduateStudents) {
            gradsByDept_[static_cast<std::size_t>(g.departmentNr)].push_back(g.id);
            if (in_range(g.undergraduateDegreeFrom, gradsByDegreeUniv_.size()))
                gradsByDegreeUniv_[static_cast<std::size_t>(g.undergraduateDegreeFrom)]
                    .push_back(g.id);
        }
        for (const auto& u : ds_.undergraduateStudents)
            ugsByDept_[static_cast<std::size_t>(u.departmentNr)].push_back(u.id);
        for (const auto& f : ds_.faculty)
            facByDept_[static_cast<std::size_t>(f.departmentNr)].push_back(f.id);
        for (const auto& c : ds_.courses) {
            coursesByDept_[static_cast<std::size_t>(c.departmentNr)].push_back(c.id);
            coursesByTeacher_[static_cast<std::size_t>(c.teacherId)].push_back(c.id);
        }
        for (const auto& r : ds_.researchGroups)
            rgsByDept_[static_cast<std::size_t>(r.departmentNr)].push_back(r.id);

        for (const auto& p : ds_.publications) {
            std::size_t start = 0;
            while (start < p.title.size()) {
                auto space = p.title.find(' ', start);
                if (space == std::string::npos) space = p.title.size();
                std::string w = p.title.substr(start, space - start);
                auto& ids = pubsByTitleWord_[w];
                if (ids.empty() || ids.back() != p.id) ids.push_back(p.id);
                start = space + 1;
            }
        }
    }

    Dataset ds_;
    DataSourceConfig cfg_;
    Gate pool_;
    Gate service_;
    std::atomic<std::uint64_t> totalRequests_{0};
    std::atomic<std::uint64_t> totalKeys_{0};

    std::vector<std::vector<Id>> deptsByUniv_, gradsByDegreeUniv_;
    std::vector<std::vector<Id>> gradsByDept_, ugsByDept_, facByDept_;
    std::vector<std::vector<Id>> coursesByDept_, rgsByDept_, coursesByTeacher_;
    std::unordered_map<std::string, std::vector<Id>> pubsByTitleWord_;
};

inline const std::vector<Id> DataSource::kEmpty;

}  // namespace gqlbench
