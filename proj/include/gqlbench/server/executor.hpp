#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gqlbench/gql/ast.hpp"
#include "gqlbench/server/datasource.hpp"

namespace gqlbench {

enum class ExecMode { Naive, Cache, Batch, BatchCache };

inline const char* exec_mode_name(ExecMode m) {
    switch (m) {
        case ExecMode::Naive: return "naive";
        case ExecMode::Cache: return "cache";
        case ExecMode::Batch: return "batch";
        case ExecMode::BatchCache: return "batch-cache";
    }
    return "?";
}

inline ExecMode parse_exec_mode(const std::string& s) {
    if (s == "naive") return ExecMode::Naive;
    if (s == "cache") return ExecMode::Cache;
    if (s == "batch") return ExecMode::Batch;
    if (s == "batch-cache" || s == "batchcache") return ExecMode::BatchCache;
    throw std::invalid_argument("unknown execution mode: " + s);
}

struct ExecutionStats {
    std::uint64_t backendRequests = 0;  // simulated data-source requests issued
    std::uint64_t cacheHits = 0;        // demands served from a memo/loader cache
    std::uint64_t batchedKeys = 0;      // keys carried by coalesced requests
};

// Raised for per-query execution problems (e.g. missing variable values);
// surfaces as a GraphQL error envelope, not a transport failure.
struct ExecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace exec_detail {

using Json = nlohmann::json;

enum class Ent { Query, University, Department, Faculty, Grad, Ug, Publication,
                 Course, ResearchGroup };

// What resolving one field costs and yields.
enum class FieldCat {
    IdScalar,     // entity id; available without the row
    RowScalar,    // any other scalar; needs the row
    ToOne,        // N:1 via a foreign key on this row
    ToMany,       // 1:N keyed by this entity's id; one list fetch
    Aggregate,    // computed server-side; one fetch keyed by this id
    RootLookup,   // Query single-entity field; always fetches the row
    RootScan,     // Query list field; one scan fetch
};

struct FieldInfo {
    FieldCat cat;
    Ent target = Ent::Query;  // for ToOne/ToMany/RootLookup/RootScan
};

inline const FieldInfo* field_info(Ent e, const std::string& f) {
    using M = std::map<std::string, FieldInfo>;
    static const std::map<Ent, M> table = {
        {Ent::Query,
         {{"university", {FieldCat::RootLookup, Ent::University}},
          {"department", {FieldCat::RootLookup, Ent::Department}},
          {"publication", {FieldCat::RootLookup, Ent::Publication}},
          {"facultyMember", {FieldCat::RootLookup, Ent::Faculty}},
          {"graduateStudent", {FieldCat::RootLookup, Ent::Grad}},
          {"graduateStudents", {FieldCat::RootScan, Ent::Grad}},
          {"searchPublications", {FieldCat::RootScan, Ent::Publication}}}},
        {Ent::University,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"departments", {FieldCat::ToMany, Ent::Department}},
          {"undergraduateDegreeObtainedBystudent", {FieldCat::ToMany, Ent::Grad}},
          {"undergraduateDegreeObtainedBystudentCount", {FieldCat::Aggregate}},
          {"avgDegreeStudentAge", {FieldCat::Aggregate}}}},
        {Ent::Department,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"subOrganizationOf", {FieldCat::ToOne, Ent::University}},
          {"graduateStudents", {FieldCat::ToMany, Ent::Grad}},
          {"undergraduateStudents", {FieldCat::ToMany, Ent::Ug}},
          {"faculties", {FieldCat::ToMany, Ent::Faculty}},
          {"researchGroups", {FieldCat::ToMany, Ent::ResearchGroup}},
          {"courses", {FieldCat::ToMany, Ent::Course}}}},
        {Ent::Grad,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"emailAddress", {FieldCat::RowScalar}},
          {"telephone", {FieldCat::RowScalar}},
          {"age", {FieldCat::RowScalar}},
          {"ugDegreeYear", {FieldCat::RowScalar}},
          {"memberOf", {FieldCat::ToOne, Ent::Department}},
          {"undergraduateDegreeFrom", {FieldCat::ToOne, Ent::University}},
          {"advisor", {FieldCat::ToOne, Ent::Faculty}},
          {"takenCourses", {FieldCat::ToMany, Ent::Course}}}},
        {Ent::Ug,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"emailAddress", {FieldCat::RowScalar}},
          {"telephone", {FieldCat::RowScalar}},
          {"age", {FieldCat::RowScalar}},
          {"memberOf", {FieldCat::ToOne, Ent::Department}},
          {"takenCourses", {FieldCat::ToMany, Ent::Course}}}},
        {Ent::Faculty,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"emailAddress", {FieldCat::RowScalar}},
          {"telephone", {FieldCat::RowScalar}},
          {"rank", {FieldCat::RowScalar}},
          {"worksFor", {FieldCat::ToOne, Ent::Department}},
          {"publications", {FieldCat::ToMany, Ent::Publication}},
          {"teacherOf", {FieldCat::ToMany, Ent::Course}}}},
        {Ent::Publication,
         {{"id", {FieldCat::IdScalar}},
          {"title", {FieldCat::RowScalar}},
          {"abstract", {FieldCat::RowScalar}},
          {"year", {FieldCat::RowScalar}},
          {"author", {FieldCat::ToOne, Ent::Faculty}}}},
        {Ent::Course,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"offeredBy", {FieldCat::ToOne, Ent::Department}},
          {"teacher", {FieldCat::ToOne, Ent::Faculty}}}},
        {Ent::ResearchGroup,
         {{"id", {FieldCat::IdScalar}},
          {"name", {FieldCat::RowScalar}},
          {"subOrganizationOf", {FieldCat::ToOne, Ent::Department}}}},
    };
    const M& m = table.at(e);
    auto it = m.find(f);
    return it == m.end() ? nullptr : &it->second;
}

// A materialized object node needs its own row if any selected field reads
// row data beyond the id: non-id scalars, and N:1 fields (their foreign keys
// live on the row). Lists and aggregates are keyed by the id alone.
inline bool needs_row(Ent e, const gql::SelectionSet& sel) {
    for (const auto& f : sel) {
        const FieldInfo* fi = field_info(e, f.name);
        if (!fi) throw ExecError("cannot resolve field '" + f.name + "'");
        if (fi->cat == FieldCat::RowScalar || fi->cat == FieldCat::ToOne) return true;
    }
    return false;
}

// Backend fetch identity: kind discriminates row/list/scan/aggregate per
// entity, key is the entity/parent id (or a word for searches), argsSig keeps
// differently-parameterized list fetches in separate loaders.
struct FetchKey {
    int kind;
    Id id;
    std::string word;
    std::string argsSig;

    bool operator<(const FetchKey& o) const {
        return std::tie(kind, id, word, argsSig) <
               std::tie(o.kind, o.id, o.word, o.argsSig);
    }
};

constexpr int kRowKindBase = 0;     // + Ent
constexpr int kListKindBase = 100;  // + small per-relationship offsets
constexpr int kListDepts = 100, kListDegreeStudents = 101, kListGradsOfDept = 102,
              kListUgsOfDept = 103, kListFacOfDept = 104, kListRgsOfDept = 105,
              kListCoursesOfDept = 106, kListPubsOfFac = 107, kListTeacherOf = 108,
              kListTakenGrad = 109, kListTakenUg = 110;
constexpr int kScanGrads = 200, kScanPubsByWord = 201;
constexpr int kAggDegreeCount = 300, kAggAvgAge = 301;

inline int row_kind(Ent e) { return kRowKindBase + static_cast<int>(e); }

// Mode-dependent accounting for backend fetches. Result data is read straight
// from the in-memory dataset; this class decides when a demand costs a
// simulated backend request.
class FetchEngine {
public:
    FetchEngine(DataSource& src, ExecMode mode) : src_(src), mode_(mode) {}

    // batched path: demands are collected per wave, coalesced per loader
    void demand(const FetchKey& k) { wave_.push_back(k); }

    void dispatch() {
        if (mode_ == ExecMode::Naive) {
            for (std::size_t i = 0; i < wave_.size(); ++i) issue(1);
        } else if (mode_ == ExecMode::Cache) {
            for (const auto& k : wave_) {
                if (seen_.insert(k).second) issue(1);
                else ++stats_.cacheHits;
            }
        } else {
            // Batch / BatchCache: one request per loader for all of the
            // loader's keys not already loaded (DataLoader semantics)
            std::map<std::pair<int, std::string>, std::size_t> newKeys;
            for (const auto& k : wave_) {
                if (seen_.insert(k).second) ++newKeys[{k.kind, k.argsSig}];
                else ++stats_.cacheHits;
            }
            for (const auto& [loader, n] : newKeys) {
                (void)loader;
                issue(n);
                stats_.batchedKeys += n;
            }
        }
        wave_.clear();
    }

    // unbatched path (filter-condition probes): issued immediately, never
    // coalesced; memoized only in the modes that cache
    void probe(const FetchKey& k) {
        if (mode_ == ExecMode::Cache || mode_ == ExecMode::BatchCache) {
            if (!seen_.insert(k).second) {
                ++stats_.cacheHits;
                return;
            }
        }
        issue(1);
    }

    const ExecutionStats& stats() const { return stats_; }

private:
    void issue(std::size_t keys) {
        src_.request(keys);
        ++stats_.backendRequests;
    }

    DataSource& src_;
    ExecMode mode_;
    ExecutionStats stats_;
    std::set<FetchKey> seen_;
    std::vector<FetchKey> wave_;
};

// ---- argument helpers ----

inline Json value_to_json(const gql::Value& v, const Json& vars) {
    if (auto* i = std::get_if<std::int64_t>(&v.v)) return *i;
    if (auto* s = std::get_if<std::string>(&v.v)) return *s;
    if (auto* e = std::get_if<gql::Value::EnumSymbol>(&v.v)) return e->name;
    if (auto* r = std::get_if<gql::Value::VariableRef>(&v.v)) {
        if (!vars.is_object() || !vars.contains(r->name))
            throw ExecError("no value provided for variable $" + r->name);
        return vars.at(r->name);
    }
    if (auto* o = std::get_if<std::shared_ptr<gql::InputObject>>(&v.v)) {
        Json out = Json::object();
        for (const auto& [k, val] : **o) out[k] = value_to_json(val, vars);
        return out;
    }
    return nullptr;
}

struct Args {
    Json values = Json::object();

    bool has(const std::string& n) const { return values.contains(n); }
    std::int64_t as_int(const std::string& n) const {
        const Json& v = values.at(n);
        if (v.is_number_integer()) return v.get<std::int64_t>();
        if (v.is_string()) return std::stoll(v.get<std::string>());
        throw ExecError("argument '" + n + "' is not an integer");
    }
    std::string as_string(const std::string& n) const {
        const Json& v = values.at(n);
        if (!v.is_string()) throw ExecError("argument '" + n + "' is not a string");
        return v.get<std::string>();
    }
    std::string sig() const { return values.empty() ? std::string() : values.dump(); }
};

inline Args resolve_args(const gql::Field& f, const Json& vars) {
    Args a;
    for (const auto& [name, v] : f.args) a.values[name] = value_to_json(v, vars);
    return a;
}

// ---- list/scan evaluation over the data source indexes ----

inline bool grad_matches_rank(const DataSource& src, Id gradId, const std::string& rank) {
    const GraduateStudent* g = src.graduateStudent(gradId);
    const FacultyMember* f = g ? src.faculty(g->advisorId) : nullptr;
    return f && rank_name(f->rank) == rank;
}

inline Json grad_field_value(const GraduateStudent& g, const std::string& field) {
    if (field == "id") return g.id;
    if (field == "emailAddress") return g.emailAddress;
    if (field == "telephone") return g.telephone;
    if (field == "age") return g.age;
    if (field == "ugDegreeYear") return g.ugDegreeYear;
    if (field == "name") return g.name;
    throw ExecError("unknown graduate student field: " + field);
}

inline std::vector<Id> scan_graduate_students(const DataSource& src, const Args& a) {
    const auto& all = src.dataset().graduateStudents;
    std::vector<Id> ids(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) ids[i] = all[i].id;
    if (a.has("order")) {
        const Json& ord = a.values.at("order");
        std::string primary = ord.value("primary", "id");
        std::string secondary = ord.value("secondary", "id");
        bool desc = ord.value("direction", "ASC") == "DESC";
        std::stable_sort(ids.begin(), ids.end(), [&](Id x, Id y) {
            const auto& gx = all[static_cast<std::size_t>(x)];
            const auto& gy = all[static_cast<std::size_t>(y)];
            auto cmp = [&](const std::string& f) {
                Json vx = grad_field_value(gx, f), vy = grad_field_value(gy, f);
                return vx == vy ? 0 : (vx < vy ? -1 : 1);
            };
            int c = cmp(primary);
            if (c == 0) c = cmp(secondary);
            if (c != 0) return desc ? c > 0 : c < 0;
            return x < y;  // total order
        });
    }
    if (a.has("limit")) {
        auto lim = static_cast<std::size_t>(std::max<std::int64_t>(0, a.as_int("limit")));
        if (ids.size() > lim) ids.resize(lim);
    }
    return ids;
}

inline std::vector<Id> faculty_publications(const DataSource& src, Id facId,
                                            const Args& a) {
    const FacultyMember* f = src.faculty(facId);
    std::vector<Id> ids = f ? f->publications : std::vector<Id>{};
    if (a.has("titleWord")) {
        std::string w = a.as_string("titleWord");
        std::erase_if(ids, [&](Id p) {
            const std::string& t = src.publication(p)->title;
            std::size_t pos = 0;
            while ((pos = t.find(w, pos)) != std::string::npos) {
                bool lb = pos == 0 || t[pos - 1] == ' ';
                bool rb = pos + w.size() == t.size() || t[pos + w.size()] == ' ';
                if (lb && rb) return false;
                ++pos;
            }
            return true;
        });
    }
    if (a.has("yearAtLeast")) {
        std::int64_t y = a.as_int("yearAtLeast");
        std::erase_if(ids, [&](Id p) { return src.publication(p)->year < y; });
    }
    if (a.has("order")) {
        const Json& ord = a.values.at("order");
        std::string field = ord.value("field", "title");
        bool desc = ord.value("direction", "ASC") == "DESC";
        std::stable_sort(ids.begin(), ids.end(), [&](Id x, Id y) {
            const Publication* px = src.publication(x);
            const Publication* py = src.publication(y);
            const std::string& vx = field == "abstract" ? px->abstract : px->title;
            const std::string& vy = field == "abstract" ? py->abstract : py->title;
            if (vx != vy) return desc ? vx > vy : vx < vy;
            return x < y;
        });
    }
    if (a.has("limit")) {
        auto lim = static_cast<std::size_t>(std::max<std::int64_t>(0, a.as_int("limit")));
        if (ids.size() > lim) ids.resize(lim);
    }
    return ids;
}

inline std::vector<Id> paged(const std::vector<Id>& src, const Args& a) {
    std::size_t off = 0, lim = src.size();
    if (a.has("offset"))
        off = static_cast<std::size_t>(std::max<std::int64_t>(0, a.as_int("offset")));
    if (a.has("limit"))
        lim = static_cast<std::size_t>(std::max<std::int64_t>(0, a.as_int("limit")));
    std::vector<Id> out;
    for (std::size_t i = off; i < src.size() && out.size() < lim; ++i)
        out.push_back(src[i]);
    return out;
}

// ---- executor ----

class Executor {
public:
    Executor(DataSource& src, ExecMode mode) : src_(src), engine_(src, mode) {}

    Json run(const gql::QueryDoc& doc, const Json& vars) {
        vars_ = vars.is_null() ? Json::object() : vars;
        Json data = Json::object();
        std::vector<Task> frontier;
        frontier.push_back({Ent::Query, -1, true, &doc.rootSelections, &data});
        while (!frontier.empty()) {
            collect_demands(frontier);
            engine_.dispatch();
            std::vector<Task> next;
            for (auto& t : frontier) resolve(t, next);
            frontier = std::move(next);
        }
        return data;
    }

    const ExecutionStats& stats() const { return engine_.stats(); }

private:
    struct Task {
        Ent kind;
        Id id;
        bool haveRow;
        const gql::SelectionSet* sel;
        Json* slot;  // points at a Json object (or null to fill for roots)
    };

    void collect_demands(const std::vector<Task>& frontier) {
        for (const auto& t : frontier) {
            if (t.kind != Ent::Query && !t.haveRow && needs_row(t.kind, *t.sel))
                engine_.demand({row_kind(t.kind), t.id, {}, {}});
            for (const auto& f : *t.sel) {
                const FieldInfo* fi = field_info(t.kind, f.name);
                if (!fi) throw ExecError("cannot resolve field '" + f.name + "'");
                Args a = resolve_args(f, vars_);
                switch (fi->cat) {
                    case FieldCat::RootLookup:
                        engine_.demand({row_kind(fi->target), a.as_int("nr"), {}, {}});
                        break;
                    case FieldCat::RootScan:
                        if (f.name == "graduateStudents")
                            engine_.demand({kScanGrads, 0, {}, a.sig()});
                        else
                            engine_.demand({kScanPubsByWord, 0,
                                            a.as_string("titleWord"), {}});
                        break;
                    case FieldCat::ToMany:
                        engine_.demand(list_key(t.kind, f.name, t.id, a));
                        break;
                    case FieldCat::Aggregate:
                        engine_.demand({f.name == "avgDegreeStudentAge" ? kAggAvgAge
                                                                        : kAggDegreeCount,
                                        t.id, {}, {}});
                        break;
                    default:
                        break;  // scalars and ToOne cost nothing at this node
                }
            }
        }
    }

    static FetchKey list_key(Ent parent, const std::string& field, Id id, const Args& a) {
        int kind;
        if (field == "departments") kind = kListDepts;
        else if (field == "undergraduateDegreeObtainedBystudent") kind = kListDegreeStudents;
        else if (field == "graduateStudents") kind = kListGradsOfDept;
        else if (field == "undergraduateStudents") kind = kListUgsOfDept;
        else if (field == "faculties") kind = kListFacOfDept;
        else if (field == "researchGroups") kind = kListRgsOfDept;
        else if (field == "courses") kind = kListCoursesOfDept;
        else if (field == "publications") kind = kListPubsOfFac;
        else if (field == "teacherOf") kind = kListTeacherOf;
        else if (field == "takenCourses")
            kind = parent == Ent::Grad ? kListTakenGrad : kListTakenUg;
        else throw ExecError("cannot resolve list field '" + field + "'");
        return {kind, id, {}, a.sig()};
    }

    std::vector<Id> list_ids(Ent parent, const std::string& field, Id id, const Args& a) {
        if (field == "departments") return src_.departmentsOf(id);
        if (field == "undergraduateDegreeObtainedBystudent") {
            std::vector<Id> ids = src_.degreeStudentsOf(id);
            if (a.has("hasAdvisorRank")) {
                std::string rank = a.as_string("hasAdvisorRank");
                std::vector<Id> kept;
                for (Id g : ids) {
                    // checking the condition costs a per-student advisor
                    // lookup that the batching machinery does not cover
                    engine_.probe({row_kind(Ent::Faculty),
                                   src_.graduateStudent(g)->advisorId, {}, {}});
                    if (grad_matches_rank(src_, g, rank)) kept.push_back(g);
                }
                ids = std::move(kept);
            }
            return paged(ids, a);
        }
        if (field == "graduateStudents") {
            std::vector<Id> ids = src_.graduateStudentsOf(id);
            if (a.has("advisorRank")) {
                std::string rank = a.as_string("advisorRank");
                std::vector<Id> kept;
                for (Id g : ids) {
                    engine_.probe({row_kind(Ent::Faculty),
                                   src_.graduateStudent(g)->advisorId, {}, {}});
                    if (grad_matches_rank(src_, g, rank)) kept.push_back(g);
                }
                ids = std::move(kept);
            }
            return paged(ids, a);
        }
        if (field == "undergraduateStudents") return paged(src_.undergraduateStudentsOf(id), a);
        if (field == "faculties") return src_.facultyOf(id);
        if (field == "researchGroups") return src_.researchGroupsOf(id);
        if (field == "courses") return src_.coursesOf(id);
        if (field == "publications") return faculty_publications(src_, id, a);
        if (field == "teacherOf") return src_.taughtBy(id);
        if (field == "takenCourses") {
            if (parent == Ent::Grad) return src_.graduateStudent(id)->takenCourses;
            return src_.undergraduateStudent(id)->takenCourses;
        }
        throw ExecError("cannot resolve list field '" + field + "'");
    }

    bool row_exists(Ent e, Id id) const {
        switch (e) {
            case Ent::University: return src_.university(id) != nullptr;
            case Ent::Department: return src_.department(id) != nullptr;
            case Ent::Faculty: return src_.faculty(id) != nullptr;
            case Ent::Grad: return src_.graduateStudent(id) != nullptr;
            case Ent::Ug: return src_.undergraduateStudent(id) != nullptr;
            case Ent::Publication: return src_.publication(id) != nullptr;
            case Ent::Course: return src_.course(id) != nullptr;
            case Ent::ResearchGroup: return src_.researchGroup(id) != nullptr;
            default: return false;
        }
    }

    Json scalar_value(Ent e, Id id, const std::string& f) const {
        switch (e) {
            case Ent::University: {
                const auto& r = *src_.university(id);
                if (f == "id") return r.id;
                if (f == "name") return r.name;
                break;
            }
            case Ent::Department: {
                const auto& r = *src_.department(id);
                if (f == "id") return r.nr;
                if (f == "name") return r.name;
                break;
            }
            case Ent::Faculty: {
                const auto& r = *src_.faculty(id);
                if (f == "id") return r.id;
                if (f == "name") return r.name;
                if (f == "emailAddress") return r.emailAddress;
                if (f == "telephone") return r.telephone;
                if (f == "rank") return rank_name(r.rank);
                break;
            }
            case Ent::Grad:
                return grad_field_value(*src_.graduateStudent(id), f);
            case Ent::Ug: {
                const auto& r = *src_.undergraduateStudent(id);
                if (f == "id") return r.id;
                if (f == "name") return r.name;
                if (f == "emailAddress") return r.emailAddress;
                if (f == "telephone") return r.telephone;
                if (f == "age") return r.age;
                break;
            }
            case Ent::Publication: {
                const auto& r = *src_.publication(id);
                if (f == "id") return r.id;
                if (f == "title") return r.title;
                if (f == "abstract") return r.abstract;
                if (f == "year") return r.year;
                break;
            }
            case Ent::Course: {
                const auto& r = *src_.course(id);
                if (f == "id") return r.id;
                if (f == "name") return r.name;
                break;
            }
            case Ent::ResearchGroup: {
                const auto& r = *src_.researchGroup(id);
                if (f == "id") return r.id;
                if (f == "name") return r.name;
                break;
            }
            default:
                break;
        }
        throw ExecError("cannot resolve field '" + f + "'");
    }

    Id foreign_key(Ent e, Id id, const std::string& f) const {
        switch (e) {
            case Ent::Department:
                if (f == "subOrganizationOf") return src_.department(id)->universityId;
                break;
            case Ent::Grad: {
                const auto& g = *src_.graduateStudent(id);
                if (f == "memberOf") return g.departmentNr;
                if (f == "undergraduateDegreeFrom") return g.undergraduateDegreeFrom;
                if (f == "advisor") return g.advisorId;
                break;
            }
            case Ent::Ug:
                if (f == "memberOf") return src_.undergraduateStudent(id)->departmentNr;
                break;
            case Ent::Faculty:
                if (f == "worksFor") return src_.faculty(id)->departmentNr;
                break;
            case Ent::Publication:
                if (f == "author") return src_.publication(id)->authorId;
                break;
            case Ent::Course: {
                const auto& c = *src_.course(id);
                if (f == "offeredBy") return c.departmentNr;
                if (f == "teacher") return c.teacherId;
                break;
            }
            case Ent::ResearchGroup:
                if (f == "subOrganizationOf") return src_.researchGroup(id)->departmentNr;
                break;
            default:
                break;
        }
        throw ExecError("cannot resolve field '" + f + "'");
    }

    void resolve(Task& t, std::vector<Task>& next) {
        for (const auto& f : *t.sel) {
            const FieldInfo& fi = *field_info(t.kind, f.name);
            Args a = resolve_args(f, vars_);
            Json& out = (*t.slot)[f.name];
            switch (fi.cat) {
                case FieldCat::RootLookup: {
                    Id id = a.as_int("nr");
                    if (!row_exists(fi.target, id)) {
                        out = nullptr;
                        break;
                    }
                    out = Json::object();
                    next.push_back({fi.target, id, true, &f.subSelections, &out});
                    break;
                }
                case FieldCat::RootScan: {
                    std::vector<Id> ids =
                        f.name == "graduateStudents"
                            ? scan_graduate_students(src_, a)
                            : src_.publicationsWithTitleWord(a.as_string("titleWord"));
                    fill_list(ids, fi.target, f.subSelections, out, next);
                    break;
                }
                case FieldCat::IdScalar:
                    out = t.id;
                    break;
                case FieldCat::RowScalar:
                    out = scalar_value(t.kind, t.id, f.name);
                    break;
                case FieldCat::ToOne: {
                    Id fk = foreign_key(t.kind, t.id, f.name);
                    if (!row_exists(fi.target, fk)) {
                        out = nullptr;
                        break;
                    }
                    out = Json::object();
                    // child fetches its own row next wave if the selection
                    // needs more than the id
                    next.push_back({fi.target, fk, false, &f.subSelections, &out});
                    break;
                }
                case FieldCat::ToMany: {
                    std::vector<Id> ids = list_ids(t.kind, f.name, t.id, a);
                    fill_list(ids, fi.target, f.subSelections, out, next);
                    break;
                }
                case FieldCat::Aggregate: {
                    const auto& students = src_.degreeStudentsOf(t.id);
                    if (f.name == "undergraduateDegreeObtainedBystudentCount") {
                        out = static_cast<std::int64_t>(students.size());
                    } else {  // avgDegreeStudentAge
                        if (students.empty()) {
                            out = nullptr;
                        } else {
                            double sum = 0;
                            for (Id g : students)
                                sum += src_.graduateStudent(g)->age;
                            out = sum / static_cast<double>(students.size());
                        }
                    }
                    break;
                }
            }
        }
    }

    void fill_list(const std::vector<Id>& ids, Ent target,
                   const gql::SelectionSet& sel, Json& out, std::vector<Task>& next) {
        out = Json::array();
        // size the array up front so element references stay stable while
        // later tasks write into them
        for (std::size_t i = 0; i < ids.size(); ++i) out.push_back(Json::object());
        for (std::size_t i = 0; i < ids.size(); ++i)
            next.push_back({target, ids[i], true, &sel, &out[i]});
    }

    DataSource& src_;
    FetchEngine engine_;
    Json vars_;
};

}  // namespace exec_detail

using exec_detail::Executor;

// Executes a parsed query against the data source in the given mode.
inline std::pair<nlohmann::json, ExecutionStats> execute(DataSource& src,
                                                         const gql::QueryDoc& doc,
                                                         const nlohmann::json& variables,
                                                         ExecMode mode) {
    Executor ex(src, mode);
    nlohmann::json data = ex.run(doc, variables);
    return {std::move(data), ex.stats()};
}

}  // namespace gqlbench
