#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "gqlbench/metadata.hpp"
#include "gqlbench/rng.hpp"

namespace gqlbench {

using Json = nlohmann::json;

// Value domain of one query-template placeholder. Every domain is fully
// determined by a dataset metadata document, so instances can be produced
// without the dataset itself.
struct PlaceholderSpec {
    enum class Domain { EntityIds, EnumFields, IntRange, WordPool, DateRange };

    std::string name;  // without the leading '$'
    Domain domain;
    std::string pool;    // EntityIds: entity type; EnumFields: type name;
                         // WordPool: "title" or "abstract"
    std::int64_t lo = 0; // IntRange (lo, hi]; DateRange [lo, hi]
    std::int64_t hi = 0;

    std::string domain_spec() const {
        switch (domain) {
            case Domain::EntityIds: return "entity-id-pool(" + pool + ")";
            case Domain::EnumFields: return "enum-field-pool(" + pool + ")";
            case Domain::IntRange:
                return "int-range(" + std::to_string(lo) + "," + std::to_string(hi) + "]";
            case Domain::WordPool: return "word-pool(" + pool + ")";
            case Domain::DateRange:
                return "date-range(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
        }
        return {};
    }
};

struct QueryTemplate {
    std::string id;  // "QT1".."QT16"
    std::vector<std::string> chokePoints;
    std::vector<PlaceholderSpec> placeholders;
    std::string text;
};

struct QueryInstance {
    std::string instanceId;
    std::string templateId;
    std::string queryText;
    Json variables;  // JSON object: placeholder name -> value
};

namespace detail {

inline const std::vector<std::string>& enum_field_values(const std::string& pool) {
    static const std::vector<std::string> pub = {"title", "abstract"};
    static const std::vector<std::string> grad = {"id",  "emailAddress", "telephone",
                                                  "age", "ugDegreeYear", "name"};
    static const std::vector<std::string> rank = {"FullProfessor", "AssociateProfessor",
                                                  "AssistantProfessor", "Lecturer"};
    if (pool == "Publication") return pub;
    if (pool == "GraduateStudent") return grad;
    if (pool == "Rank") return rank;
    throw std::invalid_argument("unknown enum field pool: " + pool);
}

inline std::int64_t domain_size(const PlaceholderSpec& p, const DatasetMetadata& md) {
    switch (p.domain) {
        case PlaceholderSpec::Domain::EntityIds: {
            // University placeholders draw from the fixed referenced pool so
            // that instance sets stay valid (and equally sized) at any scale.
            if (p.pool == "University")
                return static_cast<std::int64_t>(md.referencedUniversityIds.size());
            if (p.pool == "Department")
                return static_cast<std::int64_t>(md.departmentIds.size());
            if (p.pool == "Publication")
                return static_cast<std::int64_t>(md.publicationIds.size());
            if (p.pool == "GraduateStudent")
                return static_cast<std::int64_t>(md.graduateStudentIds.size());
            if (p.pool == "FacultyMember")
                return static_cast<std::int64_t>(md.facultyIds.size());
            throw std::invalid_argument("unknown entity id pool: " + p.pool);
        }
        case PlaceholderSpec::Domain::EnumFields:
            return static_cast<std::int64_t>(enum_field_values(p.pool).size());
        case PlaceholderSpec::Domain::IntRange:
            return p.hi - p.lo;
        case PlaceholderSpec::Domain::WordPool:
            return static_cast<std::int64_t>(
                (p.pool == "abstract" ? md.abstractWords : md.titleWords).size());
        case PlaceholderSpec::Domain::DateRange:
            return p.hi - p.lo + 1;
    }
    return 0;
}

inline Json domain_value(const PlaceholderSpec& p, const DatasetMetadata& md,
                         std::int64_t idx) {
    switch (p.domain) {
        case PlaceholderSpec::Domain::EntityIds: {
            const std::vector<Id>* ids = nullptr;
            if (p.pool == "University") ids = &md.referencedUniversityIds;
            else if (p.pool == "Department") ids = &md.departmentIds;
            else if (p.pool == "Publication") ids = &md.publicationIds;
            else if (p.pool == "GraduateStudent") ids = &md.graduateStudentIds;
            else if (p.pool == "FacultyMember") ids = &md.facultyIds;
            else throw std::invalid_argument("unknown entity id pool: " + p.pool);
            return (*ids)[static_cast<std::size_t>(idx)];
        }
        case PlaceholderSpec::Domain::EnumFields:
            return enum_field_values(p.pool)[static_cast<std::size_t>(idx)];
        case PlaceholderSpec::Domain::IntRange:
            return p.lo + 1 + idx;  // (lo, hi]
        case PlaceholderSpec::Domain::WordPool:
            return (p.pool == "abstract" ? md.abstractWords
                                         : md.titleWords)[static_cast<std::size_t>(idx)];
        case PlaceholderSpec::Domain::DateRange:
            return p.lo + idx;
    }
    return nullptr;
}

// Two placeholders with the same enum-field-pool domain in one template form
// a distinct pair: instances must assign them different values (QT8's order
// spec needs two different sort fields). Returns index of the partner for
// the second member of such a pair, or -1.
inline int distinct_partner(const QueryTemplate& t, std::size_t i) {
    const auto& p = t.placeholders[i];
    if (p.domain != PlaceholderSpec::Domain::EnumFields) return -1;
    for (std::size_t j = 0; j < i; ++j) {
        const auto& q = t.placeholders[j];
        if (q.domain == PlaceholderSpec::Domain::EnumFields && q.pool == p.pool)
            return static_cast<int>(j);
    }
    return -1;
}

}  // namespace detail

inline std::int64_t count_instances(const QueryTemplate& t, const DatasetMetadata& md) {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < t.placeholders.size(); ++i) {
        std::int64_t d = detail::domain_size(t.placeholders[i], md);
        if (detail::distinct_partner(t, i) >= 0) d -= 1;  // must differ from partner
        if (d <= 0) return 0;
        n *= d;
    }
    return n;
}

namespace detail {

// Decode a flat combination index into per-placeholder values, mixed-radix
// over the placeholder list in declared order (last placeholder varies
// fastest). Distinct-pair members skip their partner's value.
inline Json decode_combination(const QueryTemplate& t, const DatasetMetadata& md,
                               std::int64_t index) {
    std::vector<std::int64_t> digits(t.placeholders.size());
    for (std::size_t k = t.placeholders.size(); k-- > 0;) {
        std::int64_t d = domain_size(t.placeholders[k], md);
        if (distinct_partner(t, k) >= 0) d -= 1;
        digits[k] = index % d;
        index /= d;
    }
    Json vars = Json::object();
    std::vector<std::int64_t> chosen(t.placeholders.size());
    for (std::size_t k = 0; k < t.placeholders.size(); ++k) {
        std::int64_t v = digits[k];
        int partner = distinct_partner(t, k);
        if (partner >= 0 && v >= chosen[static_cast<std::size_t>(partner)]) ++v;
        chosen[k] = v;
        vars[t.placeholders[k].name] = domain_value(t.placeholders[k], md, v);
    }
    return vars;
}

}  // namespace detail

// n distinct instances (or the whole domain if smaller), uniform without
// replacement, deterministic in (template, metadata, n, seed).
inline std::vector<QueryInstance> instantiate(const QueryTemplate& t,
                                              const DatasetMetadata& md,
                                              std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("instance count must be >= 1");
    std::int64_t total = count_instances(t, md);
    if (total == 0) throw std::runtime_error("template " + t.id + " has an empty domain");
    std::int64_t want = std::min(n, total);

    std::uint64_t tag = 0;
    for (char c : t.id) tag = tag * 131 + static_cast<unsigned char>(c);
    Rng rng = Rng::keyed(seed, 0x77AB5EEDu, tag);

    std::vector<std::int64_t> picks;
    picks.reserve(static_cast<std::size_t>(want));
    if (total <= 1'000'000) {
        // partial Fisher-Yates over the enumerated domain
        std::vector<std::int64_t> idx(static_cast<std::size_t>(total));
        for (std::int64_t i = 0; i < total; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (std::int64_t i = 0; i < want; ++i) {
            std::int64_t j = i + static_cast<std::int64_t>(
                                     rng.bounded(static_cast<std::uint64_t>(total - i)));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
            picks.push_back(idx[static_cast<std::size_t>(i)]);
        }
    } else {
        std::unordered_set<std::int64_t> seen;
        while (static_cast<std::int64_t>(picks.size()) < want) {
            auto c = static_cast<std::int64_t>(
                rng.bounded(static_cast<std::uint64_t>(total)));
            if (seen.insert(c).second) picks.push_back(c);
        }
    }

    std::vector<QueryInstance> out;
    out.reserve(picks.size());
    for (std::size_t i = 0; i < picks.size(); ++i) {
        QueryInstance q;
        q.instanceId = t.id + "-" + std::to_string(i);
        q.templateId = t.id;
        q.queryText = t.text;
        q.variables = detail::decode_combination(t, md, picks[i]);
        out.push_back(std::move(q));
    }
    return out;
}

// Concatenates per-template instance sets and shuffles the whole sequence.
// A different seed reorders the result but keeps the multiset of queries.
inline std::vector<QueryInstance> compose_mixed(const std::vector<QueryTemplate>& ts,
                                                std::int64_t perTemplate,
                                                const DatasetMetadata& md,
                                                std::uint64_t seed) {
    if (perTemplate < 1) throw std::invalid_argument("perTemplate must be >= 1");
    std::vector<QueryInstance> all;
    for (const auto& t : ts) {
        std::int64_t n = std::min(perTemplate, count_instances(t, md));
        if (n < 1) continue;
        auto part = instantiate(t, md, n, seed);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    Rng rng = Rng::keyed(seed, 0x5A0FFul);
    for (std::size_t i = all.size(); i > 1; --i)
        std::swap(all[i - 1], all[rng.bounded(i)]);
    return all;
}

// ---- built-in templates ----

namespace detail {

inline PlaceholderSpec ph_ids(std::string name, std::string entity) {
    return {std::move(name), PlaceholderSpec::Domain::EntityIds, std::move(entity)};
}
inline PlaceholderSpec ph_enum(std::string name, std::string pool) {
    return {std::move(name), PlaceholderSpec::Domain::EnumFields, std::move(pool)};
}
inline PlaceholderSpec ph_int(std::string name, std::int64_t lo, std::int64_t hi) {
    return {std::move(name), PlaceholderSpec::Domain::IntRange, {}, lo, hi};
}
inline PlaceholderSpec ph_word(std::string name, std::string which) {
    return {std::move(name), PlaceholderSpec::Domain::WordPool, std::move(which)};
}
inline PlaceholderSpec ph_date(std::string name, std::int64_t lo, std::int64_t hi) {
    return {std::move(name), PlaceholderSpec::Domain::DateRange, {}, lo, hi};
}

}  // namespace detail

inline const std::vector<QueryTemplate>& builtin_templates() {
    using namespace detail;
    static const std::vector<QueryTemplate> ts = [] {
        std::vector<QueryTemplate> v;

        v.push_back({"QT1",
                     {"CP1.1", "CP2.1", "CP2.2"},
                     {ph_ids("universityID", "University")},
                     "query qt1($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent { id }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT2",
                     {"CP2.1"},
                     {ph_ids("universityID", "University")},
                     "query qt2($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent {\n"
                     "      id name emailAddress telephone age ugDegreeYear\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT3",
                     {"CP2.2", "CP2.3"},
                     {ph_ids("publicationID", "Publication")},
                     "query qt3($publicationID:ID) {\n"
                     "  publication(nr:$publicationID) {\n"
                     "    author {\n"
                     "      worksFor {\n"
                     "        subOrganizationOf { name }\n"
                     "      }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT4",
                     {"CP2.1", "CP2.2", "CP2.3", "CP2.5"},
                     {ph_ids("universityID", "University")},
                     "query qt4($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent {\n"
                     "      memberOf { id }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT5",
                     {"CP2.1", "CP2.2", "CP2.3", "CP2.4"},
                     {ph_ids("departmentID", "Department")},
                     "query qt5($departmentID:ID) {\n"
                     "  department(nr:$departmentID) {\n"
                     "    id\n"
                     "    subOrganizationOf {\n"
                     "      id\n"
                     "      undergraduateDegreeObtainedBystudent {\n"
                     "        id\n"
                     "        emailAddress\n"
                     "        memberOf {\n"
                     "          id\n"
                     "          subOrganizationOf {\n"
                     "            id\n"
                     "            undergraduateDegreeObtainedBystudent {\n"
                     "              id\n"
                     "              emailAddress\n"
                     "              memberOf { id }\n"
                     "} } } } } } }\n"});

        v.push_back({"QT6",
                     {"CP2.1", "CP2.2", "CP2.5"},
                     {ph_ids("universityID", "University")},
                     "query qt6($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent {\n"
                     "      advisor { id }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT7",
                     {"CP2.1", "CP2.2", "CP2.5", "CP3.2"},
                     {ph_ids("departmentID", "Department"), ph_int("offset", 0, 100)},
                     "query qt7($departmentID:ID, $offset:Int) {\n"
                     "  department(nr:$departmentID) {\n"
                     "    undergraduateStudents(limit:10, offset:$offset) {\n"
                     "      memberOf { id }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT8",
                     {"CP1.1", "CP3.1", "CP3.3"},
                     {ph_int("cnt", 500, 1000),
                      ph_enum("attrGStudent1", "GraduateStudent"),
                      ph_enum("attrGStudent2", "GraduateStudent")},
                     "query qt8($cnt:Int, $attrGStudent1:GraduateStudentField,"
                     " $attrGStudent2:GraduateStudentField) {\n"
                     "  graduateStudents(limit:$cnt, order:{primary:$attrGStudent1,"
                     " secondary:$attrGStudent2, direction:ASC}) {\n"
                     "    emailAddress\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT9",
                     {"CP2.1", "CP2.2", "CP2.5", "CP3.1", "CP3.3"},
                     {ph_ids("universityID", "University"),
                      ph_enum("attrPublicationField", "Publication")},
                     "query qt9($universityID:ID, $attrPublicationField:PublicationField) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent(limit:50) {\n"
                     "      advisor {\n"
                     "        publications(order: {field:$attrPublicationField,"
                     " direction:DESC}) {\n"
                     "          id\n"
                     "} } } } }\n"});

        v.push_back({"QT10",
                     {"CP1.1", "CP4.1"},
                     {ph_word("word", "title")},
                     "query qt10($word:String) {\n"
                     "  searchPublications(titleWord:$word) { id }\n"
                     "}\n"});

        v.push_back({"QT11",
                     {"CP2.2", "CP2.3", "CP2.5", "CP4.4"},
                     {ph_ids("universityID", "University"), ph_enum("rank", "Rank")},
                     "query qt11($universityID:ID, $rank:Rank) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent(hasAdvisorRank:$rank) {\n"
                     "      id\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT12",
                     {"CP2.1", "CP2.3", "CP4.3"},
                     {ph_ids("departmentID", "Department"), ph_enum("rank", "Rank")},
                     "query qt12($departmentID:ID, $rank:Rank) {\n"
                     "  department(nr:$departmentID) {\n"
                     "    graduateStudents(advisorRank:$rank) {\n"
                     "      id emailAddress\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT13",
                     {"CP2.1", "CP2.3", "CP2.5", "CP4.1", "CP4.3"},
                     {ph_ids("universityID", "University"), ph_word("word", "title")},
                     "query qt13($universityID:ID, $word:String) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent {\n"
                     "      advisor {\n"
                     "        publications(titleWord:$word, limit:3) { id }\n"
                     "      }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT14",
                     {"CP2.1", "CP2.3", "CP2.5", "CP4.1", "CP4.2", "CP4.3", "CP4.5"},
                     {ph_ids("universityID", "University"), ph_word("word", "title"),
                      ph_date("year", 1990, 2020)},
                     "query qt14($universityID:ID, $word:String, $year:Int) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudent {\n"
                     "      advisor {\n"
                     "        publications(titleWord:$word, yearAtLeast:$year, limit:3)"
                     " { id }\n"
                     "      }\n"
                     "    }\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT15",
                     {"CP5.2"},
                     {ph_ids("universityID", "University")},
                     "query qt15($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    undergraduateDegreeObtainedBystudentCount\n"
                     "  }\n"
                     "}\n"});

        v.push_back({"QT16",
                     {"CP1.1", "CP5.1"},
                     {ph_ids("universityID", "University")},
                     "query qt16($universityID:ID) {\n"
                     "  university(nr:$universityID) {\n"
                     "    avgDegreeStudentAge\n"
                     "  }\n"
                     "}\n"});

        return v;
    }();
    return ts;
}

inline const QueryTemplate& find_template(const std::string& id) {
    for (const auto& t : builtin_templates())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown template: " + id);
}

// ---- template file format ----
// header lines `id=`, `chokepoints=`, `placeholder=name:domain-spec`,
// a `---` separator, then the raw query text.

inline std::string template_to_string(const QueryTemplate& t) {
    std::ostringstream os;
    os << "id=" << t.id << "\n";
    os << "chokepoints=";
    for (std::size_t i = 0; i < t.chokePoints.size(); ++i)
        os << (i ? "," : "") << t.chokePoints[i];
    os << "\n";
    for (const auto& p : t.placeholders)
        os << "placeholder=" << p.name << ":" << p.domain_spec() << "\n";
    os << "---\n" << t.text;
    return os.str();
}

namespace detail {

inline PlaceholderSpec parse_domain_spec(std::string name, const std::string& spec) {
    auto paren = spec.find('(');
    if (paren == std::string::npos || spec.size() < paren + 2)
        throw std::runtime_error("bad placeholder domain spec: " + spec);
    std::string kind = spec.substr(0, paren);
    std::string body = spec.substr(paren + 1, spec.size() - paren - 2);
    if (kind == "entity-id-pool") return ph_ids(std::move(name), body);
    if (kind == "enum-field-pool") return ph_enum(std::move(name), body);
    if (kind == "word-pool") return ph_word(std::move(name), body);
    auto comma = body.find(',');
    if (comma == std::string::npos)
        throw std::runtime_error("bad placeholder domain spec: " + spec);
    std::int64_t lo = std::stoll(body.substr(0, comma));
    std::int64_t hi = std::stoll(body.substr(comma + 1));
    if (kind == "int-range") return ph_int(std::move(name), lo, hi);
    if (kind == "date-range") return ph_date(std::move(name), lo, hi);
    throw std::runtime_error("unknown placeholder domain kind: " + kind);
}

}  // namespace detail

inline QueryTemplate parse_template_file(const std::string& content) {
    QueryTemplate t;
    std::istringstream is(content);
    std::string line;
    bool sawSeparator = false;
    std::ostringstream text;
    while (std::getline(is, line)) {
        if (sawSeparator) {
            text << line << "\n";
            continue;
        }
        if (line == "---") {
            sawSeparator = true;
        } else if (line.rfind("id=", 0) == 0) {
            t.id = line.substr(3);
        } else if (line.rfind("chokepoints=", 0) == 0) {
            std::istringstream cps(line.substr(12));
            std::string cp;
            while (std::getline(cps, cp, ','))
                if (!cp.empty()) t.chokePoints.push_back(cp);
        } else if (line.rfind("placeholder=", 0) == 0) {
            std::string rest = line.substr(12);
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("bad placeholder line: " + line);
            t.placeholders.push_back(detail::parse_domain_spec(
                rest.substr(0, colon), rest.substr(colon + 1)));
        } else if (!line.empty()) {
            throw std::runtime_error("unrecognized template header line: " + line);
        }
    }
    if (t.id.empty() || !sawSeparator)
        throw std::runtime_error("template file missing id or '---' separator");
    t.text = text.str();
    return t;
}

// ---- workload file format ----
// one record per line: instanceId TAB templateId TAB queryText TAB variablesJSON
// (newlines in the query text collapse to spaces; GraphQL ignores whitespace)

inline std::string workload_to_string(const std::vector<QueryInstance>& ws) {
    std::ostringstream os;
    for (const auto& q : ws) {
        std::string flat = q.queryText;
        for (char& c : flat)
            if (c == '\n' || c == '\t') c = ' ';
        os << q.instanceId << '\t' << q.templateId << '\t' << flat << '\t'
           << q.variables.dump() << '\n';
    }
    return os.str();
}

inline std::vector<QueryInstance> parse_workload(const std::string& content) {
    std::vector<QueryInstance> out;
    std::istringstream is(content);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::array<std::string, 4> cols;
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            auto tab = line.find('\t', start);
            if (tab == std::string::npos)
                throw std::runtime_error("workload line needs 4 tab-separated fields");
            cols[static_cast<std::size_t>(i)] = line.substr(start, tab - start);
            start = tab + 1;
        }
        cols[3] = line.substr(start);
        out.push_back({cols[0], cols[1], cols[2], Json::parse(cols[3])});
    }
    return out;
}

}  // namespace gqlbench
