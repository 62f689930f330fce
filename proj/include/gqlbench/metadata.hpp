#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gqlbench/domain.hpp"

namespace gqlbench {

// ID pools and word lists used to instantiate query templates. Line-oriented
// text format: `scaleFactor=` / `seed=` headers, then one `[Section] a,b,c`
// line per pool. Bit-exact given (sf, seed).
struct DatasetMetadata {
    int scaleFactor = 0;
    std::uint64_t seed = 0;

    std::vector<Id> universityIds;
    std::vector<Id> departmentIds;
    std::vector<Id> facultyIds;
    std::vector<Id> graduateStudentIds;
    std::vector<Id> undergraduateStudentIds;
    std::vector<Id> publicationIds;
    std::vector<Id> courseIds;
    std::vector<Id> researchGroupIds;
    std::vector<Id> referencedUniversityIds;

    // Distinct words actually occurring in titles/abstracts, in first-occurrence
    // order (publication id order), so smaller scales are prefixes of larger ones.
    std::vector<std::string> titleWords;
    std::vector<std::string> abstractWords;
};

namespace detail {

inline void collect_words(const std::string& text, std::vector<std::string>& out,
                          std::unordered_set<std::string>& seen) {
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(' ', i);
        if (j == std::string::npos) j = text.size();
        std::string w = text.substr(i, j - i);
        if (!w.empty() && seen.insert(w).second) out.push_back(w);
        i = j + 1;
    }
}

}  // namespace detail

inline DatasetMetadata emit_metadata(const Dataset& ds) {
    DatasetMetadata md;
    md.scaleFactor = ds.scaleFactor;
    md.seed = ds.seed;
    for (const auto& e : ds.universities) md.universityIds.push_back(e.id);
    for (const auto& e : ds.departments) md.departmentIds.push_back(e.nr);
    for (const auto& e : ds.faculty) md.facultyIds.push_back(e.id);
    for (const auto& e : ds.graduateStudents) md.graduateStudentIds.push_back(e.id);
    for (const auto& e : ds.undergraduateStudents)
        md.undergraduateStudentIds.push_back(e.id);
    for (const auto& e : ds.publications) md.publicationIds.push_back(e.id);
    for (const auto& e : ds.courses) md.courseIds.push_back(e.id);
    for (const auto& e : ds.researchGroups) md.researchGroupIds.push_back(e.id);
    // Always exactly the fixed reference pool, regardless of how many
    // universities the dataset generates beyond it.
    md.referencedUniversityIds.resize(
        static_cast<std::size_t>(kReferencedUniversityPool));
    for (Id u = 0; u < kReferencedUniversityPool; ++u)
        md.referencedUniversityIds[static_cast<std::size_t>(u)] = u;

    std::unordered_set<std::string> seenT, seenA;
    for (const auto& p : ds.publications) {
        detail::collect_words(p.title, md.titleWords, seenT);
        detail::collect_words(p.abstract, md.abstractWords, seenA);
    }
    return md;
}

namespace detail {

inline void write_id_section(std::ostream& os, const char* name,
                             const std::vector<Id>& ids) {
    os << '[' << name << "] ";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ',';
        os << ids[i];
    }
    os << '\n';
}

inline void write_word_section(std::ostream& os, const char* name,
                               const std::vector<std::string>& words) {
    os << '[' << name << "] ";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) os << ',';
        os << words[i];
    }
    os << '\n';
}

}  // namespace detail

inline void write_metadata(const DatasetMetadata& md, std::ostream& os) {
    os << "scaleFactor=" << md.scaleFactor << '\n';
    os << "seed=" << md.seed << '\n';
    detail::write_id_section(os, "University", md.universityIds);
    detail::write_id_section(os, "Department", md.departmentIds);
    detail::write_id_section(os, "FacultyMember", md.facultyIds);
    detail::write_id_section(os, "GraduateStudent", md.graduateStudentIds);
    detail::write_id_section(os, "UndergraduateStudent", md.undergraduateStudentIds);
    detail::write_id_section(os, "Publication", md.publicationIds);
    detail::write_id_section(os, "Course", md.courseIds);
    detail::write_id_section(os, "ResearchGroup", md.researchGroupIds);
    detail::write_id_section(os, "referencedUniversities", md.referencedUniversityIds);
    detail::write_word_section(os, "titleWords", md.titleWords);
    detail::write_word_section(os, "abstractWords", md.abstractWords);
}

inline std::string metadata_to_string(const DatasetMetadata& md) {
    std::ostringstream os;
    write_metadata(md, os);
    return os.str();
}

inline DatasetMetadata parse_metadata(std::istream& is) {
    DatasetMetadata md;
    std::string line;
    auto ids_of = [&](const std::string& body, std::vector<Id>& out) {
        std::size_t i = 0;
        while (i < body.size()) {
            std::size_t j = body.find(',', i);
            if (j == std::string::npos) j = body.size();
            if (j > i) out.push_back(std::stoll(body.substr(i, j - i)));
            i = j + 1;
        }
    };
    auto words_of = [&](const std::string& body, std::vector<std::string>& out) {
        std::size_t i = 0;
        while (i < body.size()) {
            std::size_t j = body.find(',', i);
            if (j == std::string::npos) j = body.size();
            if (j > i) out.push_back(body.substr(i, j - i));
            i = j + 1;
        }
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("scaleFactor=", 0) == 0) {
            md.scaleFactor = std::stoi(line.substr(12));
        } else if (line.rfind("seed=", 0) == 0) {
            md.seed = std::stoull(line.substr(5));
        } else if (line[0] == '[') {
            std::size_t close = line.find(']');
            if (close == std::string::npos) throw std::runtime_error("bad metadata line");
            std::string name = line.substr(1, close - 1);
            std::string body = close + 2 <= line.size() ? line.substr(close + 2) : "";
            if (name == "University") ids_of(body, md.universityIds);
            else if (name == "Department") ids_of(body, md.departmentIds);
            else if (name == "FacultyMember") ids_of(body, md.facultyIds);
            else if (name == "GraduateStudent") ids_of(body, md.graduateStudentIds);
            else if (name == "UndergraduateStudent") ids_of(body, md.undergraduateStudentIds);
            else if (name == "Publication") ids_of(body, md.publicationIds);
            else if (name == "Course") ids_of(body, md.courseIds);
            else if (name == "ResearchGroup") ids_of(body, md.researchGroupIds);
            else if (name == "referencedUniversities") ids_of(body, md.referencedUniversityIds);
            else if (name == "titleWords") words_of(body, md.titleWords);
            else if (name == "abstractWords") words_of(body, md.abstractWords);
            else throw std::runtime_error("unknown metadata section: " + name);
        } else {
            throw std::runtime_error("bad metadata line: " + line);
        }
    }
    return md;
}

inline DatasetMetadata parse_metadata(const std::string& text) {
    std::istringstream is(text);
    return parse_metadata(is);
}

}  // namespace gqlbench
