#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqlbench {

using Id = std::int64_t;

// Number of universities to generate; the dataset-size knob.
struct ScaleFactor {
    int value;

    explicit ScaleFactor(int v) : value(v) {
        if (v < 1) throw std::invalid_argument("scale factor must be >= 1");
    }
};

// Universities with id < sf are generated (they own departments); the rest of
// the pool exists only as degree-granting references.
inline constexpr Id kReferencedUniversityPool = 1000;

enum class Rank { FullProfessor, AssociateProfessor, AssistantProfessor, Lecturer };

inline const char* rank_name(Rank r) {
    switch (r) {
        case Rank::FullProfessor: return "FullProfessor";
        case Rank::AssociateProfessor: return "AssociateProfessor";
        case Rank::AssistantProfessor: return "AssistantProfessor";
        case Rank::Lecturer: return "Lecturer";
    }
    return "?";
}

struct University {
    Id id;
    std::string name;
};

struct Department {
    Id nr;
    Id universityId;  // subOrganizationOf
    std::string name;
};

struct FacultyMember {
    Id id;
    std::string name;
    std::string emailAddress;
    std::string telephone;
    Rank rank;
    Id departmentNr;
    std::vector<Id> publications;
};

// Exactly six scalar fields usable as sort keys:
// id, emailAddress, telephone, age, ugDegreeYear, name.
struct GraduateStudent {
    Id id;
    std::string name;
    std::string emailAddress;
    std::string telephone;
    int age;
    int ugDegreeYear;
    Id departmentNr;              // memberOf
    Id undergraduateDegreeFrom;   // drawn from the global university pool
    Id advisorId;
    std::vector<Id> takenCourses;
};

struct UndergraduateStudent {
    Id id;
    std::string name;
    std::string emailAddress;
    std::string telephone;
    int age;
    Id departmentNr;
    std::vector<Id> takenCourses;
};

struct Publication {
    Id id;
    std::string title;
    std::string abstract;
    int year;
    Id authorId;
};

struct Course {
    Id id;
    std::string name;
    Id departmentNr;
    Id teacherId;
};

struct ResearchGroup {
    Id id;
    std::string name;
    Id departmentNr;
};

struct Dataset {
    int scaleFactor = 0;
    std::uint64_t seed = 0;

    std::vector<University> universities;  // full pool, generated + referenced
    std::vector<Department> departments;
    std::vector<FacultyMember> faculty;
    std::vector<GraduateStudent> graduateStudents;
    std::vector<UndergraduateStudent> undergraduateStudents;
    std::vector<Publication> publications;
    std::vector<Course> courses;
    std::vector<ResearchGroup> researchGroups;

    std::size_t total_entities() const {
        return universities.size() + departments.size() + faculty.size() +
               graduateStudents.size() + undergraduateStudents.size() +
               publications.size() + courses.size() + researchGroups.size();
    }

    // Entity rows plus course-registration rows, i.e. everything emit_sql inserts.
    std::size_t total_rows() const {
        std::size_t n = total_entities();
        for (const auto& s : graduateStudents) n += s.takenCourses.size();
        for (const auto& s : undergraduateStudents) n += s.takenCourses.size();
        return n;
    }
};

struct Violation {
    std::string entity;  // e.g. "university 3"
    std::string rule;    // e.g. "departments-per-university below 15"
    std::string observed;
};

// Checks every dataset-level invariant; violations are data, not errors.
inline std::vector<Violation> validate(const Dataset& ds) {
    std::vector<Violation> out;
    auto flag = [&](std::string entity, std::string rule, std::string observed) {
        out.push_back({std::move(entity), std::move(rule), std::move(observed)});
    };

    if (ds.scaleFactor < 1 || ds.universities.empty()) {
        flag("dataset", "no universities", std::to_string(ds.universities.size()));
        return out;
    }

    const Id poolSize = static_cast<Id>(ds.universities.size());
    auto univ_exists = [&](Id id) { return id >= 0 && id < poolSize; };

    // Departments per generated university.
    std::map<Id, int> deptCount;
    for (const auto& d : ds.departments) {
        deptCount[d.universityId]++;
        if (!univ_exists(d.universityId))
            flag("department " + std::to_string(d.nr), "dangling universityId",
                 std::to_string(d.universityId));
    }
    for (Id u = 0; u < ds.scaleFactor; ++u) {
        int n = deptCount.count(u) ? deptCount[u] : 0;
        if (n < 15)
            flag("university " + std::to_string(u),
                 "departments-per-university below 15", std::to_string(n));
        if (n > 25)
            flag("university " + std::to_string(u),
                 "departments-per-university above 25", std::to_string(n));
    }

    // Per-department tallies.
    std::map<Id, int> fullProf, facCount, gradCount, ugCount;
    std::map<Id, bool> deptExists;
    for (const auto& d : ds.departments) deptExists[d.nr] = true;
    for (const auto& f : ds.faculty) {
        facCount[f.departmentNr]++;
        if (f.rank == Rank::FullProfessor) fullProf[f.departmentNr]++;
        if (!deptExists.count(f.departmentNr))
            flag("faculty " + std::to_string(f.id), "dangling departmentNr",
                 std::to_string(f.departmentNr));
    }
    std::map<Id, int> degreeFromCount;
    std::map<Id, bool> facExists;
    for (const auto& f : ds.faculty) facExists[f.id] = true;
    for (const auto& g : ds.graduateStudents) {
        gradCount[g.departmentNr]++;
        degreeFromCount[g.undergraduateDegreeFrom]++;
        if (!deptExists.count(g.departmentNr))
            flag("graduate " + std::to_string(g.id), "dangling departmentNr",
                 std::to_string(g.departmentNr));
        if (!univ_exists(g.undergraduateDegreeFrom))
            flag("graduate " + std::to_string(g.id), "dangling undergraduateDegreeFrom",
                 std::to_string(g.undergraduateDegreeFrom));
        if (!facExists.count(g.advisorId))
            flag("graduate " + std::to_string(g.id), "dangling advisorId",
                 std::to_string(g.advisorId));
    }
    for (const auto& s : ds.undergraduateStudents) {
        ugCount[s.departmentNr]++;
        if (!deptExists.count(s.departmentNr))
            flag("undergraduate " + std::to_string(s.id), "dangling departmentNr",
                 std::to_string(s.departmentNr));
    }

    for (const auto& d : ds.departments) {
        int fp = fullProf.count(d.nr) ? fullProf[d.nr] : 0;
        if (fp < 7 || fp > 10)
            flag("department " + std::to_string(d.nr),
                 "full-professors-per-department outside [7,10]", std::to_string(fp));
        int fc = facCount.count(d.nr) ? facCount[d.nr] : 0;
        if (fc == 0) {
            flag("department " + std::to_string(d.nr), "no faculty", "0");
            continue;
        }
        double gr = static_cast<double>(gradCount[d.nr]) / fc;
        if (gr < 3.0 || gr > 4.0)
            flag("department " + std::to_string(d.nr),
                 "grad-student/faculty ratio outside [3,4]", std::to_string(gr));
        double ur = static_cast<double>(ugCount[d.nr]) / fc;
        if (ur < 8.0 || ur > 14.0)
            flag("department " + std::to_string(d.nr),
                 "undergrad-student/faculty ratio outside [8,14]", std::to_string(ur));
    }

    // Degree-from bound: at most 7*sf graduate students per granting university.
    for (const auto& [u, n] : degreeFromCount)
        if (n > 7 * ds.scaleFactor)
            flag("university " + std::to_string(u),
                 "degree-from count above 7*sf", std::to_string(n));

    // Remaining referential integrity.
    std::map<Id, bool> courseExists;
    for (const auto& c : ds.courses) {
        courseExists[c.id] = true;
        if (!deptExists.count(c.departmentNr))
            flag("course " + std::to_string(c.id), "dangling departmentNr",
                 std::to_string(c.departmentNr));
        if (!facExists.count(c.teacherId))
            flag("course " + std::to_string(c.id), "dangling teacherId",
                 std::to_string(c.teacherId));
    }
    for (const auto& p : ds.publications)
        if (!facExists.count(p.authorId))
            flag("publication " + std::to_string(p.id), "dangling authorId",
                 std::to_string(p.authorId));
    for (const auto& r : ds.researchGroups)
        if (!deptExists.count(r.departmentNr))
            flag("research group " + std::to_string(r.id), "dangling departmentNr",
                 std::to_string(r.departmentNr));
    auto check_courses = [&](const std::string& who, const std::vector<Id>& cs) {
        for (Id c : cs)
            if (!courseExists.count(c))
                flag(who, "dangling takenCourse", std::to_string(c));
    };
    for (const auto& g : ds.graduateStudents)
        check_courses("graduate " + std::to_string(g.id), g.takenCourses);
    for (const auto& s : ds.undergraduateStudents)
        check_courses("undergraduate " + std::to_string(s.id), s.takenCourses);

    return out;
}

}  // namespace gqlbench
