#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "gqlbench/datagen.hpp"
#include "gqlbench/metadata.hpp"

using namespace gqlbench;

namespace {
const Dataset& ds1() {
    static const Dataset d = generate(ScaleFactor{1}, 42);
    return d;
}
const Dataset& ds5() {
    static const Dataset d = generate(ScaleFactor{5}, 42);
    return d;
}
}  // namespace

TEST_CASE("generated datasets have zero validator violations") {
    CHECK(validate(ds1()).empty());
    CHECK(validate(ds5()).empty());
}

TEST_CASE("university rows cover the full referenced pool") {
    CHECK(ds1().universities.size() == 1000);
    CHECK(ds5().universities.size() == 1000);
    for (Id u = 0; u < 1000; ++u) CHECK(ds1().universities[u].id == u);
}

TEST_CASE("department counts come from {15..25} and balance per block of 11") {
    std::map<int, int> freq;
    for (Id u = 0; u < 110; ++u) {
        int n = detail::department_count(42, u);
        REQUIRE(n >= 15);
        REQUIRE(n <= 25);
        ++freq[n];
    }
    // each block of 11 universities is a permutation of {15..25}, so over 10
    // blocks every count appears exactly 10 times
    for (int v = 15; v <= 25; ++v) CHECK(freq[v] == 10);
}

TEST_CASE("generation is deterministic") {
    Dataset a = generate(ScaleFactor{1}, 123);
    Dataset b = generate(ScaleFactor{1}, 123);
    CHECK(a.total_rows() == b.total_rows());
    CHECK(metadata_to_string(emit_metadata(a)) == metadata_to_string(emit_metadata(b)));
    Dataset c = generate(ScaleFactor{1}, 124);
    CHECK(metadata_to_string(emit_metadata(a)) != metadata_to_string(emit_metadata(c)));
}

TEST_CASE("smaller scale is a field-for-field subset of larger scale") {
    const Dataset& a = ds1();
    const Dataset& b = ds5();
    REQUIRE(a.departments.size() <= b.departments.size());
    for (std::size_t i = 0; i < a.departments.size(); ++i) {
        CHECK(a.departments[i].nr == b.departments[i].nr);
        CHECK(a.departments[i].universityId == b.departments[i].universityId);
        CHECK(a.departments[i].name == b.departments[i].name);
    }
    REQUIRE(a.faculty.size() <= b.faculty.size());
    for (std::size_t i = 0; i < a.faculty.size(); ++i) {
        CHECK(a.faculty[i].id == b.faculty[i].id);
        CHECK(a.faculty[i].name == b.faculty[i].name);
        CHECK(a.faculty[i].rank == b.faculty[i].rank);
        CHECK(a.faculty[i].departmentNr == b.faculty[i].departmentNr);
        CHECK(a.faculty[i].publications == b.faculty[i].publications);
    }
    REQUIRE(a.graduateStudents.size() <= b.graduateStudents.size());
    for (std::size_t i = 0; i < a.graduateStudents.size(); ++i) {
        const auto& x = a.graduateStudents[i];
        const auto& y = b.graduateStudents[i];
        CHECK(x.id == y.id);
        CHECK(x.name == y.name);
        CHECK(x.emailAddress == y.emailAddress);
        CHECK(x.age == y.age);
        CHECK(x.departmentNr == y.departmentNr);
        CHECK(x.undergraduateDegreeFrom == y.undergraduateDegreeFrom);
        CHECK(x.advisorId == y.advisorId);
        CHECK(x.takenCourses == y.takenCourses);
    }
    REQUIRE(a.publications.size() <= b.publications.size());
    for (std::size_t i = 0; i < a.publications.size(); ++i) {
        CHECK(a.publications[i].title == b.publications[i].title);
        CHECK(a.publications[i].year == b.publications[i].year);
        CHECK(a.publications[i].authorId == b.publications[i].authorId);
    }
    REQUIRE(a.undergraduateStudents.size() <= b.undergraduateStudents.size());
    for (std::size_t i = 0; i < a.undergraduateStudents.size(); ++i) {
        CHECK(a.undergraduateStudents[i].name == b.undergraduateStudents[i].name);
        CHECK(a.undergraduateStudents[i].departmentNr ==
              b.undergraduateStudents[i].departmentNr);
    }
    REQUIRE(a.courses.size() <= b.courses.size());
    for (std::size_t i = 0; i < a.courses.size(); ++i) {
        CHECK(a.courses[i].name == b.courses[i].name);
        CHECK(a.courses[i].teacherId == b.courses[i].teacherId);
    }
}

TEST_CASE("degree-granting fan-in is exact for generated universities") {
    // every university with generated departments receives exactly 4*sf-1
    // degree students; no university anywhere exceeds that cap
    auto tally = [](const Dataset& ds) {
        std::map<Id, int> counts;
        for (const auto& g : ds.graduateStudents) ++counts[g.undergraduateDegreeFrom];
        return counts;
    };
    auto c1 = tally(ds1());
    for (Id j = 0; j < 1; ++j) CHECK(c1[j] == 3);
    for (const auto& [u, n] : c1) CHECK(n <= 3);

    auto c5 = tally(ds5());
    for (Id j = 0; j < 5; ++j) CHECK(c5[j] == 19);
    for (const auto& [u, n] : c5) CHECK(n <= 19);
}
