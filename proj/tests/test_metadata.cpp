#include <catch2/catch_amalgamated.hpp>

#include "gqlbench/datagen.hpp"
#include "gqlbench/metadata.hpp"

using namespace gqlbench;

namespace {
const DatasetMetadata& md1() {
    static const DatasetMetadata m = emit_metadata(generate(ScaleFactor{1}, 42));
    return m;
}
const DatasetMetadata& md2() {
    static const DatasetMetadata m = emit_metadata(generate(ScaleFactor{2}, 42));
    return m;
}
}  // namespace

TEST_CASE("referenced-university list is always the fixed 1000-id pool") {
    REQUIRE(md1().referencedUniversityIds.size() == 1000);
    REQUIRE(md2().referencedUniversityIds.size() == 1000);
    for (Id i = 0; i < 1000; ++i) {
        CHECK(md1().referencedUniversityIds[static_cast<std::size_t>(i)] == i);
        CHECK(md2().referencedUniversityIds[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("id lists at a smaller scale are prefixes of the larger scale") {
    auto prefix = [](const std::vector<Id>& small, const std::vector<Id>& big) {
        REQUIRE(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i) REQUIRE(small[i] == big[i]);
    };
    prefix(md1().departmentIds, md2().departmentIds);
    prefix(md1().facultyIds, md2().facultyIds);
    prefix(md1().graduateStudentIds, md2().graduateStudentIds);
    prefix(md1().undergraduateStudentIds, md2().undergraduateStudentIds);
    prefix(md1().publicationIds, md2().publicationIds);
    prefix(md1().courseIds, md2().courseIds);
    prefix(md1().researchGroupIds, md2().researchGroupIds);

    // word lists are in first-occurrence order, so they are prefixes too
    REQUIRE(md1().titleWords.size() <= md2().titleWords.size());
    for (std::size_t i = 0; i < md1().titleWords.size(); ++i)
        REQUIRE(md1().titleWords[i] == md2().titleWords[i]);
}

TEST_CASE("metadata text format roundtrips") {
    std::string text = metadata_to_string(md1());
    CHECK(text.rfind("scaleFactor=1\nseed=42\n", 0) == 0);
    CHECK(text.find("[University] ") != std::string::npos);
    CHECK(text.find("[titleWords] ") != std::string::npos);

    DatasetMetadata back = parse_metadata(text);
    CHECK(back.scaleFactor == md1().scaleFactor);
    CHECK(back.seed == md1().seed);
    CHECK(back.universityIds == md1().universityIds);
    CHECK(back.departmentIds == md1().departmentIds);
    CHECK(back.facultyIds == md1().facultyIds);
    CHECK(back.graduateStudentIds == md1().graduateStudentIds);
    CHECK(back.undergraduateStudentIds == md1().undergraduateStudentIds);
    CHECK(back.publicationIds == md1().publicationIds);
    CHECK(back.courseIds == md1().courseIds);
    CHECK(back.researchGroupIds == md1().researchGroupIds);
    CHECK(back.referencedUniversityIds == md1().referencedUniversityIds);
    CHECK(back.titleWords == md1().titleWords);
    CHECK(back.abstractWords == md1().abstractWords);
}

TEST_CASE("parse rejects malformed metadata") {
    CHECK_THROWS(parse_metadata(std::string("nonsense line")));
    CHECK_THROWS(parse_metadata(std::string("[bogusSection] 1,2,3")));
}

TEST_CASE("word lists only contain words from the fixed pool") {
    const auto& pool = word_pool();
    auto in_pool = [&](const std::string& w) {
        return std::find(pool.begin(), pool.end(), w) != pool.end();
    };
    REQUIRE(!md1().titleWords.empty());
    REQUIRE(!md1().abstractWords.empty());
    for (const auto& w : md1().titleWords) REQUIRE(in_pool(w));
    for (std::size_t i = 0; i < 50 && i < md1().abstractWords.size(); ++i)
        REQUIRE(in_pool(md1().abstractWords[i]));
}
