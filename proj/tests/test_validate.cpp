#include <catch2/catch_amalgamated.hpp>

#include "gqlbench/gql/parser.hpp"
#include "gqlbench/gql/result.hpp"
#include "gqlbench/gql/schema.hpp"
#include "gqlbench/gql/validate.hpp"
#include "gqlbench/workload.hpp"

using namespace gqlbench;
using namespace gqlbench::gql;

namespace {
const Schema& schema() {
    static const Schema s = benchmark_schema();
    return s;
}
std::vector<ValidationIssue> check(const std::string& text) {
    return validate(schema(), parse(text));
}
bool has_issue(const std::vector<ValidationIssue>& issues, const std::string& needle) {
    for (const auto& i : issues)
        if (i.message.find(needle) != std::string::npos) return true;
    return false;
}
}  // namespace

TEST_CASE("every built-in template validates cleanly") {
    for (const auto& t : builtin_templates()) {
        auto issues = check(t.text);
        INFO(t.id);
        for (const auto& i : issues) INFO(i.path << ": " << i.message);
        CHECK(issues.empty());
    }
}

TEST_CASE("unknown fields are reported with the owning type") {
    auto issues = check("{ university(nr:1) { departmen { id } } }");
    REQUIRE(!issues.empty());
    CHECK(has_issue(issues, "no field"));
}

TEST_CASE("object fields require a selection set and leaves forbid one") {
    CHECK(has_issue(check("{ university(nr:1) }"), "requires a selection set"));
    CHECK(has_issue(check("{ university(nr:1) { name { x } } }"), "leaf"));
}

TEST_CASE("argument names and value types are checked") {
    CHECK(has_issue(check("{ university(bogus:1) { id } }"), "argument"));
    CHECK(has_issue(check("{ university(nr:1) { undergraduateDegreeObtainedBystudent"
                          "(limit:\"ten\") { id } } }"),
                    "limit"));
    CHECK(check("{ university(nr:1) { undergraduateDegreeObtainedBystudent(limit:10)"
                " { id } } }")
              .empty());
}

TEST_CASE("enum values are checked inside input objects") {
    CHECK(check("{ graduateStudents(limit:5, order:{primary:age, secondary:id,"
                " direction:ASC}) { id } }")
              .empty());
    CHECK(!check("{ graduateStudents(limit:5, order:{primary:age, secondary:id,"
                 " direction:SIDEWAYS}) { id } }")
               .empty());
    CHECK(!check("{ graduateStudents(limit:5, order:{bogusField:age}) { id } }").empty());
}

TEST_CASE("variable declarations must exist and fit the argument type") {
    CHECK(!check("query ($x: Bogus) { university(nr:$x) { id } }").empty());
    // ID arguments accept ID, Int, and String declarations
    CHECK(check("query ($x: ID) { university(nr:$x) { id } }").empty());
    CHECK(check("query ($x: Int) { university(nr:$x) { id } }").empty());
    CHECK(check("query ($x: String!) { university(nr:$x) { id } }").empty());
    // an Int argument does not accept a String variable
    CHECK(!check("query ($x: String) { university(nr:1) {"
                 " undergraduateDegreeObtainedBystudent(limit:$x) { id } } }")
               .empty());
}

TEST_CASE("empty root selection is rejected") {
    CHECK(!validate(schema(), QueryDoc{}).empty());
}

TEST_CASE("leaf counting over response trees") {
    CHECK(count_leaf_nodes(Json(nullptr)) == 1);
    CHECK(count_leaf_nodes(Json(5)) == 1);
    CHECK(count_leaf_nodes(Json("x")) == 1);
    CHECK(count_leaf_nodes(Json::array()) == 0);
    CHECK(count_leaf_nodes(Json::object()) == 0);

    Json tree = Json::parse(R"({"a": {"b": 1, "c": null},
                                "d": [{"e": "x"}, {"e": "y"}, {}],
                                "f": []})");
    // leaves: b, c, two e's; empty array and empty object add none
    CHECK(count_leaf_nodes(tree) == 4);

    Json outer = Json::object();
    outer["left"] = tree;
    outer["right"] = tree;
    CHECK(count_leaf_nodes(outer) == 8);  // additivity
}
