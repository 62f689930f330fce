#include <catch2/catch_amalgamated.hpp>

#include "gqlbench/gql/parser.hpp"
#include "gqlbench/workload.hpp"

using namespace gqlbench;
using namespace gqlbench::gql;

TEST_CASE("parses the deep two-hop traversal template") {
    QueryDoc doc = parse(find_template("QT5").text);
    CHECK(doc.operationName == "qt5");
    REQUIRE(doc.variableDefs.size() == 1);
    CHECK(doc.variableDefs[0].name == "departmentID");
    CHECK(doc.variableDefs[0].typeName == "ID");

    REQUIRE(doc.rootSelections.size() == 1);
    const Field& dept = doc.rootSelections[0];
    CHECK(dept.name == "department");
    REQUIRE(dept.args.size() == 1);
    CHECK(dept.args[0].first == "nr");
    REQUIRE(dept.args[0].second.is_variable());

    // selection-set nesting: root, department, subOrganizationOf, students,
    // memberOf, subOrganizationOf, students, and the innermost memberOf body
    int depth = 0;
    const SelectionSet* sel = &doc.rootSelections;
    while (!sel->empty()) {
        const Field* next = nullptr;
        for (const auto& f : *sel)
            if (!f.subSelections.empty()) next = &f;
        ++depth;
        if (!next) break;
        sel = &next->subSelections;
    }
    CHECK(depth == 8);
}

TEST_CASE("parses input objects and enum arguments") {
    QueryDoc doc = parse(find_template("QT9").text);
    const Field& univ = doc.rootSelections.at(0);
    const Field& students = univ.subSelections.at(0);
    REQUIRE(students.args.size() == 1);
    CHECK(students.args[0].first == "limit");
    REQUIRE(students.args[0].second.is_int());
    CHECK(std::get<std::int64_t>(students.args[0].second.v) == 50);

    const Field& pubs = students.subSelections.at(0).subSelections.at(0);
    CHECK(pubs.name == "publications");
    REQUIRE(pubs.args.size() == 1);
    REQUIRE(pubs.args[0].second.is_object());
    const auto& order = *std::get<std::shared_ptr<InputObject>>(pubs.args[0].second.v);
    REQUIRE(order.size() == 2);
    CHECK(order[0].first == "field");
    CHECK(order[0].second.is_variable());
    CHECK(order[1].first == "direction");
    REQUIRE(order[1].second.is_enum());
    CHECK(std::get<Value::EnumSymbol>(order[1].second.v).name == "DESC");
}

TEST_CASE("anonymous shorthand query and comma-as-whitespace") {
    QueryDoc doc = parse("{ university(nr: 3) { id, name } }");
    CHECK(doc.operationName.empty());
    REQUIRE(doc.rootSelections.size() == 1);
    CHECK(doc.rootSelections[0].subSelections.size() == 2);

    QueryDoc doc2 = parse("query ($a: ID, $b: Int) { university(nr: $a) { id } }");
    CHECK(doc2.variableDefs.size() == 2);
}

TEST_CASE("string literals support quote and backslash escapes") {
    QueryDoc doc = parse(R"({ searchPublications(titleWord: "a\"b\\c") { id } })");
    const auto& v = doc.rootSelections[0].args[0].second;
    REQUIRE(v.is_string());
    CHECK(std::get<std::string>(v.v) == "a\"b\\c");
}

TEST_CASE("parse then print is an identity up to structure") {
    for (const auto& t : builtin_templates()) {
        QueryDoc once = parse(t.text);
        QueryDoc twice = parse(print(once));
        CHECK(equal(once, twice));
    }
}

TEST_CASE("unsupported constructs are distinct parse errors") {
    auto fails_with = [](const std::string& text, const std::string& needle) {
        try {
            parse(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    fails_with("{ ...frag }", "fragment spread");
    fails_with("fragment f on University { id }", "fragment");
    fails_with("{ alias: university(nr:1) { id } }", "alias");
    fails_with("{ university(nr:1) @skip { id } }", "directive");
    fails_with("mutation { doThing }", "mutation");
    fails_with("subscription { watch }", "subscription");
    fails_with("{ f(x: [1,2]) }", "list literal");
    fails_with("{ f(x: 1.5) }", "float literal");
    fails_with("{ f(x: true) }", "true literal");
    fails_with("{ f(x: null) }", "null literal");
    fails_with("query ($a: Int = 3) { f }", "default value");
}

TEST_CASE("parse errors carry line and column positions") {
    try {
        parse("{\n  university(nr:\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column >= 1);
    }
    CHECK_THROWS_AS(parse("{ university { id } } trailing"), ParseError);
    CHECK_THROWS_AS(parse("{ university { id }"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
}
