#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "gqlbench/datagen.hpp"
#include "gqlbench/metadata.hpp"
#include "gqlbench/workload.hpp"

using namespace gqlbench;

namespace {
const DatasetMetadata& md1() {
    static const DatasetMetadata m = emit_metadata(generate(ScaleFactor{1}, 42));
    return m;
}
}  // namespace

TEST_CASE("instance-count arithmetic per template") {
    // 500 limits x 6 primary fields x 5 distinct secondary fields
    CHECK(count_instances(find_template("QT8"), md1()) == 15000);
    // 1000 referenced universities x 2 orderable publication fields
    CHECK(count_instances(find_template("QT9"), md1()) == 2000);
    // one department placeholder; departments per university in [15,25]
    auto qt5 = count_instances(find_template("QT5"), md1());
    CHECK(qt5 >= 15);
    CHECK(qt5 <= 25);
    CHECK(static_cast<std::size_t>(qt5) == md1().departmentIds.size());
    // brute-force oracle: university ids x ranks
    CHECK(count_instances(find_template("QT11"), md1()) ==
          static_cast<std::int64_t>(md1().referencedUniversityIds.size()) * 4);
    // word-pool domain
    CHECK(count_instances(find_template("QT10"), md1()) ==
          static_cast<std::int64_t>(md1().titleWords.size()));
}

TEST_CASE("instantiation is deterministic, distinct, and in-domain") {
    const auto& qt8 = find_template("QT8");
    auto a = instantiate(qt8, md1(), 2000, 7);
    auto b = instantiate(qt8, md1(), 2000, 7);
    REQUIRE(a.size() == 2000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instanceId == b[i].instanceId);
        CHECK(a[i].variables == b[i].variables);
    }

    std::set<std::string> seen;
    for (const auto& q : a) {
        CHECK(q.templateId == "QT8");
        auto cnt = q.variables.at("cnt").get<std::int64_t>();
        CHECK(cnt > 500);
        CHECK(cnt <= 1000);
        auto p = q.variables.at("attrGStudent1").get<std::string>();
        auto s = q.variables.at("attrGStudent2").get<std::string>();
        CHECK(p != s);  // paired order attributes must differ
        seen.insert(q.variables.dump());
    }
    CHECK(seen.size() == a.size());  // sampled without replacement

    auto c = instantiate(qt8, md1(), 2000, 8);
    bool anyDifferent = false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].variables != a[i].variables) anyDifferent = true;
    CHECK(anyDifferent);
}

TEST_CASE("requesting more instances than the domain yields the whole domain") {
    const auto& qt5 = find_template("QT5");
    auto total = count_instances(qt5, md1());
    auto xs = instantiate(qt5, md1(), 5000, 42);
    REQUIRE(static_cast<std::int64_t>(xs.size()) == total);
    std::set<std::string> vars;
    for (const auto& q : xs) vars.insert(q.variables.dump());
    CHECK(static_cast<std::int64_t>(vars.size()) == total);
}

TEST_CASE("generated query texts parse as the template text") {
    for (const auto& t : builtin_templates()) {
        auto xs = instantiate(t, md1(), 3, 42);
        REQUIRE(!xs.empty());
        for (const auto& q : xs) {
            CHECK(q.queryText == t.text);
            for (const auto& p : t.placeholders) CHECK(q.variables.contains(p.name));
        }
    }
}

TEST_CASE("mixed workload keeps per-template multiset, only order changes") {
    auto mixed = compose_mixed(builtin_templates(), 5, md1(), 1);
    std::map<std::string, int> perTemplate;
    for (const auto& q : mixed) ++perTemplate[q.templateId];
    CHECK(perTemplate.size() == 16);
    for (const auto& [t, n] : perTemplate) CHECK(n == 5);

    auto mixed2 = compose_mixed(builtin_templates(), 5, md1(), 2);
    REQUIRE(mixed2.size() == mixed.size());
    std::multiset<std::string> idsA, idsB;
    bool reordered = false;
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        idsA.insert(mixed[i].instanceId);
        idsB.insert(mixed2[i].instanceId);
        if (mixed[i].instanceId != mixed2[i].instanceId) reordered = true;
    }
    CHECK(idsA == idsB);
    CHECK(reordered);
}

TEST_CASE("template file format roundtrips") {
    for (const auto& t : builtin_templates()) {
        QueryTemplate back = parse_template_file(template_to_string(t));
        CHECK(back.id == t.id);
        CHECK(back.chokePoints == t.chokePoints);
        REQUIRE(back.placeholders.size() == t.placeholders.size());
        for (std::size_t i = 0; i < t.placeholders.size(); ++i) {
            CHECK(back.placeholders[i].name == t.placeholders[i].name);
            CHECK(back.placeholders[i].domain_spec() == t.placeholders[i].domain_spec());
        }
        CHECK(back.text == t.text);
    }
    CHECK_THROWS(parse_template_file("no separator or id"));
}

TEST_CASE("workload file format roundtrips") {
    auto xs = instantiate(find_template("QT9"), md1(), 10, 42);
    auto back = parse_workload(workload_to_string(xs));
    REQUIRE(back.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(back[i].instanceId == xs[i].instanceId);
        CHECK(back[i].templateId == xs[i].templateId);
        CHECK(back[i].variables == xs[i].variables);
        // newlines are flattened to spaces for the one-line-per-query format
        CHECK(back[i].queryText.find('\n') == std::string::npos);
    }
}

TEST_CASE("all sixteen templates are registered with choke-point tags") {
    CHECK(builtin_templates().size() == 16);
    for (const auto& t : builtin_templates()) {
        CHECK(!t.chokePoints.empty());
        CHECK(!t.placeholders.empty());
        CHECK(!t.text.empty());
    }
    CHECK_THROWS(find_template("QT17"));
}
