#include <catch2/catch_amalgamated.hpp>

#include "gqlbench/datagen.hpp"
#include "gqlbench/sql.hpp"

using namespace gqlbench;

namespace {
const Dataset& ds1() {
    static const Dataset d = generate(ScaleFactor{1}, 42);
    return d;
}
}  // namespace

TEST_CASE("parse_dialect accepts the two supported dialects only") {
    CHECK(parse_dialect("postgres") == SqlDialect::Postgres);
    CHECK(parse_dialect("mysql") == SqlDialect::Mysql);
    CHECK_THROWS_AS(parse_dialect("sqlite"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dialect(""), std::invalid_argument);
}

TEST_CASE("insert row count equals dataset row count including join tables") {
    std::string sql = emit_sql_string(ds1(), SqlDialect::Postgres);
    CHECK(count_insert_rows(sql) == ds1().total_rows());
}

TEST_CASE("SQL emission is byte-identical across reruns") {
    std::string a = emit_sql_string(ds1(), SqlDialect::Postgres);
    std::string b = emit_sql_string(generate(ScaleFactor{1}, 42), SqlDialect::Postgres);
    CHECK(a == b);
}

TEST_CASE("dialects differ only in dressing, not in data volume") {
    std::string pg = emit_sql_string(ds1(), SqlDialect::Postgres);
    std::string my = emit_sql_string(ds1(), SqlDialect::Mysql);
    CHECK(pg != my);
    CHECK(pg.find("BEGIN;") != std::string::npos);
    CHECK(my.find("SET NAMES utf8mb4;") != std::string::npos);
    CHECK(my.find("START TRANSACTION;") != std::string::npos);
    CHECK(count_insert_rows(pg) == count_insert_rows(my));
    for (const char* table :
         {"CREATE TABLE university ", "CREATE TABLE department ",
          "CREATE TABLE facultymember ", "CREATE TABLE graduatestudent ",
          "CREATE TABLE undergraduatestudent ", "CREATE TABLE publication ",
          "CREATE TABLE course ", "CREATE TABLE researchgroup ",
          "CREATE TABLE graduatetakescourse "}) {
        CHECK(pg.find(table) != std::string::npos);
        CHECK(my.find(table) != std::string::npos);
    }
}

TEST_CASE("string quoting doubles single quotes") {
    CHECK(detail::sql_quote("o'brien") == "'o''brien'");
    CHECK(detail::sql_quote("plain") == "'plain'");
}
