#pragma once

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqlbench/domain.hpp"

namespace gqlbench {

enum class SqlDialect { Postgres, Mysql };

inline SqlDialect parse_dialect(const std::string& s) {
    if (s == "postgres") return SqlDialect::Postgres;
    if (s == "mysql") return SqlDialect::Mysql;
    throw std::invalid_argument("unsupported SQL dialect: " + s);
}

namespace detail {

inline std::string sql_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "''";
        else if (c == '\\') out += "\\\\";  // mysql treats backslash as escape
        else out += c;
    }
    out += '\'';
    return out;
}

// One multi-row INSERT per chunk of 500 rows, rows pre-rendered as "(...)".
inline void insert_rows(std::ostream& os, const std::string& table,
                        const std::string& columns,
                        const std::vector<std::string>& rows) {
    constexpr std::size_t kChunk = 500;
    for (std::size_t i = 0; i < rows.size(); i += kChunk) {
        os << "INSERT INTO " << table << " (" << columns << ") VALUES\n";
        const std::size_t end = std::min(rows.size(), i + kChunk);
        for (std::size_t j = i; j < end; ++j)
            os << rows[j] << (j + 1 == end ? ";\n" : ",\n");
    }
}

}  // namespace detail

// Emits a dump importable without edits by the named dialect: CREATE TABLE per
// entity type (FK columns per the schema mapping), then every row in primary
// key order.
inline void emit_sql(const Dataset& ds, SqlDialect dialect, std::ostream& os) {
    using detail::insert_rows;
    using detail::sql_quote;

    os << "-- university benchmark dataset, scaleFactor=" << ds.scaleFactor
       << " seed=" << ds.seed << "\n";
    if (dialect == SqlDialect::Mysql)
        os << "SET NAMES utf8mb4;\nSTART TRANSACTION;\n";
    else
        os << "BEGIN;\n";

    os << "CREATE TABLE university (id BIGINT PRIMARY KEY, name TEXT NOT NULL);\n";
    os << "CREATE TABLE department (nr BIGINT PRIMARY KEY, universityid BIGINT NOT NULL, "
          "name TEXT NOT NULL);\n";
    os << "CREATE TABLE facultymember (id BIGINT PRIMARY KEY, name TEXT NOT NULL, "
          "emailaddress TEXT NOT NULL, telephone TEXT NOT NULL, rank VARCHAR(32) NOT NULL, "
          "departmentnr BIGINT NOT NULL);\n";
    os << "CREATE TABLE graduatestudent (id BIGINT PRIMARY KEY, name TEXT NOT NULL, "
          "emailaddress TEXT NOT NULL, telephone TEXT NOT NULL, age INT NOT NULL, "
          "ugdegreeyear INT NOT NULL, departmentnr BIGINT NOT NULL, "
          "undergraduatedegreefrom BIGINT NOT NULL, advisorid BIGINT NOT NULL);\n";
    os << "CREATE TABLE undergraduatestudent (id BIGINT PRIMARY KEY, name TEXT NOT NULL, "
          "emailaddress TEXT NOT NULL, telephone TEXT NOT NULL, age INT NOT NULL, "
          "departmentnr BIGINT NOT NULL);\n";
    os << "CREATE TABLE publication (id BIGINT PRIMARY KEY, title TEXT NOT NULL, "
          "abstract TEXT NOT NULL, year INT NOT NULL, authorid BIGINT NOT NULL);\n";
    os << "CREATE TABLE course (id BIGINT PRIMARY KEY, name TEXT NOT NULL, "
          "departmentnr BIGINT NOT NULL, teacherid BIGINT NOT NULL);\n";
    os << "CREATE TABLE researchgroup (id BIGINT PRIMARY KEY, name TEXT NOT NULL, "
          "departmentnr BIGINT NOT NULL);\n";
    os << "CREATE TABLE graduatetakescourse (studentid BIGINT NOT NULL, "
          "courseid BIGINT NOT NULL);\n";
    os << "CREATE TABLE undergraduatetakescourse (studentid BIGINT NOT NULL, "
          "courseid BIGINT NOT NULL);\n";

    std::vector<std::string> rows;
    rows.reserve(ds.universities.size());
    for (const auto& u : ds.universities)
        rows.push_back("(" + std::to_string(u.id) + "," + sql_quote(u.name) + ")");
    insert_rows(os, "university", "id,name", rows);

    rows.clear();
    for (const auto& d : ds.departments)
        rows.push_back("(" + std::to_string(d.nr) + "," + std::to_string(d.universityId) +
                       "," + sql_quote(d.name) + ")");
    insert_rows(os, "department", "nr,universityid,name", rows);

    rows.clear();
    for (const auto& f : ds.faculty)
        rows.push_back("(" + std::to_string(f.id) + "," + sql_quote(f.name) + "," +
                       sql_quote(f.emailAddress) + "," + sql_quote(f.telephone) + ",'" +
                       rank_name(f.rank) + "'," + std::to_string(f.departmentNr) + ")");
    insert_rows(os, "facultymember", "id,name,emailaddress,telephone,rank,departmentnr",
                rows);

    rows.clear();
    for (const auto& g : ds.graduateStudents)
        rows.push_back("(" + std::to_string(g.id) + "," + sql_quote(g.name) + "," +
                       sql_quote(g.emailAddress) + "," + sql_quote(g.telephone) + "," +
                       std::to_string(g.age) + "," + std::to_string(g.ugDegreeYear) + "," +
                       std::to_string(g.departmentNr) + "," +
                       std::to_string(g.undergraduateDegreeFrom) + "," +
                       std::to_string(g.advisorId) + ")");
    insert_rows(os, "graduatestudent",
                "id,name,emailaddress,telephone,age,ugdegreeyear,departmentnr,"
                "undergraduatedegreefrom,advisorid",
                rows);

    rows.clear();
    for (const auto& s : ds.undergraduateStudents)
        rows.push_back("(" + std::to_string(s.id) + "," + sql_quote(s.name) + "," +
                       sql_quote(s.emailAddress) + "," + sql_quote(s.telephone) + "," +
                       std::to_string(s.age) + "," + std::to_string(s.departmentNr) + ")");
    insert_rows(os, "undergraduatestudent",
                "id,name,emailaddress,telephone,age,departmentnr", rows);

    rows.clear();
    for (const auto& p : ds.publications)
        rows.push_back("(" + std::to_string(p.id) + "," + sql_quote(p.title) + "," +
                       sql_quote(p.abstract) + "," + std::to_string(p.year) + "," +
                       std::to_string(p.authorId) + ")");
    insert_rows(os, "publication", "id,title,abstract,year,authorid", rows);

    rows.clear();
    for (const auto& c : ds.courses)
        rows.push_back("(" + std::to_string(c.id) + "," + sql_quote(c.name) + "," +
                       std::to_string(c.departmentNr) + "," + std::to_string(c.teacherId) +
                       ")");
    insert_rows(os, "course", "id,name,departmentnr,teacherid", rows);

    rows.clear();
    for (const auto& r : ds.researchGroups)
        rows.push_back("(" + std::to_string(r.id) + "," + sql_quote(r.name) + "," +
                       std::to_string(r.departmentNr) + ")");
    insert_rows(os, "researchgroup", "id,name,departmentnr", rows);

    rows.clear();
    for (const auto& g : ds.graduateStudents)
        for (Id c : g.takenCourses)
            rows.push_back("(" + std::to_string(g.id) + "," + std::to_string(c) + ")");
    insert_rows(os, "graduatetakescourse", "studentid,courseid", rows);

    rows.clear();
    for (const auto& s : ds.undergraduateStudents)
        for (Id c : s.takenCourses)
            rows.push_back("(" + std::to_string(s.id) + "," + std::to_string(c) + ")");
    insert_rows(os, "undergraduatetakescourse", "studentid,courseid", rows);

    os << "COMMIT;\n";
}

inline std::string emit_sql_string(const Dataset& ds, SqlDialect dialect) {
    std::ostringstream os;
    emit_sql(ds, dialect, os);
    return os.str();
}

// Number of INSERT value rows an emit_sql dump contains for this dataset.
inline std::size_t count_insert_rows(const std::string& sqlText) {
    std::size_t n = 0;
    std::istringstream is(sqlText);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] == '(') ++n;
    return n;
}

}  // namespace gqlbench
