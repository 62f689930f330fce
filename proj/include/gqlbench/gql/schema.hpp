#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gqlbench::gql {

enum class ScalarKind { Id, Int, Float, String };

// Field/argument value types.
struct TypeRef {
    enum class Kind { Scalar, Object, ListOfObject, Enum, InputObject } kind;
    ScalarKind scalar = ScalarKind::Id;  // when kind == Scalar
    std::string name;                    // object/enum/input-object type name

    static TypeRef scalarOf(ScalarKind s) { return {Kind::Scalar, s, {}}; }
    static TypeRef object(std::string n) { return {Kind::Object, {}, std::move(n)}; }
    static TypeRef listOf(std::string n) { return {Kind::ListOfObject, {}, std::move(n)}; }
    static TypeRef enumOf(std::string n) { return {Kind::Enum, {}, std::move(n)}; }
    static TypeRef inputOf(std::string n) { return {Kind::InputObject, {}, std::move(n)}; }

    bool is_scalar() const { return kind == Kind::Scalar; }
    bool is_object_like() const {
        return kind == Kind::Object || kind == Kind::ListOfObject;
    }
};

struct ArgDef {
    std::string name;
    TypeRef type;
};

struct FieldDef {
    std::string name;
    TypeRef type;
    std::vector<ArgDef> args;

    const ArgDef* arg(const std::string& n) const {
        for (const auto& a : args)
            if (a.name == n) return &a;
        return nullptr;
    }
};

struct ObjectType {
    std::string name;
    std::vector<FieldDef> fields;

    const FieldDef* field(const std::string& n) const {
        for (const auto& f : fields)
            if (f.name == n) return &f;
        return nullptr;
    }
};

struct EnumType {
    std::string name;
    std::vector<std::string> values;

    bool has(const std::string& v) const {
        for (const auto& x : values)
            if (x == v) return true;
        return false;
    }
};

struct InputObjectType {
    std::string name;
    std::vector<ArgDef> fields;

    const ArgDef* field(const std::string& n) const {
        for (const auto& f : fields)
            if (f.name == n) return &f;
        return nullptr;
    }
};

struct Schema {
    std::map<std::string, ObjectType> objectTypes;
    std::map<std::string, EnumType> enumTypes;
    std::map<std::string, InputObjectType> inputTypes;
    std::string queryTypeName = "Query";

    const ObjectType* object(const std::string& n) const {
        auto it = objectTypes.find(n);
        return it == objectTypes.end() ? nullptr : &it->second;
    }
    const EnumType* enumType(const std::string& n) const {
        auto it = enumTypes.find(n);
        return it == enumTypes.end() ? nullptr : &it->second;
    }
    const InputObjectType* inputType(const std::string& n) const {
        auto it = inputTypes.find(n);
        return it == inputTypes.end() ? nullptr : &it->second;
    }
    const ObjectType& queryType() const { return objectTypes.at(queryTypeName); }
};

// The GraphQL schema exposed by the reference server over the university
// dataset: one object type per entity type, relationship fields in both
// directions, plus argument-bearing fields for paging, ordering, filtering,
// search, and aggregation.
inline Schema benchmark_schema() {
    Schema s;
    auto id = TypeRef::scalarOf(ScalarKind::Id);
    auto str = TypeRef::scalarOf(ScalarKind::String);
    auto intT = TypeRef::scalarOf(ScalarKind::Int);
    auto floatT = TypeRef::scalarOf(ScalarKind::Float);

    s.enumTypes["Rank"] = {"Rank",
                           {"FullProfessor", "AssociateProfessor",
                            "AssistantProfessor", "Lecturer"}};
    s.enumTypes["Direction"] = {"Direction", {"ASC", "DESC"}};
    s.enumTypes["PublicationField"] = {"PublicationField", {"title", "abstract"}};
    s.enumTypes["GraduateStudentField"] =
        {"GraduateStudentField",
         {"id", "emailAddress", "telephone", "age", "ugDegreeYear", "name"}};

    s.inputTypes["PublicationOrder"] =
        {"PublicationOrder",
         {{"field", TypeRef::enumOf("PublicationField")},
          {"direction", TypeRef::enumOf("Direction")}}};
    s.inputTypes["GraduateStudentOrder"] =
        {"GraduateStudentOrder",
         {{"primary", TypeRef::enumOf("GraduateStudentField")},
          {"secondary", TypeRef::enumOf("GraduateStudentField")},
          {"direction", TypeRef::enumOf("Direction")}}};

    s.objectTypes["University"] =
        {"University",
         {{"id", id, {}},
          {"name", str, {}},
          {"departments", TypeRef::listOf("Department"), {}},
          {"undergraduateDegreeObtainedBystudent", TypeRef::listOf("GraduateStudent"),
           {{"limit", intT}, {"hasAdvisorRank", TypeRef::enumOf("Rank")}}},
          {"undergraduateDegreeObtainedBystudentCount", intT, {}},
          {"avgDegreeStudentAge", floatT, {}}}};

    s.objectTypes["Department"] =
        {"Department",
         {{"id", id, {}},
          {"name", str, {}},
          {"subOrganizationOf", TypeRef::object("University"), {}},
          {"graduateStudents", TypeRef::listOf("GraduateStudent"),
           {{"limit", intT}, {"offset", intT}, {"advisorRank", TypeRef::enumOf("Rank")}}},
          {"undergraduateStudents", TypeRef::listOf("UndergraduateStudent"),
           {{"limit", intT}, {"offset", intT}}},
          {"faculties", TypeRef::listOf("FacultyMember"), {}},
          {"researchGroups", TypeRef::listOf("ResearchGroup"), {}},
          {"courses", TypeRef::listOf("Course"), {}}}};

    s.objectTypes["GraduateStudent"] =
        {"GraduateStudent",
         {{"id", id, {}},
          {"name", str, {}},
          {"emailAddress", str, {}},
          {"telephone", str, {}},
          {"age", intT, {}},
          {"ugDegreeYear", intT, {}},
          {"memberOf", TypeRef::object("Department"), {}},
          {"undergraduateDegreeFrom", TypeRef::object("University"), {}},
          {"advisor", TypeRef::object("FacultyMember"), {}},
          {"takenCourses", TypeRef::listOf("Course"), {}}}};

    s.objectTypes["UndergraduateStudent"] =
        {"UndergraduateStudent",
         {{"id", id, {}},
          {"name", str, {}},
          {"emailAddress", str, {}},
          {"telephone", str, {}},
          {"age", intT, {}},
          {"memberOf", TypeRef::object("Department"), {}},
          {"takenCourses", TypeRef::listOf("Course"), {}}}};

    s.objectTypes["FacultyMember"] =
        {"FacultyMember",
         {{"id", id, {}},
          {"name", str, {}},
          {"emailAddress", str, {}},
          {"telephone", str, {}},
          {"rank", TypeRef::enumOf("Rank"), {}},
          {"worksFor", TypeRef::object("Department"), {}},
          {"publications", TypeRef::listOf("Publication"),
           {{"order", TypeRef::inputOf("PublicationOrder")},
            {"titleWord", str},
            {"yearAtLeast", intT},
            {"limit", intT}}},
          {"teacherOf", TypeRef::listOf("Course"), {}}}};

    s.objectTypes["Publication"] =
        {"Publication",
         {{"id", id, {}},
          {"title", str, {}},
          {"abstract", str, {}},
          {"year", intT, {}},
          {"author", TypeRef::object("FacultyMember"), {}}}};

    s.objectTypes["Course"] =
        {"Course",
         {{"id", id, {}},
          {"name", str, {}},
          {"offeredBy", TypeRef::object("Department"), {}},
          {"teacher", TypeRef::object("FacultyMember"), {}}}};

    s.objectTypes["ResearchGroup"] =
        {"ResearchGroup",
         {{"id", id, {}},
          {"name", str, {}},
          {"subOrganizationOf", TypeRef::object("Department"), {}}}};

    s.objectTypes["Query"] =
        {"Query",
         {{"university", TypeRef::object("University"), {{"nr", id}}},
          {"department", TypeRef::object("Department"), {{"nr", id}}},
          {"publication", TypeRef::object("Publication"), {{"nr", id}}},
          {"facultyMember", TypeRef::object("FacultyMember"), {{"nr", id}}},
          {"graduateStudent", TypeRef::object("GraduateStudent"), {{"nr", id}}},
          {"graduateStudents", TypeRef::listOf("GraduateStudent"),
           {{"limit", intT}, {"order", TypeRef::inputOf("GraduateStudentOrder")}}},
          {"searchPublications", TypeRef::listOf("Publication"),
           {{"titleWord", str}}}}};

    return s;
}

}  // namespace gqlbench::gql
