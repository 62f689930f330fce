#pragma once

#include <map>
#include <memory>
#include <variant>
#include <string>
#include <vector>

#include "gqlbench/gql/ast.hpp"
#include "gqlbench/gql/schema.hpp"

namespace gqlbench::gql {

struct ValidationIssue {
    std::string path;  // dotted field path, e.g. "university.departments"
    std::string message;
};

namespace detail {

// Does a value of declared variable type `decl` (e.g. "ID", "Int", "Rank",
// with or without trailing '!') fit an argument of type `t`?
inline bool variable_fits(const std::string& declRaw, const TypeRef& t) {
    std::string decl = declRaw;
    if (!decl.empty() && decl.back() == '!') decl.pop_back();
    switch (t.kind) {
        case TypeRef::Kind::Scalar:
            switch (t.scalar) {
                case ScalarKind::Id: return decl == "ID" || decl == "Int" || decl == "String";
                case ScalarKind::Int: return decl == "Int";
                case ScalarKind::Float: return decl == "Float" || decl == "Int";
                case ScalarKind::String: return decl == "String";
            }
            return false;
        case TypeRef::Kind::Enum:
        case TypeRef::Kind::InputObject:
            return decl == t.name;
        default:
            return false;
    }
}

inline std::string type_display(const TypeRef& t) {
    switch (t.kind) {
        case TypeRef::Kind::Scalar:
            switch (t.scalar) {
                case ScalarKind::Id: return "ID";
                case ScalarKind::Int: return "Int";
                case ScalarKind::Float: return "Float";
                case ScalarKind::String: return "String";
            }
            return "?";
        case TypeRef::Kind::ListOfObject: return "[" + t.name + "]";
        default: return t.name;
    }
}

struct Validator {
    const Schema& schema;
    const QueryDoc& doc;
    std::vector<ValidationIssue> issues;

    void add(const std::string& path, std::string msg) {
        issues.push_back({path, std::move(msg)});
    }

    const VariableDef* variable(const std::string& name) const {
        for (const auto& v : doc.variableDefs)
            if (v.name == name) return &v;
        return nullptr;
    }

    void check_value(const std::string& path, const std::string& argName,
                     const TypeRef& expected, const Value& v) {
        if (auto* ref = std::get_if<Value::VariableRef>(&v.v)) {
            const VariableDef* def = variable(ref->name);
            if (!def) {
                add(path, "argument '" + argName + "' references undeclared variable $" +
                              ref->name);
            } else if (!variable_fits(def->typeName, expected)) {
                add(path, "variable $" + ref->name + " of type " + def->typeName +
                              " does not fit argument '" + argName + "' of type " +
                              type_display(expected));
            }
            return;
        }
        switch (expected.kind) {
            case TypeRef::Kind::Scalar:
                if (expected.scalar == ScalarKind::String) {
                    if (!std::holds_alternative<std::string>(v.v))
                        add(path, "argument '" + argName + "' expects a String value");
                } else if (expected.scalar == ScalarKind::Float) {
                    if (!std::holds_alternative<int64_t>(v.v))
                        add(path, "argument '" + argName + "' expects a numeric value");
                } else {  // Id or Int: integer literal
                    if (std::holds_alternative<int64_t>(v.v)) break;
                    if (expected.scalar == ScalarKind::Id &&
                        std::holds_alternative<std::string>(v.v))
                        break;
                    add(path, "argument '" + argName + "' expects an " +
                                  type_display(expected) + " value");
                }
                break;
            case TypeRef::Kind::Enum: {
                auto* sym = std::get_if<Value::EnumSymbol>(&v.v);
                const EnumType* et = schema.enumType(expected.name);
                if (!sym) {
                    add(path, "argument '" + argName + "' expects a " + expected.name +
                                  " enum value");
                } else if (et && !et->has(sym->name)) {
                    add(path, "'" + sym->name + "' is not a value of enum " +
                                  expected.name);
                }
                break;
            }
            case TypeRef::Kind::InputObject: {
                auto* objp = std::get_if<std::shared_ptr<InputObject>>(&v.v);
                const InputObjectType* it = schema.inputType(expected.name);
                if (!objp || !*objp) {
                    add(path, "argument '" + argName + "' expects an input object of type " +
                                  expected.name);
                    break;
                }
                if (!it) break;
                for (const auto& [fname, fval] : **objp) {
                    const ArgDef* fd = it->field(fname);
                    if (!fd) {
                        add(path, "input object " + expected.name +
                                      " has no field '" + fname + "'");
                        continue;
                    }
                    check_value(path, argName + "." + fname, fd->type, fval);
                }
                break;
            }
            default:
                add(path, "argument '" + argName + "' has an unexpected value kind");
        }
    }

    void check_field(const std::string& parentPath, const ObjectType& parent,
                     const Field& f) {
        std::string path = parentPath.empty() ? f.name : parentPath + "." + f.name;
        const FieldDef* def = parent.field(f.name);
        if (!def) {
            add(path, "type " + parent.name + " has no field '" + f.name + "'");
            return;
        }
        for (const auto& [aname, aval] : f.args) {
            const ArgDef* ad = def->arg(aname);
            if (!ad) {
                add(path, "field '" + f.name + "' accepts no argument '" + aname + "'");
                continue;
            }
            check_value(path, aname, ad->type, aval);
        }
        if (def->type.is_object_like()) {
            if (f.subSelections.empty()) {
                add(path, "field '" + f.name + "' of type " +
                              type_display(def->type) + " requires a selection set");
                return;
            }
            const ObjectType* child = schema.object(def->type.name);
            if (!child) return;
            for (const auto& sub : f.subSelections)
                check_field(path, *child, sub);
        } else {
            if (!f.subSelections.empty())
                add(path, "field '" + f.name + "' is a leaf and takes no selection set");
        }
    }

    void run() {
        for (const auto& v : doc.variableDefs) {
            std::string base = v.typeName;
            if (!base.empty() && base.back() == '!') base.pop_back();
            static const char* scalars[] = {"ID", "Int", "Float", "String"};
            bool known = false;
            for (auto* sc : scalars) known = known || base == sc;
            known = known || schema.enumType(base) || schema.inputType(base);
            if (!known)
                add("$" + v.name, "unknown variable type " + v.typeName);
        }
        if (doc.rootSelections.empty())
            add("", "query has an empty top-level selection set");
        for (const auto& f : doc.rootSelections)
            check_field("", schema.queryType(), f);
    }
};

}  // namespace detail

inline std::vector<ValidationIssue> validate(const Schema& schema, const QueryDoc& doc) {
    detail::Validator v{schema, doc, {}};
    v.run();
    return v.issues;
}

}  // namespace gqlbench::gql
