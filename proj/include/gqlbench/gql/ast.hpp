#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace gqlbench::gql {

// Argument values: int, string, enum symbol, variable reference, input object.
struct Value;
using InputObject = std::vector<std::pair<std::string, Value>>;

struct Value {
    struct EnumSymbol { std::string name; };
    struct VariableRef { std::string name; };
    std::variant<std::int64_t, std::string, EnumSymbol, VariableRef,
                 std::shared_ptr<InputObject>> v;

    bool is_int() const { return std::holds_alternative<std::int64_t>(v); }
    bool is_string() const { return std::holds_alternative<std::string>(v); }
    bool is_enum() const { return std::holds_alternative<EnumSymbol>(v); }
    bool is_variable() const { return std::holds_alternative<VariableRef>(v); }
    bool is_object() const { return std::holds_alternative<std::shared_ptr<InputObject>>(v); }
};

struct Field;
using SelectionSet = std::vector<Field>;

struct Field {
    std::string name;
    std::vector<std::pair<std::string, Value>> args;  // ordered
    SelectionSet subSelections;                       // empty for scalar leaves
};

struct VariableDef {
    std::string name;      // without the '$'
    std::string typeName;  // declared type, e.g. "ID", "Int", "PublicationField"
};

struct QueryDoc {
    std::string operationName;  // may be empty (anonymous query)
    std::vector<VariableDef> variableDefs;
    SelectionSet rootSelections;
};

// --- pretty printer (parse ∘ print is identity up to structure) ---

namespace detail {

inline void print_value(const Value& val, std::string& out) {
    if (val.is_int()) {
        out += std::to_string(std::get<std::int64_t>(val.v));
    } else if (val.is_string()) {
        out += '"';
        for (char c : std::get<std::string>(val.v)) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        out += '"';
    } else if (val.is_enum()) {
        out += std::get<Value::EnumSymbol>(val.v).name;
    } else if (val.is_variable()) {
        out += '$';
        out += std::get<Value::VariableRef>(val.v).name;
    } else {
        out += '{';
        const auto& obj = *std::get<std::shared_ptr<InputObject>>(val.v);
        for (std::size_t i = 0; i < obj.size(); ++i) {
            if (i) out += ", ";
            out += obj[i].first;
            out += ": ";
            print_value(obj[i].second, out);
        }
        out += '}';
    }
}

inline void print_selection(const SelectionSet& sel, std::string& out, int indent) {
    out += "{\n";
    for (const auto& f : sel) {
        out.append(static_cast<std::size_t>(indent + 2), ' ');
        out += f.name;
        if (!f.args.empty()) {
            out += '(';
            for (std::size_t i = 0; i < f.args.size(); ++i) {
                if (i) out += ", ";
                out += f.args[i].first;
                out += ": ";
                print_value(f.args[i].second, out);
            }
            out += ')';
        }
        if (!f.subSelections.empty()) {
            out += ' ';
            print_selection(f.subSelections, out, indent + 2);
        }
        out += '\n';
    }
    out.append(static_cast<std::size_t>(indent), ' ');
    out += '}';
}

}  // namespace detail

inline std::string print(const QueryDoc& doc) {
    std::string out = "query";
    if (!doc.operationName.empty()) {
        out += ' ';
        out += doc.operationName;
    }
    if (!doc.variableDefs.empty()) {
        out += '(';
        for (std::size_t i = 0; i < doc.variableDefs.size(); ++i) {
            if (i) out += ", ";
            out += '$';
            out += doc.variableDefs[i].name;
            out += ": ";
            out += doc.variableDefs[i].typeName;
        }
        out += ')';
    }
    out += ' ';
    detail::print_selection(doc.rootSelections, out, 0);
    out += '\n';
    return out;
}

// Structural equality helpers used by tests and by duplicate detection.
inline bool equal(const Value& a, const Value& b);
inline bool equal(const SelectionSet& a, const SelectionSet& b);

inline bool equal(const Value& a, const Value& b) {
    if (a.v.index() != b.v.index()) return false;
    if (a.is_int()) return std::get<std::int64_t>(a.v) == std::get<std::int64_t>(b.v);
    if (a.is_string()) return std::get<std::string>(a.v) == std::get<std::string>(b.v);
    if (a.is_enum())
        return std::get<Value::EnumSymbol>(a.v).name == std::get<Value::EnumSymbol>(b.v).name;
    if (a.is_variable())
        return std::get<Value::VariableRef>(a.v).name ==
               std::get<Value::VariableRef>(b.v).name;
    const auto& ao = *std::get<std::shared_ptr<InputObject>>(a.v);
    const auto& bo = *std::get<std::shared_ptr<InputObject>>(b.v);
    if (ao.size() != bo.size()) return false;
    for (std::size_t i = 0; i < ao.size(); ++i)
        if (ao[i].first != bo[i].first || !equal(ao[i].second, bo[i].second)) return false;
    return true;
}

inline bool equal(const Field& a, const Field& b) {
    if (a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (a.args[i].first != b.args[i].first || !equal(a.args[i].second, b.args[i].second))
            return false;
    return equal(a.subSelections, b.subSelections);
}

inline bool equal(const SelectionSet& a, const SelectionSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!equal(a[i], b[i])) return false;
    return true;
}

inline bool equal(const QueryDoc& a, const QueryDoc& b) {
    if (a.operationName != b.operationName) return false;
    if (a.variableDefs.size() != b.variableDefs.size()) return false;
    for (std::size_t i = 0; i < a.variableDefs.size(); ++i)
        if (a.variableDefs[i].name != b.variableDefs[i].name ||
            a.variableDefs[i].typeName != b.variableDefs[i].typeName)
            return false;
    return equal(a.rootSelections, b.rootSelections);
}

}  // namespace gqlbench::gql
