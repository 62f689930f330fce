#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "gqlbench/gql/ast.hpp"

namespace gqlbench::gql {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at " + std::to_string(l) + ":" + std::to_string(c)),
          line(l), column(c) {}
};

// Recursive-descent parser for the query-language subset the benchmark needs:
// one query operation with variable definitions, nested fields, and argument
// values (int, string, enum, variable, input object). Fragments, directives,
// and aliases are reported as distinct unsupported-construct errors rather
// than silently accepted.
class Parser {
public:
    explicit Parser(std::string text) : text_(std::move(text)) {}

    QueryDoc parse() {
        QueryDoc doc;
        skip_ws();
        if (peek() == '{') {
            doc.rootSelections = parse_selection_set(doc);
            skip_ws();
            if (pos_ < text_.size()) fail("unexpected trailing input");
            return doc;
        }
        std::string kw = parse_name("operation keyword");
        if (kw == "mutation" || kw == "subscription")
            fail("unsupported construct: " + kw + " operations");
        if (kw == "fragment") fail("unsupported construct: fragment definition");
        if (kw != "query") fail("expected 'query' or '{'");
        skip_ws();
        if (is_name_start(peek())) doc.operationName = parse_name("operation name");
        skip_ws();
        if (peek() == '(') {
            advance();
            while (true) {
                skip_ws();
                expect('$', "variable definition");
                VariableDef vd;
                vd.name = parse_name("variable name");
                skip_ws();
                expect(':', "variable type");
                skip_ws();
                vd.typeName = parse_name("type name");
                skip_ws();
                if (peek() == '!') { advance(); skip_ws(); }  // non-null marker
                if (peek() == '=') fail("unsupported construct: variable default value");
                doc.variableDefs.push_back(std::move(vd));
                if (peek() == ',') { advance(); continue; }
                if (peek() == ')') { advance(); break; }
                if (peek() == '$') continue;
                fail("expected ',' or ')' in variable definitions");
            }
        }
        skip_ws();
        doc.rootSelections = parse_selection_set(doc);
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return doc;
    }

private:
    SelectionSet parse_selection_set(QueryDoc& doc) {
        expect('{', "selection set");
        SelectionSet set;
        while (true) {
            skip_ws();
            if (peek() == '}') { advance(); break; }
            if (pos_ >= text_.size()) fail("unterminated selection set");
            if (peek() == '.') fail("unsupported construct: fragment spread");
            Field f;
            f.name = parse_name("field name");
            if (f.name == "fragment") fail("unsupported construct: fragment definition");
            skip_ws();
            if (peek() == ':') fail("unsupported construct: field alias");
            if (peek() == '@') fail("unsupported construct: directive");
            if (peek() == '(') {
                advance();
                while (true) {
                    skip_ws();
                    if (peek() == ')') { advance(); break; }
                    if (peek() == ',') { advance(); continue; }
                    std::string argName = parse_name("argument name");
                    skip_ws();
                    expect(':', "argument value");
                    skip_ws();
                    f.args.emplace_back(std::move(argName), parse_value());
                }
                skip_ws();
            }
            if (peek() == '@') fail("unsupported construct: directive");
            if (peek() == '{') f.subSelections = parse_selection_set(doc);
            set.push_back(std::move(f));
        }
        return set;
    }

    Value parse_value() {
        skip_ws();
        char c = peek();
        if (c == '$') {
            advance();
            return Value{Value::VariableRef{parse_name("variable name")}};
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            if (c == '-') advance();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed number");
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
            if (peek() == '.') fail("unsupported construct: float literal");
            return Value{static_cast<std::int64_t>(
                std::stoll(text_.substr(start, pos_ - start)))};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (true) {
                if (pos_ >= text_.size()) fail("unterminated string literal");
                char d = text_[pos_];
                if (d == '"') { advance(); break; }
                if (d == '\\') {
                    advance();
                    if (pos_ >= text_.size()) fail("unterminated string literal");
                    d = text_[pos_];
                    if (d != '"' && d != '\\') fail("unsupported string escape");
                }
                if (d == '\n') ++line_, col_ = 0;
                s += d;
                advance();
            }
            return Value{s};
        }
        if (c == '{') {
            advance();
            auto obj = std::make_shared<InputObject>();
            while (true) {
                skip_ws();
                if (peek() == '}') { advance(); break; }
                if (peek() == ',') { advance(); continue; }
                std::string name = parse_name("input object field");
                skip_ws();
                expect(':', "input object value");
                obj->emplace_back(std::move(name), parse_value());
            }
            return Value{obj};
        }
        if (c == '[') fail("unsupported construct: list literal");
        if (is_name_start(c)) {
            std::string name = parse_name("enum value");
            if (name == "true" || name == "false" || name == "null")
                fail("unsupported construct: " + name + " literal");
            return Value{Value::EnumSymbol{name}};
        }
        fail("expected a value");
        return {};  // unreachable
    }

    static bool is_name_start(char c) {
        return c == '_' || std::isalpha(static_cast<unsigned char>(c));
    }
    static bool is_name_char(char c) {
        return c == '_' || std::isalnum(static_cast<unsigned char>(c));
    }

    std::string parse_name(const char* what) {
        skip_ws();
        if (!is_name_start(peek())) fail(std::string("expected ") + what);
        std::size_t start = pos_;
        while (is_name_char(peek())) advance();
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') { ++line_; col_ = 1; ++pos_; }
            else if (c == ' ' || c == '\t' || c == '\r' || c == ',') { ++col_; ++pos_; }
            else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else break;
        }
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; ++col_; }
    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected '") + c + "' before " + what);
        advance();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline QueryDoc parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace gqlbench::gql
