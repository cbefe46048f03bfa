#pragma once

/**
 * @file parse.hpp
 * @brief Textual DSL for graph expressions (grammar v1, stable contract).
 *
 *   expr    := base | "union(" expr "," expr ")" | "du(" count "," expr ")"
 *            | "join(" expr "," expr ")" | "corona(" expr ")"
 *   base    := "K(" count ")" | "P(" count ")" | "C(" count ")" | "E(" count ")"
 *            | "star(" count ")" | "Kme(" count ")" | "Kmp(" partlist ")"
 *   partlist:= part ("," part)*      part := count | count "^" count
 *   count   := decimal integer >= 0
 *
 * Whitespace is insignificant. "du" is the disjoint union of k copies,
 * "Kme" the complete graph minus one edge, and "Kmp(4^1701)" the complete
 * multipartite graph with 1701 parts of size 4. Range violations (e.g.
 * C(2), du(0,...)) are reported at parse time with a byte offset.
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "indpoly/expr.hpp"

namespace indpoly {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, std::string expected, std::string found)
        : std::runtime_error("parse error at offset " + std::to_string(position) +
                             ": expected " + expected + ", found " + found),
          position(position),
          expected(std::move(expected)),
          found(std::move(found)) {}

    std::size_t position;
    std::string expected;
    std::string found;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != in_.size()) fail("end of input");
        return e;
    }

private:
    ExprPtr expr() {
        skip_ws();
        std::size_t at = pos_;
        std::string name = ident();
        if (name == "union") {
            open();
            ExprPtr a = expr();
            comma();
            ExprPtr b = expr();
            close();
            return make_union(std::move(a), std::move(b));
        }
        if (name == "du") {
            open();
            std::size_t cat = cur();
            long long k = count();
            if (k < 1) fail_at(cat, "copy count >= 1", std::to_string(k));
            comma();
            ExprPtr e = expr();
            close();
            return make_union_pow(k, std::move(e));
        }
        if (name == "join") {
            open();
            ExprPtr a = expr();
            comma();
            ExprPtr b = expr();
            close();
            return make_join(std::move(a), std::move(b));
        }
        if (name == "corona") {
            open();
            ExprPtr e = expr();
            close();
            return make_corona(std::move(e));
        }
        if (name == "K") return counted_base(BaseKind::complete, 0, "order >= 0");
        if (name == "P") return counted_base(BaseKind::path, 0, "order >= 0");
        if (name == "C") return counted_base(BaseKind::cycle, 3, "order >= 3");
        if (name == "E") return counted_base(BaseKind::empty, 0, "order >= 0");
        if (name == "star") return counted_base(BaseKind::star, 0, "leaf count >= 0");
        if (name == "Kme") return counted_base(BaseKind::complete_minus_edge, 2, "order >= 2");
        if (name == "Kmp") return kmp();
        fail_at(at, "one of union, du, join, corona, K, P, C, E, star, Kme, Kmp",
                name.empty() ? found_here() : "'" + name + "'");
    }

    ExprPtr counted_base(BaseKind kind, long long min, const char* what) {
        open();
        std::size_t at = cur();
        long long n = count();
        if (n < min) fail_at(at, what, std::to_string(n));
        close();
        return make_base(kind, n);
    }

    ExprPtr kmp() {
        open();
        std::vector<long long> parts;
        while (true) {
            std::size_t at = cur();
            long long size = count();
            if (size < 1) fail_at(at, "part size >= 1", std::to_string(size));
            long long mult = 1;
            skip_ws();
            if (pos_ < in_.size() && in_[pos_] == '^') {
                ++pos_;
                std::size_t mat = cur();
                mult = count();
                if (mult < 1) fail_at(mat, "multiplicity >= 1", std::to_string(mult));
                if (mult + static_cast<long long>(parts.size()) > 1'000'000)
                    fail_at(mat, "at most 1000000 parts in total", std::to_string(mult));
            }
            parts.insert(parts.end(), std::size_t(mult), size);
            skip_ws();
            if (pos_ < in_.size() && in_[pos_] == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        close();
        return make_multipartite(std::move(parts));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        return std::string(in_.substr(start, pos_ - start));
    }

    long long count() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            fail("count");
        long long value = 0;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
            int d = in_[pos_] - '0';
            if (value > (9'000'000'000'000'000'000LL - d) / 10)
                fail_at(start, "count within 64-bit range", "overflowing literal");
            value = value * 10 + d;
            ++pos_;
        }
        return value;
    }

    void open() { punct('('); }
    void close() { punct(')'); }
    void comma() { punct(','); }

    void punct(char c) {
        skip_ws();
        if (pos_ >= in_.size() || in_[pos_] != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    std::size_t cur() {
        skip_ws();
        return pos_;
    }

    std::string found_here() const {
        if (pos_ >= in_.size()) return "end of input";
        std::size_t len = 1;
        if (std::isalnum(static_cast<unsigned char>(in_[pos_])))
            while (pos_ + len < in_.size() &&
                   std::isalnum(static_cast<unsigned char>(in_[pos_ + len])))
                ++len;
        return "'" + std::string(in_.substr(pos_, len)) + "'";
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw parse_error(pos_, expected, found_here());
    }

    [[noreturn]] void fail_at(std::size_t at, const std::string& expected,
                              const std::string& found) {
        throw parse_error(at, expected, found);
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

inline void render_rec(const GraphExpr& e, std::string& out) {
    if (const auto* b = std::get_if<BaseNode>(&e.node)) {
        switch (b->kind) {
            case BaseKind::complete: out += "K(" + std::to_string(b->n) + ")"; return;
            case BaseKind::path: out += "P(" + std::to_string(b->n) + ")"; return;
            case BaseKind::cycle: out += "C(" + std::to_string(b->n) + ")"; return;
            case BaseKind::empty: out += "E(" + std::to_string(b->n) + ")"; return;
            case BaseKind::star: out += "star(" + std::to_string(b->n) + ")"; return;
            case BaseKind::complete_minus_edge: out += "Kme(" + std::to_string(b->n) + ")"; return;
            case BaseKind::multipartite: {
                out += "Kmp(";
                // adjacent equal sizes compress to size^runlength
                for (std::size_t i = 0; i < b->parts.size();) {
                    std::size_t j = i;
                    while (j < b->parts.size() && b->parts[j] == b->parts[i]) ++j;
                    if (i > 0) out += ",";
                    out += std::to_string(b->parts[i]);
                    if (j - i > 1) out += "^" + std::to_string(j - i);
                    i = j;
                }
                out += ")";
                return;
            }
        }
    }
    if (const auto* u = std::get_if<UnionNode>(&e.node)) {
        out += "union(";
        render_rec(*u->left, out);
        out += ",";
        render_rec(*u->right, out);
        out += ")";
        return;
    }
    if (const auto* p = std::get_if<UnionPowNode>(&e.node)) {
        out += "du(" + std::to_string(p->copies) + ",";
        render_rec(*p->operand, out);
        out += ")";
        return;
    }
    if (const auto* j = std::get_if<JoinNode>(&e.node)) {
        out += "join(";
        render_rec(*j->left, out);
        out += ",";
        render_rec(*j->right, out);
        out += ")";
        return;
    }
    out += "corona(";
    render_rec(*std::get<CoronaNode>(e.node).operand, out);
    out += ")";
}

}  // namespace detail

inline ExprPtr parse(std::string_view input) { return detail::Parser(input).run(); }

/// Inverse of parse up to structural equality: parse(render(e)) == e.
inline std::string render(const GraphExpr& e) {
    std::string out;
    detail::render_rec(e, out);
    return out;
}

}  // namespace indpoly
