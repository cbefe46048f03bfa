#pragma once

/**
 * @file expr.hpp
 * @brief Expression trees over graph builders and the operators disjoint
 * union, k-fold union, join and pendant corona, with symbolic evaluation
 * of independence polynomials.
 *
 * eval_expr never materializes a graph. It uses the closed forms
 *
 *   I(K_n) = 1 + n x                I(E_n) = (1+x)^n
 *   I(K_{1,n}) = (1+x)^n + x        I(K_n - e) = 1 + n x + x^2
 *   I(K_{n_1,..,n_p}) = 1 + sum_i ((1+x)^{n_i} - 1)
 *   I(P_n) = I(P_{n-1}) + x I(P_{n-2})
 *   I(C_n) = I(P_{n-1}) + x I(P_{n-3})
 *   I(G1 u G2) = I(G1) I(G2)        I(G1 + G2) = I(G1) + I(G2) - 1
 *   I(G*) = forward transform of I(G) at order |V(G)|
 *
 * so the huge multipartite and join examples stay exact without ever
 * building their vertex sets. Corona needs the operand's order, which is
 * why evaluation carries (polynomial, vertex count) pairs.
 */

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "indpoly/builders.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/transform.hpp"

namespace indpoly {

enum class BaseKind { complete, path, cycle, empty, star, complete_minus_edge, multipartite };

struct GraphExpr;
using ExprPtr = std::shared_ptr<const GraphExpr>;

struct BaseNode {
    BaseKind kind;
    long long n = 0;               // unused for multipartite
    std::vector<long long> parts;  // multipartite only, in written order

    bool operator==(const BaseNode&) const = default;
};

struct UnionNode {
    ExprPtr left, right;
};

struct UnionPowNode {
    long long copies;
    ExprPtr operand;
};

struct JoinNode {
    ExprPtr left, right;
};

struct CoronaNode {
    ExprPtr operand;
};

struct GraphExpr {
    std::variant<BaseNode, UnionNode, UnionPowNode, JoinNode, CoronaNode> node;
};

inline bool operator==(const GraphExpr& a, const GraphExpr& b);

inline bool deep_equal(const ExprPtr& a, const ExprPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline bool operator==(const GraphExpr& a, const GraphExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* x = std::get_if<BaseNode>(&a.node)) return *x == std::get<BaseNode>(b.node);
    if (const auto* x = std::get_if<UnionNode>(&a.node)) {
        const auto& y = std::get<UnionNode>(b.node);
        return deep_equal(x->left, y.left) && deep_equal(x->right, y.right);
    }
    if (const auto* x = std::get_if<UnionPowNode>(&a.node)) {
        const auto& y = std::get<UnionPowNode>(b.node);
        return x->copies == y.copies && deep_equal(x->operand, y.operand);
    }
    if (const auto* x = std::get_if<JoinNode>(&a.node)) {
        const auto& y = std::get<JoinNode>(b.node);
        return deep_equal(x->left, y.left) && deep_equal(x->right, y.right);
    }
    const auto& x = std::get<CoronaNode>(a.node);
    return deep_equal(x.operand, std::get<CoronaNode>(b.node).operand);
}

inline ExprPtr make_base(BaseKind kind, long long n) {
    return std::make_shared<GraphExpr>(GraphExpr{BaseNode{kind, n, {}}});
}
inline ExprPtr make_multipartite(std::vector<long long> parts) {
    return std::make_shared<GraphExpr>(GraphExpr{BaseNode{BaseKind::multipartite, 0, std::move(parts)}});
}
inline ExprPtr make_union(ExprPtr a, ExprPtr b) {
    return std::make_shared<GraphExpr>(GraphExpr{UnionNode{std::move(a), std::move(b)}});
}
inline ExprPtr make_union_pow(long long k, ExprPtr e) {
    return std::make_shared<GraphExpr>(GraphExpr{UnionPowNode{k, std::move(e)}});
}
inline ExprPtr make_join(ExprPtr a, ExprPtr b) {
    return std::make_shared<GraphExpr>(GraphExpr{JoinNode{std::move(a), std::move(b)}});
}
inline ExprPtr make_corona(ExprPtr e) {
    return std::make_shared<GraphExpr>(GraphExpr{CoronaNode{std::move(e)}});
}

namespace detail {

inline void validate_base(const BaseNode& b) {
    switch (b.kind) {
        case BaseKind::cycle:
            if (b.n < 3) throw std::invalid_argument("cycle: need n >= 3");
            break;
        case BaseKind::complete_minus_edge:
            if (b.n < 2) throw std::invalid_argument("complete_minus_edge: need n >= 2");
            break;
        case BaseKind::multipartite:
            for (long long p : b.parts)
                if (p < 1) throw std::invalid_argument("multipartite: part sizes must be >= 1");
            break;
        default:
            if (b.n < 0) throw std::invalid_argument("base graph: negative order");
    }
}

/// I(P_0..P_n) by the path recurrence.
inline IntPoly path_poly(long long n) {
    IntPoly prev{1};      // P_0
    IntPoly cur{1, 1};    // P_1
    if (n == 0) return prev;
    for (long long i = 2; i <= n; ++i) {
        IntPoly next = cur + shift_x(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline IntPoly base_poly(const BaseNode& b) {
    validate_base(b);
    const IntPoly one_plus_x{1, 1};
    switch (b.kind) {
        case BaseKind::complete:
            return IntPoly{1, Int(b.n)};
        case BaseKind::empty:
            return pow(one_plus_x, b.n);
        case BaseKind::star:
            return pow(one_plus_x, b.n) + IntPoly{0, 1};
        case BaseKind::complete_minus_edge:
            return IntPoly{1, Int(b.n), 1};
        case BaseKind::path:
            return path_poly(b.n);
        case BaseKind::cycle: {
            // I(C_n) = I(P_{n-1}) + x I(P_{n-3}); C_3 uses P_0.
            return path_poly(b.n - 1) + shift_x(path_poly(b.n - 3));
        }
        case BaseKind::multipartite: {
            IntPoly acc{1};
            for (long long p : b.parts) acc = acc + pow(one_plus_x, p) - IntPoly{1};
            return acc;
        }
    }
    throw std::logic_error("base_poly: unreachable");
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("vertex count exceeds 64-bit range");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("vertex count exceeds 64-bit range");
    return r;
}

inline long long base_vertices(const BaseNode& b) {
    validate_base(b);
    if (b.kind == BaseKind::star) return checked_add(b.n, 1);
    if (b.kind == BaseKind::multipartite) {
        long long total = 0;
        for (long long p : b.parts) total = checked_add(total, p);
        return total;
    }
    return b.n;
}

}  // namespace detail

struct EvalResult {
    IntPoly poly;
    long long vertices;
};

/// Exact symbolic independence polynomial of the expression's graph.
inline EvalResult eval_expr(const GraphExpr& e) {
    if (const auto* b = std::get_if<BaseNode>(&e.node))
        return {detail::base_poly(*b), detail::base_vertices(*b)};
    if (const auto* u = std::get_if<UnionNode>(&e.node)) {
        auto l = eval_expr(*u->left);
        auto r = eval_expr(*u->right);
        return {l.poly * r.poly, detail::checked_add(l.vertices, r.vertices)};
    }
    if (const auto* p = std::get_if<UnionPowNode>(&e.node)) {
        if (p->copies < 1) throw std::invalid_argument("union power: need k >= 1");
        auto sub = eval_expr(*p->operand);
        return {pow(sub.poly, p->copies), detail::checked_mul(p->copies, sub.vertices)};
    }
    if (const auto* j = std::get_if<JoinNode>(&e.node)) {
        auto l = eval_expr(*j->left);
        auto r = eval_expr(*j->right);
        return {l.poly + r.poly - IntPoly{1}, detail::checked_add(l.vertices, r.vertices)};
    }
    const auto& c = std::get<CoronaNode>(e.node);
    auto sub = eval_expr(*c.operand);
    return {forward_transform(sub.poly, sub.vertices), detail::checked_mul(2, sub.vertices)};
}

inline long long vertex_count(const GraphExpr& e) {
    if (const auto* b = std::get_if<BaseNode>(&e.node)) return detail::base_vertices(*b);
    if (const auto* u = std::get_if<UnionNode>(&e.node))
        return detail::checked_add(vertex_count(*u->left), vertex_count(*u->right));
    if (const auto* p = std::get_if<UnionPowNode>(&e.node)) {
        if (p->copies < 1) throw std::invalid_argument("union power: need k >= 1");
        return detail::checked_mul(p->copies, vertex_count(*p->operand));
    }
    if (const auto* j = std::get_if<JoinNode>(&e.node))
        return detail::checked_add(vertex_count(*j->left), vertex_count(*j->right));
    return detail::checked_mul(2, vertex_count(*std::get<CoronaNode>(e.node).operand));
}

/// Concrete graph of the expression; subject to the vertex cap, so the
/// symbolic-only constructions throw cap_exceeded here.
inline Graph materialize(const GraphExpr& e) {
    if (const auto* b = std::get_if<BaseNode>(&e.node)) {
        detail::validate_base(*b);
        long long total = detail::base_vertices(*b);
        if (total > vertex_cap)
            throw cap_exceeded("materialize: " + std::to_string(total) +
                               " vertices exceeds cap of " + std::to_string(vertex_cap));
        switch (b->kind) {
            case BaseKind::complete: return complete(int(b->n));
            case BaseKind::path: return path(int(b->n));
            case BaseKind::cycle: return cycle(int(b->n));
            case BaseKind::empty: return empty_graph(int(b->n));
            case BaseKind::star: return star(int(b->n));
            case BaseKind::complete_minus_edge: return complete_minus_edge(int(b->n));
            case BaseKind::multipartite: {
                std::vector<int> parts(b->parts.begin(), b->parts.end());
                return multipartite(parts);
            }
        }
    }
    if (const auto* u = std::get_if<UnionNode>(&e.node))
        return disjoint_union(materialize(*u->left), materialize(*u->right));
    if (const auto* p = std::get_if<UnionPowNode>(&e.node)) {
        if (p->copies < 1) throw std::invalid_argument("union power: need k >= 1");
        if (detail::checked_mul(p->copies, vertex_count(*p->operand)) > vertex_cap)
            throw cap_exceeded("materialize: union power exceeds vertex cap");
        Graph acc = materialize(*p->operand);
        Graph unit = acc;
        for (long long i = 1; i < p->copies; ++i) acc = disjoint_union(acc, unit);
        return acc;
    }
    if (const auto* j = std::get_if<JoinNode>(&e.node))
        return zykov_sum(materialize(*j->left), materialize(*j->right));
    return corona_k1(materialize(*std::get<CoronaNode>(e.node).operand));
}

}  // namespace indpoly
