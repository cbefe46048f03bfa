#pragma once

/**
 * @file transform.hpp
 * @brief The binomial coefficient transform linking a skeleton G of order
 * n to its pendant corona G*.
 *
 * With I(G;x) = sum s_k x^k and I(G*;x) = sum t_k x^k the coefficients
 * satisfy
 *
 *     t_k = sum_{j=0}^{k} s_j * C(n-j, k-j),            k = 0..n,
 *     s_k = sum_{j=0}^{k} (-1)^{k+j} * t_j * C(n-j, n-k),
 *
 * i.e. t = A s for the lower-triangular matrix A with a_{kj} = C(n-j, k-j).
 * The maps are linear and defined for arbitrary integer input; the inverse
 * may produce negative coefficients when t is not realizable as an
 * independence polynomial.
 *
 * Binomials are computed exactly by the multiplicative formula; the
 * forward transform walks each column's binomial row incrementally so that
 * large skeleton orders (thousands of vertices) stay cheap.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "indpoly/polynomial.hpp"

namespace indpoly {

/// C(n, k), exact; zero for k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

/// The full row C(n, 0..n), built by the ratio recurrence.
inline std::vector<Int> binomial_row(long long n) {
    std::vector<Int> row(std::size_t(n) + 1);
    row[0] = 1;
    for (long long k = 0; k < n; ++k) {
        row[std::size_t(k + 1)] = row[std::size_t(k)] * (n - k);
        row[std::size_t(k + 1)] /= k + 1;
    }
    return row;
}

/// t_k = sum_j s_j * C(n-j, k-j): the independence polynomial of G* when
/// s = I(G;x) and n = |V(G)|. Requires degree(s) <= n.
inline IntPoly forward_transform(const IntPoly& s, long long n) {
    if (n < 0) throw std::invalid_argument("forward_transform: negative order");
    if (s.degree() > n)
        throw std::invalid_argument("forward_transform: degree " +
                                    std::to_string(s.degree()) + " exceeds order " +
                                    std::to_string(n));
    std::vector<Int> t(std::size_t(n) + 1, 0);
    for (int j = 0; j <= s.degree(); ++j) {
        if (s.coeff(j) == 0) continue;
        auto row = binomial_row(n - j);  // contributes s_j * C(n-j, k-j) at k = j..n
        for (std::size_t i = 0; i < row.size(); ++i) t[std::size_t(j) + i] += s.coeff(j) * row[i];
    }
    return IntPoly(std::move(t));
}

/// s_k = sum_j (-1)^{k+j} * t_j * C(n-j, n-k). Left inverse of the forward
/// transform for any input of degree <= n.
inline IntPoly inverse_transform(const IntPoly& t, long long n) {
    if (n < 0) throw std::invalid_argument("inverse_transform: negative order");
    if (t.degree() > n)
        throw std::invalid_argument("inverse_transform: degree " +
                                    std::to_string(t.degree()) + " exceeds order " +
                                    std::to_string(n));
    std::vector<Int> s(std::size_t(n) + 1, 0);
    for (long long k = 0; k <= n; ++k) {
        Int acc = 0;
        for (long long j = 0; j <= k && j <= t.degree(); ++j) {
            Int term = t.coeff(int(j)) * binomial(n - j, n - k);
            acc += ((k + j) % 2 == 0) ? term : -term;
        }
        s[std::size_t(k)] = acc;
    }
    return IntPoly(std::move(s));
}

/// The matrix A of the transform, a_{kj} = C(n-j, k-j), with rows k = 0..n
/// and the first `cols` columns.
class TransformMatrix {
public:
    TransformMatrix(long long n, long long cols) : n_(n), cols_(cols) {
        if (n < 0 || cols < 0 || cols > n + 1)
            throw std::invalid_argument("TransformMatrix: need 0 <= cols <= n+1");
        entries_.reserve(std::size_t((n + 1) * cols));
        for (long long k = 0; k <= n; ++k)
            for (long long j = 0; j < cols; ++j) entries_.push_back(binomial(n - j, k - j));
    }

    long long order() const { return n_; }
    long long rows() const { return n_ + 1; }
    long long cols() const { return cols_; }

    const Int& entry(long long k, long long j) const {
        return entries_.at(std::size_t(k * cols_ + j));
    }

    /// Matrix-vector product against s_0..s_{cols-1}.
    IntPoly apply(const IntPoly& s) const {
        if (s.degree() >= cols_)
            throw std::invalid_argument("TransformMatrix::apply: input degree too large");
        std::vector<Int> t(std::size_t(n_) + 1, 0);
        for (long long k = 0; k <= n_; ++k)
            for (long long j = 0; j < cols_; ++j) t[std::size_t(k)] += entry(k, j) * s.coeff(int(j));
        return IntPoly(std::move(t));
    }

    /// Column j, top to bottom; every column is unimodal.
    std::vector<Int> column(long long j) const {
        std::vector<Int> col;
        col.reserve(std::size_t(n_) + 1);
        for (long long k = 0; k <= n_; ++k) col.push_back(entry(k, j));
        return col;
    }

private:
    long long n_, cols_;
    std::vector<Int> entries_;
};

inline TransformMatrix transform_matrix(long long n, long long cols) {
    return TransformMatrix(n, cols);
}

}  // namespace indpoly
