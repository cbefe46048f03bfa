#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over arbitrary-precision integers,
 * plus unimodality analysis of nonnegative coefficient sequences.
 *
 * Coefficients are exact (boost cpp_int); nothing here ever touches
 * floating point. The representation is canonical: trailing zeros are
 * trimmed and the zero polynomial is the empty sequence with degree -1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

using Int = boost::multiprecision::cpp_int;

class IntPoly {
public:
    IntPoly() = default;

    IntPoly(std::initializer_list<Int> cs) : c_(cs) { trim(); }

    explicit IntPoly(std::vector<Int> cs) : c_(std::move(cs)) { trim(); }

    static IntPoly constant(Int v) { return IntPoly({std::move(v)}); }

    /// Degree of the zero polynomial is -1.
    int degree() const { return int(c_.size()) - 1; }

    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^k; zero outside the stored range.
    const Int& coeff(int k) const {
        static const Int zero = 0;
        return (k >= 0 && k < int(c_.size())) ? c_[std::size_t(k)] : zero;
    }

    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
        return IntPoly(std::move(r));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) - b.coeff(int(i));
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }

    friend IntPoly operator*(const Int& k, const IntPoly& p) {
        std::vector<Int> r(p.c_);
        for (auto& c : r) c *= k;
        return IntPoly(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// p^k by binary exponentiation; pow(p, 0) = 1.
inline IntPoly pow(const IntPoly& p, long long k) {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    IntPoly result{1};
    IntPoly base = p;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

/// Multiply by x.
inline IntPoly shift_x(const IntPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Int> r(p.coeffs().size() + 1, 0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r[i + 1] = p.coeffs()[i];
    return IntPoly(std::move(r));
}

/// Exact Horner evaluation.
inline Int evaluate(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

/// Coefficients as decimal strings, lowest degree first. The zero
/// polynomial renders as a single "0".
inline std::vector<std::string> coeff_strings(const IntPoly& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

/// Human form, e.g. "1 + 6x + 9x^2 + 4x^3". Zero coefficients are
/// skipped; unit coefficients on x-powers are left implicit.
inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Int& c = p.coeff(k);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

/// Unimodality verdict: whether some peak index k splits the coefficients
/// into a weakly rising then weakly falling chain, plus the set of
/// argmax indices (the mode is reported as a set since ties are possible).
struct ModeReport {
    bool unimodal = false;
    std::vector<int> mode_set;  // ascending argmax indices; contiguous iff unimodal
    Int max_value = 0;
};

/// Rejects polynomials with a negative coefficient: the rise/fall chain is
/// only meaningful for counting sequences.
inline ModeReport unimodality(const IntPoly& p) {
    ModeReport r;
    if (p.is_zero()) {
        r.unimodal = true;
        return r;
    }
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) < 0)
            throw std::invalid_argument("unimodality: negative coefficient at index " +
                                        std::to_string(k));
    r.max_value = p.coeff(0);
    for (int k = 1; k <= p.degree(); ++k)
        if (p.coeff(k) > r.max_value) r.max_value = p.coeff(k);
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) == r.max_value) r.mode_set.push_back(k);

    // A chain exists for some k iff it exists for k = first argmax.
    int peak = r.mode_set.front();
    bool ok = true;
    for (int k = 0; k < peak && ok; ++k) ok = p.coeff(k) <= p.coeff(k + 1);
    for (int k = peak; k < p.degree() && ok; ++k) ok = p.coeff(k) >= p.coeff(k + 1);
    r.unimodal = ok;
    return r;
}

}  // namespace indpoly
