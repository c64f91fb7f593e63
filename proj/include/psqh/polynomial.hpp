/*
 * polynomial.hpp
 * --------------
 * Sparse bivariate polynomials over exact rationals.
 *
 * A Poly maps exponent pairs (i, j) -- meaning x^i y^j -- to nonzero
 * rational coefficients.  Every operation returns a canonically
 * normalized result: no zero coefficients, and exponent pairs are kept
 * unique in a sorted std::map, so iteration order (and hence printing,
 * hashing, serialization) is deterministic.
 *
 * The zero polynomial has degree() == -1.
 */
#pragma once

#include "psqh/rational.hpp"

#include <map>
#include <utility>
#include <vector>
#include <string>
#include <sstream>
#include <algorithm>

namespace psqh {

using Exponents = std::pair<int, int>; // (i, j) for x^i y^j

struct Monomial {
    int i = 0;
    int j = 0;
    Rational coeff;
};

class Poly {
public:
    using TermMap = std::map<Exponents, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    static Poly monomial(const Rational& c, int i, int j) {
        if (i < 0 || j < 0) throw MathError("negative exponent in monomial");
        Poly p;
        if (!c.is_zero()) p.terms_[{i, j}] = c;
        return p;
    }
    static Poly x() { return monomial(Rational(1), 1, 0); }
    static Poly y() { return monomial(Rational(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::vector<Exponents> support() const {
        std::vector<Exponents> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    std::vector<Monomial> monomials() const {
        std::vector<Monomial> m;
        m.reserve(terms_.size());
        for (const auto& [e, c] : terms_) m.push_back({e.first, e.second, c});
        return m;
    }

    void add_term(const Rational& c, int i, int j) {
        if (i < 0 || j < 0) throw MathError("negative exponent in polynomial term");
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[{i, j}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(c, e.first, e.second);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(-c, e.first, e.second);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly dx() const {
        Poly r;
        for (const auto& [e, c] : terms_)
            if (e.first > 0) r.add_term(c * Rational(e.first), e.first - 1, e.second);
        return r;
    }
    Poly dy() const {
        Poly r;
        for (const auto& [e, c] : terms_)
            if (e.second > 0) r.add_term(c * Rational(e.second), e.first, e.second - 1);
        return r;
    }

    // Substitute x -> cx * u^xi * v^xj,  y -> cy * u^yi * v^yj.
    Poly substitute_monomials(const Rational& cx, int xi, int xj,
                              const Rational& cy, int yi, int yj) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            Rational k = c * cx.pow(e.first) * cy.pow(e.second);
            r.add_term(k, e.first * xi + e.second * yi, e.first * xj + e.second * yj);
        }
        return r;
    }

    // Largest v with u^v dividing this polynomial, u selected by axis
    // (0 -> x, 1 -> y).  Zero polynomial reports -1 (no finite valuation).
    int valuation(int axis) const {
        if (terms_.empty()) return -1;
        int v = INT32_MAX;
        for (const auto& [e, c] : terms_) v = std::min(v, axis == 0 ? e.first : e.second);
        return v;
    }

    Poly divide_power(int axis, int v) const {
        if (v == 0) return *this;
        Poly r;
        for (const auto& [e, c] : terms_) {
            int i = e.first - (axis == 0 ? v : 0);
            int j = e.second - (axis == 1 ? v : 0);
            if (i < 0 || j < 0) throw MathError("non-exact power division");
            r.terms_[{i, j}] = c;
        }
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational r(0);
        for (const auto& [e, c] : terms_) r += c * x.pow(e.first) * y.pow(e.second);
        return r;
    }
    double eval(double x, double y) const {
        double r = 0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (int k = 0; k < e.first; ++k) t *= x;
            for (int k = 0; k < e.second; ++k) t *= y;
            r += t;
        }
        return r;
    }

    // Restriction to one axis: p(x, 0) for axis == 0, p(0, y) for axis == 1.
    // Returned as (exponent, coefficient) pairs of a univariate polynomial.
    std::vector<std::pair<int, Rational>> restrict_to_axis(int axis) const {
        std::map<int, Rational> u;
        for (const auto& [e, c] : terms_) {
            if (axis == 0 && e.second == 0) u[e.first] += c;
            if (axis == 1 && e.first == 0) u[e.second] += c;
        }
        std::vector<std::pair<int, Rational>> r;
        for (auto& [d, c] : u)
            if (!c.is_zero()) r.emplace_back(d, c);
        return r;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.first + terms_.begin()->first.second;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second != d) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print highest total degree first, x-power descending inside
        std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });
        for (const auto& [e, c] : ts) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            bool unit = a.is_one() && (e.first + e.second) > 0;
            if (!unit) os << a.str();
            if (e.first > 0) { os << "x"; if (e.first > 1) os << "^" << e.first; }
            if (e.second > 0) { os << "y"; if (e.second > 1) os << "^" << e.second; }
            first = false;
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace psqh
