/*
 * realroots.hpp
 * -------------
 * Certified real-root isolation for univariate polynomials with
 * rational coefficients, plus exact sign evaluation of other rational
 * polynomials at the isolated (possibly irrational) roots.
 *
 * Sturm sequences over arbitrary-precision rationals drive both root
 * counting and the sign queries, so every returned interval and sign is
 * exact; bisection only shrinks intervals, never decides anything by
 * floating point.
 */
#pragma once

#include "psqh/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>
#include <algorithm>

namespace psqh {

using BigRat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over BigRat; index = exponent.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRat> c) : coef_(std::move(c)) { trim(); }

    static UniPoly from_pairs(const std::vector<std::pair<int, Rational>>& terms) {
        int deg = -1;
        for (const auto& [e, c] : terms) deg = std::max(deg, e);
        std::vector<BigRat> c(deg + 1, BigRat(0));
        for (const auto& [e, q] : terms) c[e] += BigRat(q.num(), q.den());
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const std::vector<BigRat>& coef() const { return coef_; }

    BigRat eval(const BigRat& x) const {
        BigRat r = 0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UniPoly derivative() const {
        if (coef_.size() <= 1) return UniPoly();
        std::vector<BigRat> d(coef_.size() - 1);
        for (std::size_t i = 1; i < coef_.size(); ++i) d[i - 1] = coef_[i] * static_cast<int>(i);
        return UniPoly(std::move(d));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<BigRat> c(std::max(a.coef_.size(), b.coef_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] -= b.coef_[i];
        return UniPoly(std::move(c));
    }

    // Polynomial remainder of *this by b.
    UniPoly rem(const UniPoly& b) const {
        if (b.is_zero()) throw MathError("polynomial remainder by zero");
        std::vector<BigRat> r = coef_;
        int db = b.degree();
        while (static_cast<int>(r.size()) - 1 >= db) {
            int dr = static_cast<int>(r.size()) - 1;
            BigRat f = r.back() / b.coef_.back();
            for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coef_[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        return UniPoly(std::move(r));
    }

    UniPoly gcd(const UniPoly& other) const {
        UniPoly a = *this, b = other;
        while (!b.is_zero()) {
            UniPoly r = a.rem(b);
            a = b;
            b = r;
        }
        if (!a.is_zero()) { // monic normalization
            std::vector<BigRat> c = a.coef_;
            BigRat lead = c.back();
            for (auto& x : c) x /= lead;
            a = UniPoly(std::move(c));
        }
        return a;
    }

    UniPoly square_free_part() const {
        if (degree() <= 0) return *this;
        UniPoly g = gcd(derivative());
        if (g.degree() <= 0) return *this;
        // exact division by g
        std::vector<BigRat> q(coef_.size() - g.coef_.size() + 1, BigRat(0));
        std::vector<BigRat> r = coef_;
        int dg = g.degree();
        while (static_cast<int>(r.size()) - 1 >= dg) {
            int dr = static_cast<int>(r.size()) - 1;
            BigRat f = r.back() / g.coef().back();
            q[dr - dg] = f;
            for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= f * g.coef()[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        return UniPoly(std::move(q));
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<BigRat> coef_;
};

namespace detail {

inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        if (r.is_zero()) break;
        // negate
        std::vector<BigRat> c = r.coef();
        for (auto& x : c) x = -x;
        chain.emplace_back(std::move(c));
    }
    return chain;
}

inline int sign_changes(const std::vector<UniPoly>& chain, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        BigRat v = p.eval(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

} // namespace detail

// Exact count of distinct real roots in (lo, hi]; p must be square-free.
inline int count_roots(const UniPoly& p, const BigRat& lo, const BigRat& hi) {
    auto chain = detail::sturm_chain(p);
    return detail::sign_changes(chain, lo) - detail::sign_changes(chain, hi);
}

struct RootInterval {
    BigRat lo, hi;   // root is the unique root of the polynomial in (lo, hi]
    bool exact = false; // lo == hi == root

    BigRat mid() const { return exact ? lo : (lo + hi) / 2; }
    double approx() const { return static_cast<double>(mid()); }
    BigRat width() const { return hi - lo; }
};

// Isolate all distinct real roots of p (any multiplicity) into disjoint
// intervals, refined until width <= tol.  Rational roots come back exact.
inline std::vector<RootInterval> isolate_real_roots(const UniPoly& poly, const BigRat& tol) {
    std::vector<RootInterval> out;
    if (poly.is_zero() || poly.degree() == 0) return out;
    UniPoly p = poly.square_free_part();
    auto chain = detail::sturm_chain(p);

    // Cauchy bound
    BigRat bound = 0;
    for (const auto& c : p.coef()) {
        BigRat a = c < 0 ? BigRat(-c) : c;
        a /= (p.coef().back() < 0 ? BigRat(-p.coef().back()) : p.coef().back());
        bound = std::max(bound, a);
    }
    bound += 1;

    // segments are half-open (lo, hi]; a root at the midpoint stays in
    // the left half, so counts always add up exactly
    struct Seg { BigRat lo, hi; int count; };
    std::vector<Seg> work;
    int total = detail::sign_changes(chain, -bound) - detail::sign_changes(chain, bound);
    if (total > 0) work.push_back({-bound, bound, total});

    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        BigRat m = (s.lo + s.hi) / 2;
        if (s.count == 1) {
            if (p.eval(m) == 0) {
                out.push_back({m, m, true});
                continue;
            }
            if (p.eval(s.hi) == 0) {
                out.push_back({s.hi, s.hi, true});
                continue;
            }
            if (s.hi - s.lo <= tol) {
                out.push_back({s.lo, s.hi, false});
                continue;
            }
            int left = detail::sign_changes(chain, s.lo) - detail::sign_changes(chain, m);
            if (left == 1)
                work.push_back({s.lo, m, 1});
            else
                work.push_back({m, s.hi, 1});
            continue;
        }
        int left = detail::sign_changes(chain, s.lo) - detail::sign_changes(chain, m);
        if (left > 0) work.push_back({s.lo, m, left});
        if (s.count - left > 0) work.push_back({m, s.hi, s.count - left});
    }

    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
        return a.mid() < b.mid();
    });
    return out;
}

// Exact sign of q at the root isolated by iv (a root of base).  Returns
// -1, 0 or +1.  base must have exactly one root in the interval.
inline int sign_at_root(const UniPoly& q, const UniPoly& base, RootInterval iv) {
    if (q.is_zero()) return 0;
    if (iv.exact) {
        BigRat v = q.eval(iv.lo);
        return v == 0 ? 0 : (v > 0 ? 1 : -1);
    }
    UniPoly b = base.square_free_part();
    // does q vanish at the root?  check whether gcd(b, q) has the root
    UniPoly g = b.gcd(q);
    if (!g.is_zero() && g.degree() > 0 && count_roots(g, iv.lo, iv.hi) > 0)
        return 0;
    // refine until q has no root in the interval, then evaluate anywhere
    auto qs = q.square_free_part();
    auto bchain = detail::sturm_chain(b);
    while (count_roots(qs, iv.lo, iv.hi) > 0) {
        BigRat m = (iv.lo + iv.hi) / 2;
        int left = detail::sign_changes(bchain, iv.lo) - detail::sign_changes(bchain, m);
        if (b.eval(m) == 0) { iv.lo = iv.hi = m; iv.exact = true; break; }
        if (left == 1)
            iv.hi = m;
        else
            iv.lo = m;
    }
    BigRat v = q.eval(iv.exact ? iv.lo : (iv.lo + iv.hi) / 2);
    return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

} // namespace psqh
