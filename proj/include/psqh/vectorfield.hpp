/*
 * vectorfield.hpp
 * ---------------
 * A planar polynomial vector field (P, Q), i.e. the system
 *   x' = P(x, y),  y' = Q(x, y).
 */
#pragma once

#include "psqh/polynomial.hpp"

namespace psqh {

struct VectorField {
    Poly p;
    Poly q;

    VectorField() = default;
    VectorField(Poly P, Poly Q) : p(std::move(P)), q(std::move(Q)) {}

    int degree() const { return std::max(p.degree(), q.degree()); }

    bool both_components_nonzero() const { return !p.is_zero() && !q.is_zero(); }

    // Rejects fields that would degenerate to a scalar equation.
    void require_convention() const {
        if (p.is_zero() || q.is_zero())
            throw MathError("empty component");
    }

    std::string str() const { return "x'=" + p.str() + ", y'=" + q.str(); }
};

inline bool operator==(const VectorField& a, const VectorField& b) {
    return a.p == b.p && a.q == b.q;
}

// (P(x,y), Q(x,y)) -> (Q(y,x), P(y,x)).  An involution; it realizes the
// x <-> y relabeling that swaps the roles of the two weight exponents.
inline VectorField swap_variables(const VectorField& f) {
    auto flip = [](const Poly& r) {
        Poly s;
        for (const auto& [e, c] : r.terms()) s.add_term(c, e.second, e.first);
        return s;
    };
    return VectorField(flip(f.q), flip(f.p));
}

// Exact axis/time rescaling X = ax*x, Y = ay*y, T = at*t.
// New P-coefficient of X^i Y^j is  c * ax^(1-i) * ay^(-j) / at,
// new Q-coefficient is             c * ax^(-i) * ay^(1-j) / at.
inline VectorField apply_scaling(const VectorField& f, const Rational& ax,
                                 const Rational& ay, const Rational& at) {
    if (ax.is_zero() || ay.is_zero() || at.is_zero())
        throw MathError("scaling factor must be nonzero");
    Poly np, nq;
    for (const auto& [e, c] : f.p.terms())
        np.add_term(c * ax.pow(1 - e.first) * ay.pow(-e.second) / at, e.first, e.second);
    for (const auto& [e, c] : f.q.terms())
        nq.add_term(c * ax.pow(-e.first) * ay.pow(1 - e.second) / at, e.first, e.second);
    return VectorField(np, nq);
}

} // namespace psqh
