/*
 * weights.hpp
 * -----------
 * Weight vectors of semi-quasi-homogeneous planar systems and the
 * structural predicates built on them.
 *
 * A weight vector (s1, s2, d1, d2) of (P, Q) makes
 *   P(a^s1 x, a^s2 y) = a^(s1-1+d1) P(x, y)
 *   Q(a^s1 x, a^s2 y) = a^(s2-1+d2) Q(x, y)
 * hold for all a > 0.  Monomial-wise this is a pair of linear relations:
 * a term x^i y^j of P contributes the residual (i-1)s1 + j*s2 - (d1-1),
 * a term of Q contributes i*s1 + (j-1)s2 - (d2-1); w is a weight vector
 * exactly when all residuals vanish.
 */
#pragma once

#include "psqh/vectorfield.hpp"

#include <optional>
#include <vector>
#include <cstdint>
#include <array>

namespace psqh {

struct WeightVector {
    std::int64_t s1 = 1, s2 = 1, d1 = 1, d2 = 1;

    bool valid() const { return s1 >= 1 && s2 >= 1 && d1 >= 1 && d2 >= 1; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.s1 == b.s1 && a.s2 == b.s2 && a.d1 == b.d1 && a.d2 == b.d2;
    }
    friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }
    friend bool operator<(const WeightVector& a, const WeightVector& b) {
        return std::array<std::int64_t, 4>{a.s1, a.s2, a.d1, a.d2} <
               std::array<std::int64_t, 4>{b.s1, b.s2, b.d1, b.d2};
    }

    std::string str() const {
        return "(" + std::to_string(s1) + "," + std::to_string(s2) + "," +
               std::to_string(d1) + "," + std::to_string(d2) + ")";
    }
};

struct TermResidual {
    char component; // 'P' or 'Q'
    int i, j;
    std::int64_t residual;
};

inline std::vector<TermResidual> weight_residuals(const VectorField& f, const WeightVector& w) {
    f.require_convention();
    std::vector<TermResidual> out;
    for (const auto& [e, c] : f.p.terms())
        out.push_back({'P', e.first, e.second,
                       (e.first - 1) * w.s1 + e.second * w.s2 - (w.d1 - 1)});
    for (const auto& [e, c] : f.q.terms())
        out.push_back({'Q', e.first, e.second,
                       e.first * w.s1 + (e.second - 1) * w.s2 - (w.d2 - 1)});
    return out;
}

inline bool is_weight_vector(const VectorField& f, const WeightVector& w) {
    for (const auto& r : weight_residuals(f, w))
        if (r.residual != 0) return false;
    return true;
}

// Index lambda = (d1-d2)/(s1-s2); undefined (nullopt) when s1 == s2.
inline std::optional<Rational> index_of(const WeightVector& w) {
    if (w.s1 == w.s2) return std::nullopt;
    return Rational(w.d1 - w.d2, w.s1 - w.s2);
}

// Each component homogeneous (the s1 = s2 = 1 case of the weight relations).
inline bool is_semihomogeneous(const VectorField& f) {
    return f.p.is_homogeneous() && f.q.is_homogeneous();
}

// (s1, s2, d1, d2) -> (r*s1, r*s2, r(d1-1)+1, r(d2-1)+1); maps weight
// vectors of a field to weight vectors of the same field.
inline WeightVector scale_weight(const WeightVector& w, std::int64_t r) {
    if (r < 1) throw MathError("scale factor must be a positive integer");
    return WeightVector{r * w.s1, r * w.s2, r * (w.d1 - 1) + 1, r * (w.d2 - 1) + 1};
}

struct StructuralReport {
    bool no_constant_terms = true;
    bool at_most_one_monomial_per_homogeneous_part = true;
    bool gcd_divides_d_minus_1 = true;
    std::vector<TermResidual> offending_terms;

    bool all_ok() const {
        return no_constant_terms && at_most_one_monomial_per_homogeneous_part &&
               gcd_divides_d_minus_1;
    }
};

// Structural consequences of admitting w as a weight vector: no constant
// terms, one monomial per homogeneous slice of each component, and
// gcd(s1,s2) dividing d1-1 and d2-1.  When s1 != s2 the per-degree
// admissible exponent index is additionally checked for uniqueness
// through T = d1 - lambda*s1 - 1; a violation there would contradict the
// weight relations, so it is reported as an internal error.
inline StructuralReport structural_report(const VectorField& f, const WeightVector& w) {
    if (!is_weight_vector(f, w))
        throw MathError("not a weight vector");
    StructuralReport rep;

    auto flag_term = [&](char comp, int i, int j) {
        rep.offending_terms.push_back({comp, i, j, 0});
    };

    if (!f.p.coeff(0, 0).is_zero()) { rep.no_constant_terms = false; flag_term('P', 0, 0); }
    if (!f.q.coeff(0, 0).is_zero()) { rep.no_constant_terms = false; flag_term('Q', 0, 0); }

    auto check_parts = [&](const Poly& poly, char comp) {
        std::map<int, int> per_degree;
        for (const auto& [e, c] : poly.terms()) per_degree[e.first + e.second]++;
        for (const auto& [e, c] : poly.terms())
            if (per_degree[e.first + e.second] > 1) {
                rep.at_most_one_monomial_per_homogeneous_part = false;
                flag_term(comp, e.first, e.second);
            }
    };
    check_parts(f.p, 'P');
    check_parts(f.q, 'Q');

    std::int64_t s0 = std::gcd(w.s1, w.s2);
    if ((w.d1 - 1) % s0 != 0 || (w.d2 - 1) % s0 != 0)
        rep.gcd_divides_d_minus_1 = false;

    // Admissible-index uniqueness per nonzero degree (only meaningful for
    // integer lambda; cannot fail once w is a weight vector).
    auto lam = index_of(w);
    if (lam && lam->is_integer()) {
        std::int64_t l = lam->num();
        std::int64_t T = w.d1 - l * w.s1 - 1;
        int n = f.degree();
        for (int t = 0; t <= n; ++t) {
            int deg = n - t;
            bool nonzero_part = false;
            for (const auto& [e, c] : f.p.terms()) nonzero_part |= (e.first + e.second == deg);
            for (const auto& [e, c] : f.q.terms()) nonzero_part |= (e.first + e.second == deg);
            if (!nonzero_part) continue;
            int lo = std::min<std::int64_t>(0, 1 + l);
            int hi = std::max<std::int64_t>(deg, deg + 1 + l);
            int count = 0;
            for (int i = lo; i <= hi; ++i) {
                bool coeff_present = false;
                if (i >= 0 && deg - i >= 0 && !f.p.coeff(i, deg - i).is_zero())
                    coeff_present = true;
                std::int64_t ib = i - 1 - l, jb = deg - i + 1 + l;
                if (ib >= 0 && jb >= 0 && !f.q.coeff(static_cast<int>(ib), static_cast<int>(jb)).is_zero())
                    coeff_present = true;
                if (coeff_present && (i - 1 - l) * w.s1 + (deg - i) * w.s2 == T)
                    ++count;
            }
            if (count != 1)
                throw MathError("admissible exponent index not unique for degree " +
                                std::to_string(deg));
        }
    }
    return rep;
}

// All weight vectors with 1 <= s1, s2 <= s_bound.  d1 and d2 are derived
// from one term of each component and cross-checked against the rest, so
// no bound on the weight degrees is needed.  Sorted lexicographically.
inline std::vector<WeightVector> find_weight_vectors(const VectorField& f,
                                                     std::int64_t s_bound) {
    f.require_convention();
    if (s_bound < 1) throw MathError("s_bound must be positive");
    std::vector<WeightVector> out;
    auto pm = f.p.monomials();
    auto qm = f.q.monomials();
    for (std::int64_t s1 = 1; s1 <= s_bound; ++s1) {
        for (std::int64_t s2 = 1; s2 <= s_bound; ++s2) {
            std::int64_t d1 = (pm[0].i - 1) * s1 + pm[0].j * s2 + 1;
            std::int64_t d2 = qm[0].i * s1 + (qm[0].j - 1) * s2 + 1;
            if (d1 < 1 || d2 < 1) continue;
            WeightVector w{s1, s2, d1, d2};
            if (is_weight_vector(f, w)) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Componentwise-minimal weight vector within the searched range, when a
// componentwise minimum exists among the vectors found.
inline std::optional<WeightVector> minimal_weight_vector(const VectorField& f,
                                                         std::int64_t s_bound) {
    auto all = find_weight_vectors(f, s_bound);
    if (all.empty()) return std::nullopt;
    for (const auto& cand : all) {
        bool minimal = true;
        for (const auto& w : all)
            if (cand.s1 > w.s1 || cand.s2 > w.s2 || cand.d1 > w.d1 || cand.d2 > w.d2) {
                minimal = false;
                break;
            }
        if (minimal) return cand;
    }
    return std::nullopt; // no componentwise minimum among found vectors
}

} // namespace psqh
