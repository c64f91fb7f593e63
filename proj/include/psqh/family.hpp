/*
 * family.hpp
 * ----------
 * Enumerated system families: monomial supports with symbolic
 * coefficient slots, a one-parameter weight vector, the minimal weight
 * vector and the index.
 *
 * The weight vector of a family is affine in a single free parameter
 * theta (s2 for the d1 = 1 part, d1 or d2 otherwise):
 *   component(theta) = (coef * theta + cst) / mod,
 * integral for theta = mod*r + 1, r = 0, 1, 2, ...; the family is a
 * weight vector for every admissible theta with r >= 1, and r = 1 gives
 * the minimal weight vector.
 */
#pragma once

#include "psqh/weights.hpp"

#include <array>
#include <tuple>

namespace psqh {

enum class Part { P1Base, P1, P2, P3 };

inline const char* part_name(Part p) {
    switch (p) {
        case Part::P1Base: return "base";
        case Part::P1: return "part1";
        case Part::P2: return "part2";
        case Part::P3: return "part3";
    }
    return "?";
}

// (t, tt) locate the leading nonzero homogeneous parts of P and Q,
// (p, q) the exponent offsets of their monomials, and (dt, k) the gap
// pattern of the two-or-more-term component (absent for part 1).
struct FamilyKey {
    Part part = Part::P1Base;
    int t = 0, tt = 0, p = 0, q = 0, dt = 0, k = 0;

    friend bool operator<(const FamilyKey& a, const FamilyKey& b) {
        return std::tuple(static_cast<int>(a.part), a.t, a.tt, a.p, a.q, a.dt, a.k) <
               std::tuple(static_cast<int>(b.part), b.t, b.tt, b.p, b.q, b.dt, b.k);
    }
    friend bool operator==(const FamilyKey& a, const FamilyKey& b) {
        return std::tuple(static_cast<int>(a.part), a.t, a.tt, a.p, a.q, a.dt, a.k) ==
               std::tuple(static_cast<int>(b.part), b.t, b.tt, b.p, b.q, b.dt, b.k);
    }
};

enum class WeightParam { S2, D1, D2 };

inline const char* weight_param_name(WeightParam p) {
    switch (p) {
        case WeightParam::S2: return "s2";
        case WeightParam::D1: return "d1";
        case WeightParam::D2: return "d2";
    }
    return "?";
}

struct AffineForm {
    std::int64_t coef = 0;
    std::int64_t cst = 0;
};

struct ParamWeightVector {
    WeightParam param = WeightParam::S2;
    std::int64_t mod = 1;                 // admissible theta: theta0, theta0+mod, ...
    std::int64_t theta0 = 1;
    std::array<AffineForm, 4> forms{};    // s1, s2, d1, d2 as (coef*theta+cst)/mod

    bool admissible(std::int64_t theta) const {
        return theta >= theta0 && (theta - theta0) % mod == 0;
    }
    std::int64_t theta_min() const { return theta0; }

    WeightVector at(std::int64_t theta) const {
        if (!admissible(theta)) throw MathError("inadmissible weight parameter value");
        auto ev = [&](const AffineForm& f) {
            std::int64_t v = f.coef * theta + f.cst;
            if (v % mod != 0) throw MathError("non-integral weight component");
            return v / mod;
        };
        return WeightVector{ev(forms[0]), ev(forms[1]), ev(forms[2]), ev(forms[3])};
    }
};

// Support slot: exponent pair plus the conventional coefficient name
// a_{i,j} / b_{i,j}.
struct Slot {
    int i = 0, j = 0;

    friend bool operator<(const Slot& a, const Slot& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    }
    friend bool operator==(const Slot& a, const Slot& b) { return a.i == b.i && a.j == b.j; }
};

inline std::string slot_name(char comp, const Slot& s) {
    return std::string(1, comp) + "_{" + std::to_string(s.i) + "," + std::to_string(s.j) + "}";
}

struct Family {
    FamilyKey key;
    int n = 2;
    std::vector<Slot> support_p;
    std::vector<Slot> support_q;
    ParamWeightVector w;
    WeightVector wm;
    Rational lambda;

    // Paper-style display name: X_{0,0,0}, X_{t,0,q} or X_{t,tt,p,q,dt,k}.
    std::string name() const {
        auto j = [](std::initializer_list<int> xs) {
            std::string s = "X_{";
            bool first = true;
            for (int v : xs) { if (!first) s += ","; s += std::to_string(v); first = false; }
            return s + "}";
        };
        switch (key.part) {
            case Part::P1Base: return j({0, 0, 0});
            case Part::P1: return j({key.t, 0, key.q});
            default: return j({key.t, key.tt, key.p, key.q, key.dt, key.k});
        }
    }

    VectorField instantiate_ones() const { return instantiate(Rational(1)); }

    VectorField instantiate(const Rational& c) const {
        Poly P, Q;
        for (const auto& s : support_p) P.add_term(c, s.i, s.j);
        for (const auto& s : support_q) Q.add_term(c, s.i, s.j);
        return VectorField(P, Q);
    }

    friend bool operator<(const Family& a, const Family& b) { return a.key < b.key; }
};

using SupportPair = std::pair<std::vector<Slot>, std::vector<Slot>>;

inline SupportPair support_pair(const Family& f) { return {f.support_p, f.support_q}; }

} // namespace psqh
