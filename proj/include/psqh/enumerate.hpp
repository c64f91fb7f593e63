/*
 * enumerate.hpp
 * -------------
 * Enumeration of all semi-quasi-homogeneous (non-semihomogeneous,
 * s1 > s2, index != 0) planar polynomial families of a given degree n.
 *
 * Three parts, split by the shape of the component carrying two or more
 * monomials:
 *   part 1:  P has >= 2 monomials and d1 = 1.  Then P = a_{0,n-t} y^(n-t)
 *            + a_{1,0} x and s1 = (n-t) s2.  The base family (t = 0)
 *            pairs it with Q = b_{0,n} y^n + b_{1,0} x; for t >= 1 the
 *            leading Q monomial has degree n and every compatible lower
 *            monomial lies on the line ttbar = (qbar - q)(n - t - 1).
 *   part 2:  P has >= 2 monomials and d1 > 1.  The monomials of P lie on
 *            a ray of slope k/dt from (p, n-t-p); each maximal ray gives
 *            P and pins (s1, s2, d1) up to one parameter; every
 *            compatible Q-monomial class then yields one family.
 *   part 3:  P is a single monomial and Q has >= 2 monomials (d2 > 1
 *            always holds there).  Q rays play the role of P rays and a
 *            single-monomial P slot (t, p) is admitted only when no
 *            second P monomial would be compatible.
 *
 * Families whose index is zero are quasi-homogeneous and are removed;
 * the removals are returned alongside the result.
 */
#pragma once

#include "psqh/family.hpp"

#include <numeric>
#include <set>

namespace psqh {

struct EnumerationResult {
    std::vector<Family> families;          // canonical order
    std::vector<Family> removed_index_zero; // quasi-homogeneous removals
};

namespace detail {

inline void check_degree(int n) {
    if (n < 2) throw MathError("degree must exceed 1");
}

inline void push_family(std::vector<Family>& fams, std::vector<Family>& removed, Family f) {
    std::sort(f.support_p.begin(), f.support_p.end());
    std::sort(f.support_q.begin(), f.support_q.end());
    if (f.lambda.is_zero())
        removed.push_back(std::move(f));
    else
        fams.push_back(std::move(f));
}

// Self-check: the family instantiated with unit coefficients must admit
// its minimal weight vector, reproduce its index, have the right degree
// and not be semihomogeneous.
inline void verify_family(const Family& f) {
    VectorField v = f.instantiate_ones();
    if (v.degree() != f.n)
        throw MathError("family " + f.name() + ": degree mismatch");
    if (!is_weight_vector(v, f.wm))
        throw MathError("family " + f.name() + ": minimal weight vector rejected");
    auto lam = index_of(f.wm);
    if (!lam || *lam != f.lambda)
        throw MathError("family " + f.name() + ": index mismatch");
    if (is_semihomogeneous(v))
        throw MathError("family " + f.name() + ": semihomogeneous");
    if (f.wm != f.w.at(f.w.theta_min()))
        throw MathError("family " + f.name() + ": parametric weight does not reach minimum");
    if (std::gcd(f.wm.s1, f.wm.s2) != 1)
        throw MathError("family " + f.name() + ": minimal weights not coprime");
}

} // namespace detail

// Part 1 (d1 = 1): base family plus, for t in 1..n-2, the families with
// P = a_{0,n-t} y^(n-t) + a_{1,0} x and leading Q monomial b_{q,n-q}.
inline void enumerate_d1_eq_1(int n, std::vector<Family>& fams, std::vector<Family>& removed) {
    detail::check_degree(n);

    {
        Family base;
        base.key = FamilyKey{Part::P1Base, 0, 0, 0, 0, 0, 0};
        base.n = n;
        base.support_p = {{0, n}, {1, 0}};
        base.support_q = {{0, n}, {1, 0}};
        base.w.param = WeightParam::S2;
        base.w.mod = 1;
        base.w.theta0 = 1;
        base.w.forms = {AffineForm{n, 0}, AffineForm{1, 0}, AffineForm{0, 1},
                        AffineForm{n - 1, 1}};
        base.wm = WeightVector{n, 1, 1, n};
        base.lambda = Rational(-1);
        detail::push_family(fams, removed, std::move(base));
    }

    for (int t = 1; t <= n - 2; ++t) {
        for (int q = 0; q <= n; ++q) {
            Family f;
            f.key = FamilyKey{Part::P1, t, 0, 0, q, 0, 0};
            f.n = n;
            f.support_p = {{0, n - t}, {1, 0}};
            f.support_q.push_back({q, n - q});
            // compatible monomials: ttbar = (qbar - q)(n - t - 1)
            for (int qbar = 0; qbar <= n; ++qbar) {
                std::int64_t ttbar = static_cast<std::int64_t>(qbar - q) * (n - t - 1);
                if (ttbar >= 1 && ttbar <= n - 1 && qbar <= n - ttbar)
                    f.support_q.push_back({qbar, static_cast<int>(n - ttbar - qbar)});
            }
            f.w.param = WeightParam::S2;
            f.w.mod = 1;
            f.w.theta0 = 1;
            std::int64_t d2c = static_cast<std::int64_t>(n - t - 1) * q + (n - 1);
            f.w.forms = {AffineForm{n - t, 0}, AffineForm{1, 0}, AffineForm{0, 1},
                         AffineForm{d2c, 1}};
            f.wm = WeightVector{n - t, 1, 1, d2c + 1};
            f.lambda = Rational(-q) - Rational(n - 1, n - t - 1);
            detail::push_family(fams, removed, std::move(f));
        }
    }
}

namespace detail {

// Maximal monomial rays: (dt, k) pairs grouped by the reduced slope k/dt.
// Every ray contains its primitive member, which is the lexicographic
// minimum and serves as the class key.
struct Ray {
    int dt, k;                             // primitive (gcd = 1) leader
    std::vector<std::pair<int, int>> members; // all (dt', k') on the ray
};

inline std::vector<Ray> partition_rays(const std::set<std::pair<int, int>>& pairs) {
    std::map<std::pair<int, int>, Ray> by_slope;
    for (auto [dt, k] : pairs) {
        int g = std::gcd(dt, k);
        auto key = std::pair(dt / g, k / g);
        auto& ray = by_slope[key];
        ray.dt = key.first;
        ray.k = key.second;
        ray.members.emplace_back(dt, k);
    }
    std::vector<Ray> out;
    for (auto& [slope, ray] : by_slope) out.push_back(std::move(ray));
    std::sort(out.begin(), out.end(), [](const Ray& a, const Ray& b) {
        return a.members.front() < b.members.front();
    });
    return out;
}

// All leading-monomial positions (tA, e) of the single-monomial side
// subject to tA * tB_other = 0, i.e. degree n must be realized.
inline std::vector<std::pair<int, int>> index_positions(int n, int t_other) {
    std::vector<std::pair<int, int>> out;
    if (t_other == 0) {
        for (int t = 0; t <= n - 1; ++t)
            for (int e = 0; e <= n - t; ++e) out.emplace_back(t, e);
    } else {
        for (int e = 0; e <= n; ++e) out.emplace_back(0, e);
    }
    return out;
}

} // namespace detail

// Part 2 (d1 > 1): maximal P rays, then one family per compatible
// Q-monomial class.
inline void enumerate_d1_gt_1(int n, std::vector<Family>& fams, std::vector<Family>& removed) {
    detail::check_degree(n);

    for (int t = 0; t <= n - 2; ++t) {
        for (int p = 0; p <= n - t - 2; ++p) {
            std::set<std::pair<int, int>> eqs;
            for (int dt = 1; dt <= n - t - p - 1; ++dt)
                for (int k = 1; k <= n - t - dt - p; ++k) eqs.insert({dt, k});
            if (p == 0) eqs.erase({n - t - 1, 1}); // would force d1 = 1

            for (const auto& ray : detail::partition_rays(eqs)) {
                const int dt = ray.dt, k = ray.k;
                std::vector<Slot> support_p = {{p, n - t - p}};
                for (auto [dtm, km] : ray.members)
                    support_p.push_back({p + km, n - t - dtm - p - km});

                // D > 0 by construction (d1 > 1 case)
                std::int64_t D = static_cast<std::int64_t>(n - t - 1) * k +
                                 static_cast<std::int64_t>(p - 1) * dt;
                if (D <= 0) throw MathError("internal: nonpositive D in part 2");

                // group Q-monomial candidates into compatibility classes:
                // (q - qbar) * dt == (tt - ttbar) * k.  Seeds carry the
                // t*tt = 0 constraint; class members may sit at any ttbar.
                auto seeds = detail::index_positions(n, t);
                auto candidates = detail::index_positions(n, 0);
                std::set<std::pair<int, int>> done;
                for (auto [tt, q] : seeds) {
                    if (done.count({tt, q})) continue;
                    std::vector<std::pair<int, int>> cls;
                    for (auto [ttb, qb] : candidates)
                        if (static_cast<std::int64_t>(q - qb) * dt ==
                            static_cast<std::int64_t>(tt - ttb) * k)
                            cls.push_back({ttb, qb});
                    for (auto m : cls) done.insert(m);

                    Family f;
                    f.key = FamilyKey{Part::P2, t, tt, p, q, dt, k};
                    f.n = n;
                    f.support_p = support_p;
                    for (auto [ttb, qb] : cls) f.support_q.push_back({qb, n - ttb - qb});

                    std::int64_t C = static_cast<std::int64_t>(n - tt - 1) * k +
                                     static_cast<std::int64_t>(q) * dt;
                    f.w.param = WeightParam::D1;
                    f.w.mod = D;
                    f.w.theta0 = D + 1;
                    f.w.forms = {AffineForm{dt + k, -(dt + k)}, AffineForm{k, -k},
                                 AffineForm{D, 0}, AffineForm{C, D - C}};
                    f.wm = WeightVector{dt + k, k, D + 1, C + 1};
                    f.lambda = Rational(p - q - 1) - Rational(t - tt) * Rational(k, dt);
                    detail::push_family(fams, removed, std::move(f));
                }
            }
        }
    }
}

// Part 3 (|A| = 1, |B| >= 2): maximal Q rays; a single P monomial at
// (t, p) is admitted when no compatible second P monomial exists and,
// for p = 0, when (n-t-1)k >= dtt (which is d1 >= 1).
inline void enumerate_single_A(int n, std::vector<Family>& fams, std::vector<Family>& removed) {
    detail::check_degree(n);

    for (int tt = 0; tt <= n - 2; ++tt) {
        for (int q = 0; q <= n - tt - 2; ++q) {
            std::set<std::pair<int, int>> eqs;
            for (int dtt = 1; dtt <= n - tt - q - 1; ++dtt)
                for (int k = 1; k <= n - tt - dtt - q; ++k) eqs.insert({dtt, k});

            for (const auto& ray : detail::partition_rays(eqs)) {
                const int dtt = ray.dt, k = ray.k;

                // S: single-P-monomial positions compatible with nothing else
                std::vector<std::pair<int, int>> S;
                for (auto [t, p] : detail::index_positions(n, tt)) {
                    bool extensible = false;
                    for (int tstar = 0; tstar <= n - 1 && !extensible; ++tstar) {
                        if (tstar == t) continue;
                        // (p - pstar) * dtt == (t - tstar) * k
                        std::int64_t rhs = static_cast<std::int64_t>(t - tstar) * k;
                        if (rhs % dtt != 0) continue;
                        std::int64_t pstar = p - rhs / dtt;
                        if (pstar >= 0 && pstar <= n - tstar) extensible = true;
                    }
                    if (extensible) continue;
                    if (p == 0 && static_cast<std::int64_t>(n - t - 1) * k < dtt)
                        continue; // would force d1 < 1
                    S.emplace_back(t, p);
                }
                if (S.empty()) continue;

                std::vector<Slot> support_q = {{q, n - tt - q}};
                for (auto [dttm, km] : ray.members)
                    support_q.push_back({q + km, n - tt - dttm - q - km});

                std::int64_t D = static_cast<std::int64_t>(n - tt - 1) * k +
                                 static_cast<std::int64_t>(dtt) * q;
                if (D <= 0) throw MathError("internal: nonpositive D in part 3");

                for (auto [t, p] : S) {
                    Family f;
                    f.key = FamilyKey{Part::P3, t, tt, p, q, dtt, k};
                    f.n = n;
                    f.support_p = {{p, n - t - p}};
                    f.support_q = support_q;

                    std::int64_t C = static_cast<std::int64_t>(n - t - 1) * k +
                                     static_cast<std::int64_t>(p - 1) * dtt;
                    if (C < 0) throw MathError("internal: negative d1 coefficient in part 3");
                    f.w.param = WeightParam::D2;
                    f.w.mod = D;
                    f.w.theta0 = D + 1;
                    f.w.forms = {AffineForm{dtt + k, -(dtt + k)}, AffineForm{k, -k},
                                 AffineForm{C, D - C}, AffineForm{D, 0}};
                    f.wm = WeightVector{dtt + k, k, C + 1, D + 1};
                    f.lambda = Rational(p - q - 1) - Rational(t - tt) * Rational(k, dtt);
                    detail::push_family(fams, removed, std::move(f));
                }
            }
        }
    }
}

inline EnumerationResult enumerate_all(int n) {
    detail::check_degree(n);
    EnumerationResult r;
    enumerate_d1_eq_1(n, r.families, r.removed_index_zero);
    enumerate_d1_gt_1(n, r.families, r.removed_index_zero);
    enumerate_single_A(n, r.families, r.removed_index_zero);

    std::sort(r.families.begin(), r.families.end());
    std::sort(r.removed_index_zero.begin(), r.removed_index_zero.end());

    // dedup on supports; conflicting data for one support is an internal error
    std::map<SupportPair, const Family*> seen;
    std::vector<Family> unique;
    for (auto& f : r.families) {
        auto key = support_pair(f);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = &f;
            unique.push_back(f);
        } else if (it->second->wm != f.wm || it->second->lambda != f.lambda) {
            throw MathError("internal: duplicate support with conflicting weight data (" +
                            f.name() + " vs " + it->second->name() + ")");
        }
    }
    r.families = std::move(unique);

    // Drop families whose support pair is strictly contained in another
    // family's: such a family is the zero-coefficient stratum of the
    // larger one, not a separate class.  (Inert for n <= 3.)
    auto contains = [](const std::vector<Slot>& inner, const std::vector<Slot>& outer) {
        return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
    };
    std::vector<Family> maximal;
    for (const auto& f : r.families) {
        bool subsumed = false;
        for (const auto& g : r.families) {
            if (&f == &g || support_pair(f) == support_pair(g)) continue;
            if (contains(f.support_p, g.support_p) && contains(f.support_q, g.support_q)) {
                subsumed = true;
                break;
            }
        }
        if (!subsumed) maximal.push_back(f);
    }
    r.families = std::move(maximal);

    for (const auto& f : r.families) detail::verify_family(f);
    return r;
}

// Convenience wrappers returning just the family lists.
inline std::vector<Family> enumerate_d1_eq_1(int n) {
    std::vector<Family> f, rem;
    enumerate_d1_eq_1(n, f, rem);
    std::sort(f.begin(), f.end());
    return f;
}
inline std::vector<Family> enumerate_d1_gt_1(int n) {
    std::vector<Family> f, rem;
    enumerate_d1_gt_1(n, f, rem);
    std::sort(f.begin(), f.end());
    return f;
}
inline std::vector<Family> enumerate_single_A(int n) {
    std::vector<Family> f, rem;
    enumerate_single_A(n, f, rem);
    std::sort(f.begin(), f.end());
    return f;
}

} // namespace psqh
