/*
 * blowup.hpp
 * ----------
 * Weighted directional blow-ups of a singular point at the origin.
 *
 * For weights (a, b) and the x-directions the substitution is
 *   x = sigma * xb^a,   y = xb^b * yb        (sigma = +1 / -1),
 * with xb the exceptional variable; the y-directions use the symmetric
 * form y = sigma * yb^a, x = yb^b * xb.  Differentiating,
 *   u' = (exceptional numerator) / (sigma * a * u^(a-1)),
 *   v' = (other numerator - b u^(b-1) v u') / u^b,
 * and the largest power of u dividing BOTH chart components is divided
 * out (a time rescaling along the divisor); that power is recorded.  A
 * zero component blocks the division, so e.g. a linear radial field
 * keeps its chart verbatim with divided_power = 0.
 *
 * Divisor singularities are the common zeros of the chart components on
 * {u = 0}.  They are isolated exactly (Sturm bisection) and classified
 * from the exact signs of the Jacobian determinant and trace at the
 * point: Hyperbolic (no eigenvalue on the imaginary axis), SemiHyperbolic
 * (exactly one zero eigenvalue), Nilpotent (both zero, nonzero linear
 * part) or LinearlyZero.
 */
#pragma once

#include "psqh/vectorfield.hpp"
#include "psqh/realroots.hpp"

namespace psqh {

enum class BlowupDirection { PosX, NegX, PosY, NegY };

inline const char* direction_name(BlowupDirection d) {
    switch (d) {
        case BlowupDirection::PosX: return "+x";
        case BlowupDirection::NegX: return "-x";
        case BlowupDirection::PosY: return "+y";
        case BlowupDirection::NegY: return "-y";
    }
    return "?";
}

struct BlowupSpec {
    int a = 1, b = 1;
    BlowupDirection direction = BlowupDirection::PosX;
};

enum class SingularityKind { Hyperbolic, SemiHyperbolic, Nilpotent, LinearlyZero };

inline const char* kind_name(SingularityKind k) {
    switch (k) {
        case SingularityKind::Hyperbolic: return "hyperbolic";
        case SingularityKind::SemiHyperbolic: return "semi-hyperbolic";
        case SingularityKind::Nilpotent: return "nilpotent";
        case SingularityKind::LinearlyZero: return "linearly-zero";
    }
    return "?";
}

struct SingularityClass {
    SingularityKind kind = SingularityKind::LinearlyZero;
    int trace_sign = 0;
    int det_sign = 0;
    BigRat trace_lo = 0, trace_hi = 0; // certified enclosure of the trace
    BigRat det_lo = 0, det_hi = 0;     // certified enclosure of the determinant
};

struct DivisorSingularity {
    RootInterval position; // coordinate along the divisor
    SingularityClass cls;
};

struct BlowupResult {
    VectorField field;     // chart field, components in (xb, yb) order
    int divided_power = 0; // common exceptional power removed
    bool divisor_degenerate = false; // whole divisor consists of singularities
    std::vector<DivisorSingularity> divisor_singularities;
};

namespace detail {

inline UniPoly upoly_mul(const UniPoly& x, const UniPoly& y) {
    if (x.is_zero() || y.is_zero()) return UniPoly();
    std::vector<BigRat> c(x.coef().size() + y.coef().size() - 1, BigRat(0));
    for (std::size_t i = 0; i < x.coef().size(); ++i)
        for (std::size_t j = 0; j < y.coef().size(); ++j) c[i + j] += x.coef()[i] * y.coef()[j];
    return UniPoly(std::move(c));
}

inline UniPoly upoly_add(const UniPoly& x, const UniPoly& y) {
    std::vector<BigRat> c(std::max(x.coef().size(), y.coef().size()), BigRat(0));
    for (std::size_t i = 0; i < x.coef().size(); ++i) c[i] += x.coef()[i];
    for (std::size_t i = 0; i < y.coef().size(); ++i) c[i] += y.coef()[i];
    return UniPoly(std::move(c));
}

// Certified enclosure of q over the isolating interval (exact when the
// point is rational).
inline std::pair<BigRat, BigRat> enclose_at_root(const UniPoly& q, const RootInterval& iv) {
    if (iv.exact) {
        BigRat v = q.eval(iv.lo);
        return {v, v};
    }
    BigRat lo = 0, hi = 0, plo = 1, phi = 1;
    for (std::size_t k = 0; k < q.coef().size(); ++k) {
        if (k > 0) {
            BigRat c0 = plo * iv.lo, c1 = plo * iv.hi, c2 = phi * iv.lo, c3 = phi * iv.hi;
            plo = std::min(std::min(c0, c1), std::min(c2, c3));
            phi = std::max(std::max(c0, c1), std::max(c2, c3));
        }
        const BigRat& a = q.coef()[k];
        if (a >= 0) { lo += a * plo; hi += a * phi; }
        else { lo += a * phi; hi += a * plo; }
    }
    return {lo, hi};
}

} // namespace detail

inline BlowupResult weighted_blowup(const VectorField& f, const BlowupSpec& spec) {
    if (spec.a < 1 || spec.b < 1) throw MathError("blow-up weights must be positive");
    if (!f.p.coeff(0, 0).is_zero() || !f.q.coeff(0, 0).is_zero())
        throw MathError("origin is not a singular point");

    const bool xdir = spec.direction == BlowupDirection::PosX ||
                      spec.direction == BlowupDirection::NegX;
    const Rational sigma((spec.direction == BlowupDirection::NegX ||
                          spec.direction == BlowupDirection::NegY) ? -1 : 1);
    const int exc = xdir ? 0 : 1; // exceptional axis in chart coordinates

    // substitution images in chart coordinates (xb, yb)
    Poly Nexc, Noth;
    if (xdir) {
        // x = sigma xb^a, y = xb^b yb
        Nexc = f.p.substitute_monomials(sigma, spec.a, 0, Rational(1), spec.b, 1);
        Noth = f.q.substitute_monomials(sigma, spec.a, 0, Rational(1), spec.b, 1);
    } else {
        // y = sigma yb^a, x = yb^b xb
        Nexc = f.q.substitute_monomials(Rational(1), 1, spec.b, sigma, 0, spec.a);
        Noth = f.p.substitute_monomials(Rational(1), 1, spec.b, sigma, 0, spec.a);
    }

    // u' = Nexc / (sigma a u^(a-1)), v' = (Noth - b u^(b-1) v u') / u^b
    // over the common denominator sigma * a * u^(a+b-1):
    const int D = spec.a + spec.b - 1;
    auto u_pow = [&](int e) {
        return Poly::monomial(Rational(1), exc == 0 ? e : 0, exc == 0 ? 0 : e);
    };
    const Poly v_var = exc == 0 ? Poly::y() : Poly::x();

    Poly A = Nexc * u_pow(spec.b);
    Poly B = (sigma * Rational(spec.a)) * (Noth * u_pow(spec.a - 1)) -
             Rational(spec.b) * (v_var * Nexc * u_pow(spec.b - 1));

    int v;
    if (A.is_zero() && B.is_zero()) {
        v = D;
    } else if (A.is_zero() || B.is_zero()) {
        // a vanishing component blocks further division
        v = std::min(A.is_zero() ? B.valuation(exc) : A.valuation(exc), D);
    } else {
        v = std::min(A.valuation(exc), B.valuation(exc));
    }
    if (v < D)
        throw MathError("blow-up produced a non-polynomial chart field");

    const Rational scale = Rational(1) / (sigma * Rational(spec.a));
    Poly comp_u = scale * A.divide_power(exc, v);
    Poly comp_v = scale * B.divide_power(exc, v);

    BlowupResult r;
    r.divided_power = v - D;
    r.field = xdir ? VectorField(comp_u, comp_v) : VectorField(comp_v, comp_u);

    // divisor singularities: common zeros of the chart on u = 0.
    // restrict_to_axis(1 - exc) keeps the divisor coordinate.
    const int divisor_axis = 1 - exc;
    UniPoly fu = UniPoly::from_pairs(r.field.p.restrict_to_axis(divisor_axis));
    UniPoly gu = UniPoly::from_pairs(r.field.q.restrict_to_axis(divisor_axis));
    if (fu.is_zero() && gu.is_zero()) {
        r.divisor_degenerate = true;
        return r;
    }
    UniPoly target;
    if (fu.is_zero()) target = gu;
    else if (gu.is_zero()) target = fu;
    else target = fu.gcd(gu);
    if (target.is_zero() || target.degree() <= 0) return r; // no common zero

    auto roots = isolate_real_roots(target, BigRat(1, 1000000000000ll) / 10);

    UniPoly j11 = UniPoly::from_pairs(r.field.p.dx().restrict_to_axis(divisor_axis));
    UniPoly j12 = UniPoly::from_pairs(r.field.p.dy().restrict_to_axis(divisor_axis));
    UniPoly j21 = UniPoly::from_pairs(r.field.q.dx().restrict_to_axis(divisor_axis));
    UniPoly j22 = UniPoly::from_pairs(r.field.q.dy().restrict_to_axis(divisor_axis));
    UniPoly tr = detail::upoly_add(j11, j22);
    UniPoly det = detail::upoly_mul(j11, j22) - detail::upoly_mul(j12, j21);

    for (const auto& root : roots) {
        DivisorSingularity s;
        s.position = root;
        int sd = sign_at_root(det, target, root);
        int st = sign_at_root(tr, target, root);
        s.cls.det_sign = sd;
        s.cls.trace_sign = st;
        std::tie(s.cls.det_lo, s.cls.det_hi) = detail::enclose_at_root(det, root);
        std::tie(s.cls.trace_lo, s.cls.trace_hi) = detail::enclose_at_root(tr, root);
        if (sd != 0) {
            if (sd < 0 || st != 0)
                s.cls.kind = SingularityKind::Hyperbolic;
            else
                throw MathError("divisor singularity with purely imaginary eigenvalues");
        } else if (st != 0) {
            s.cls.kind = SingularityKind::SemiHyperbolic;
        } else {
            bool lin_zero = sign_at_root(j11, target, root) == 0 &&
                            sign_at_root(j12, target, root) == 0 &&
                            sign_at_root(j21, target, root) == 0 &&
                            sign_at_root(j22, target, root) == 0;
            s.cls.kind = lin_zero ? SingularityKind::LinearlyZero : SingularityKind::Nilpotent;
        }
        r.divisor_singularities.push_back(std::move(s));
    }
    return r;
}

} // namespace psqh
