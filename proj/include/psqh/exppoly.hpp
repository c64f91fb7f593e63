/*
 * exppoly.hpp
 * -----------
 * Polynomials times a single exponential in y:  p(x, y) * e^(mu*y).
 * Closed under +, * and partial differentiation, which is all the first
 * integral H and integrating factor M of the cubic center require.
 */
#pragma once

#include "psqh/vectorfield.hpp"

namespace psqh {

struct ExpPoly {
    Poly poly;
    Rational rate; // mu in p * e^(mu*y)

    bool is_zero() const { return poly.is_zero(); }

    ExpPoly dx() const { return {poly.dx(), rate}; }
    ExpPoly dy() const { return {poly.dy() + rate * poly, rate}; }

    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        return {a.poly * b.poly, a.rate + b.rate};
    }
    friend ExpPoly operator*(const Poly& a, const ExpPoly& b) { return {a * b.poly, b.rate}; }

    // Addition requires matching rates (or a zero side).
    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.rate != b.rate) throw MathError("exponential rate mismatch in addition");
        return {a.poly + b.poly, a.rate};
    }
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) {
        return a + ExpPoly{-b.poly, b.rate};
    }

    // Equal as functions: either both zero, or same rate and polynomial.
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.rate == b.rate && a.poly == b.poly;
    }

    double eval(double x, double y) const {
        return poly.eval(x, y) * std::exp(rate.to_double() * y);
    }

    std::string str() const {
        std::string s = "(" + poly.str() + ")";
        if (!rate.is_zero()) s += "*e^(" + rate.str() + "y)";
        return s;
    }
};

// Vdot = Vx*P + Vy*Q for a polynomial Lyapunov candidate V.
inline Poly verify_lyapunov(const VectorField& f, const Poly& V) {
    return V.dx() * f.p + V.dy() * f.q;
}

struct FirstIntegralCheck {
    bool hx_equals_MQ = false;
    bool hy_equals_minus_MP = false;
    bool conserved = false; // Hx*P + Hy*Q == 0
    bool rate_consistent = true;
    std::string diagnostic;

    bool ok() const { return hx_equals_MQ && hy_equals_minus_MP && conserved; }
};

// Checks Hx = M*Q and Hy = -M*P (which force Hdot = 0), plus the direct
// conservation identity, all in the exponential-polynomial ring.
inline FirstIntegralCheck verify_first_integral(const VectorField& f, const ExpPoly& H,
                                                const ExpPoly& M) {
    FirstIntegralCheck c;
    if (H.rate != M.rate && !H.is_zero() && !M.is_zero()) {
        c.rate_consistent = false;
        c.diagnostic = "integrating factor rate " + M.rate.str() +
                       " differs from integral rate " + H.rate.str();
        return c;
    }
    ExpPoly hx = H.dx(), hy = H.dy();
    c.hx_equals_MQ = (hx == f.q * M);
    c.hy_equals_minus_MP = (hy == ExpPoly{-(f.p * M.poly), M.rate});
    ExpPoly hdot = ExpPoly{hx.poly * f.p, hx.rate} + ExpPoly{hy.poly * f.q, hy.rate};
    c.conserved = hdot.is_zero();
    if (!c.ok()) c.diagnostic = "first-integral identities failed";
    return c;
}

} // namespace psqh
