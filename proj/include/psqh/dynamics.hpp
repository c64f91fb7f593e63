/*
 * dynamics.hpp
 * ------------
 * Periodic-orbit exclusion tests and numerical orbit integration.
 *
 * The exclusion tests are the elementary ones used in the center
 * analysis: sign-definite divergence near the origin (Bendixson), a
 * globally sign-semidefinite component, an invariant coordinate axis,
 * and strict one-way crossing of a coordinate axis.  Each is a sound
 * obstruction to a period annulus around the origin.
 */
#pragma once

#include "psqh/vectorfield.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace psqh {

inline Poly divergence(const VectorField& f) { return f.p.dx() + f.q.dy(); }

// True when the divergence has a nonzero constant term, hence fixed sign
// on a neighborhood of the origin: no periodic orbit can stay inside it.
inline bool bendixson_excludes(const VectorField& f) {
    return !divergence(f).coeff(0, 0).is_zero();
}

enum class ComponentTag { P, Q };

// A component that is a sum of even-power monomials with same-sign
// coefficients never changes sign, which rules out periodic orbits
// (its time average along a closed orbit would have to vanish).
inline std::optional<ComponentTag> sign_definite_component(const VectorField& f) {
    auto definite = [](const Poly& p) {
        if (p.is_zero()) return false;
        int sign = 0;
        for (const auto& [e, c] : p.terms()) {
            if (e.first % 2 != 0 || e.second % 2 != 0) return false;
            if (sign == 0) sign = c.sign();
            else if (c.sign() != sign) return false;
        }
        return true;
    };
    if (definite(f.p)) return ComponentTag::P;
    if (definite(f.q)) return ComponentTag::Q;
    return std::nullopt;
}

enum class InvariantAxis { None, XAxis, YAxis, Both };

// y-axis invariant iff x | P; x-axis invariant iff y | Q.  A closed
// orbit around the origin would have to cross an invariant axis.
inline InvariantAxis invariant_axis(const VectorField& f) {
    bool y_axis = !f.p.is_zero() && f.p.valuation(0) >= 1;
    bool x_axis = !f.q.is_zero() && f.q.valuation(1) >= 1;
    if (x_axis && y_axis) return InvariantAxis::Both;
    if (x_axis) return InvariantAxis::XAxis;
    if (y_axis) return InvariantAxis::YAxis;
    return InvariantAxis::None;
}

// Strict one-way axis crossing: if Q(x, 0) keeps one sign for all
// x != 0 (e.g. Q(x,0) = c x^2), every crossing of the x-axis goes the
// same way, so no orbit can close around the origin.  Dually for
// P(0, y) on the y-axis.
inline std::optional<ComponentTag> axis_crossing_definite(const VectorField& f) {
    auto definite = [](const std::vector<std::pair<int, Rational>>& u) {
        if (u.empty()) return false;
        int sign = 0;
        for (const auto& [e, c] : u) {
            if (e % 2 != 0) return false;
            if (sign == 0) sign = c.sign();
            else if (c.sign() != sign) return false;
        }
        return true;
    };
    if (definite(f.q.restrict_to_axis(0))) return ComponentTag::Q; // x-axis, Q drives crossing
    if (definite(f.p.restrict_to_axis(1))) return ComponentTag::P; // y-axis
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Classical RK4 integration
// ---------------------------------------------------------------------

struct OrbitSample {
    double t, x, y;
};

struct Orbit {
    std::vector<OrbitSample> samples;
    bool truncated = false; // left the norm bound before completing nsteps
};

inline Orbit rk4_integrate(const VectorField& f, double x0, double y0, double step,
                           long nsteps, double norm_bound = 1e6) {
    if (step <= 0) throw MathError("step must be positive");
    if (nsteps < 1) throw MathError("nsteps must be at least 1");
    Orbit orbit;
    orbit.samples.reserve(static_cast<std::size_t>(nsteps) + 1);
    double x = x0, y = y0, t = 0;
    orbit.samples.push_back({t, x, y});
    for (long s = 0; s < nsteps; ++s) {
        double k1x = f.p.eval(x, y), k1y = f.q.eval(x, y);
        double k2x = f.p.eval(x + 0.5 * step * k1x, y + 0.5 * step * k1y);
        double k2y = f.q.eval(x + 0.5 * step * k1x, y + 0.5 * step * k1y);
        double k3x = f.p.eval(x + 0.5 * step * k2x, y + 0.5 * step * k2y);
        double k3y = f.q.eval(x + 0.5 * step * k2x, y + 0.5 * step * k2y);
        double k4x = f.p.eval(x + step * k3x, y + step * k3y);
        double k4y = f.q.eval(x + step * k3x, y + step * k3y);
        x += step / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
        y += step / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
        t += step;
        if (!std::isfinite(x) || !std::isfinite(y) || std::hypot(x, y) > norm_bound) {
            orbit.truncated = true;
            break;
        }
        orbit.samples.push_back({t, x, y});
    }
    return orbit;
}

// First return to the section {y = 0, x > 0} crossed upward, detected
// by a sign change of y with linear interpolation between samples.
struct SectionReturn {
    bool found = false;
    double t = 0, x = 0;
};

inline SectionReturn first_return(const Orbit& orbit) {
    SectionReturn r;
    for (std::size_t i = 2; i + 1 <= orbit.samples.size() - 1 + 1 && i < orbit.samples.size(); ++i) {
        const auto& a = orbit.samples[i - 1];
        const auto& b = orbit.samples[i];
        if (a.y < 0 && b.y >= 0 && (a.x > 0 || b.x > 0)) {
            double f = a.y / (a.y - b.y);
            r.found = true;
            r.t = a.t + f * (b.t - a.t);
            r.x = a.x + f * (b.x - a.x);
            return r;
        }
    }
    return r;
}

} // namespace psqh
