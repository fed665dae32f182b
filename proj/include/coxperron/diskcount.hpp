#pragma once

#include "coxperron/poly.hpp"
#include "coxperron/sturm.hpp"

namespace coxperron {

/// f restricted to the circle |z| = r through z(t) = r(t - i)/(t + i):
///
///     f(z(t)) * (t + i)^deg f = Phi(t) + i Psi(t).
///
/// Real t sweeps the whole circle except z = r, which is reached as t -> +-inf.
struct CircleSplit {
    Rational radius;
    ComplexSplitPoly split;
    int source_degree = 0;

    const Poly& phi() const { return split.re; }
    const Poly& psi() const { return split.im; }
};

/// Throws PreconditionError when r <= 0 or deg f < 1.
CircleSplit circle_split(const Poly& f, const Rational& radius);

/// True iff f has a root of modulus exactly r.
bool has_root_on_circle(const Poly& f, const Rational& radius);

/// Sturm sign-change data of the (Phi, Psi) chain, kept for certificates.
struct DiskCountDetail {
    SignCount w_plus_infinity = 0;
    SignCount w_minus_infinity = 0;
    int roots_inside = 0;
};

/// Number of roots of the squarefree polynomial f in the open disk |z| < r,
/// (w(+inf) - w(-inf) + deg f) / 2 over the chain of (Phi, Psi).
/// Throws PreconditionError when f is not squarefree or has a root on the circle.
int count_roots_in_disk(const Poly& f, const Rational& radius);
DiskCountDetail count_roots_in_disk_detail(const Poly& f, const Rational& radius);

}  // namespace coxperron
