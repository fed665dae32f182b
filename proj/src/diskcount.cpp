#include "coxperron/diskcount.hpp"

#include <string>

#include "coxperron/errors.hpp"

namespace coxperron {

CircleSplit circle_split(const Poly& f, const Rational& radius) {
    if (radius <= 0) throw PreconditionError("circle radius must be positive");
    if (f.degree() < 1) throw PreconditionError("circle split needs a nonconstant polynomial");
    const int d = f.degree();

    // powers of (t - i) and (t + i)
    const ComplexSplitPoly t_minus_i{Poly{0, 1}, Poly{-1}};
    const ComplexSplitPoly t_plus_i{Poly{0, 1}, Poly{1}};
    std::vector<ComplexSplitPoly> minus_pow{{Poly{1}, Poly{}}};
    std::vector<ComplexSplitPoly> plus_pow{{Poly{1}, Poly{}}};
    for (int k = 1; k <= d; ++k) {
        minus_pow.push_back(minus_pow.back() * t_minus_i);
        plus_pow.push_back(plus_pow.back() * t_plus_i);
    }

    ComplexSplitPoly sum;
    Rational r_pow = 1;
    for (int k = 0; k <= d; ++k) {
        const Rational a = f.coeff(k) * r_pow;
        if (a != 0) {
            ComplexSplitPoly term = minus_pow[static_cast<std::size_t>(k)] * plus_pow[static_cast<std::size_t>(d - k)];
            term *= a;
            sum += term;
        }
        r_pow *= radius;
    }
    return {radius, std::move(sum), d};
}

namespace {

// Phi and Psi share a real root iff f vanishes on the circle away from z = r.
bool split_has_common_real_root(const CircleSplit& cs) {
    // Psi == 0: f(z(t)) (t+i)^d is real on the circle, so gcd(Phi, Psi) = Phi
    if (cs.psi().is_zero()) return count_all_real_roots(cs.phi()) > 0;
    if (resultant(cs.phi(), cs.psi()) != 0) return false;
    const Poly common = gcd(cs.phi(), cs.psi());
    if (common.degree() < 1) return false;
    return count_all_real_roots(common) > 0;
}

}  // namespace

bool has_root_on_circle(const Poly& f, const Rational& radius) {
    if (f.is_zero()) throw PreconditionError("the zero polynomial vanishes everywhere");
    if (f.degree() == 0) return false;
    if (f.sign_at(radius) == 0) return true;
    return split_has_common_real_root(circle_split(f, radius));
}

DiskCountDetail count_roots_in_disk_detail(const Poly& f, const Rational& radius) {
    if (radius <= 0) throw PreconditionError("circle radius must be positive");
    if (f.degree() < 1) throw PreconditionError("disk count needs a nonconstant polynomial");
    if (!is_squarefree(f)) throw PreconditionError("disk count requires a squarefree polynomial");
    if (f.sign_at(radius) == 0) {
        throw PreconditionError("polynomial has the root z = " + to_string(radius) + " on the circle");
    }
    const CircleSplit cs = circle_split(f, radius);
    if (split_has_common_real_root(cs)) {
        throw PreconditionError("polynomial has a root on the circle |z| = " + to_string(radius) +
                                " (Phi and Psi share a real root)");
    }

    // f(r) != 0 makes deg Phi = deg f > deg Psi. With Psi == 0 the chain is
    // (Phi) alone and both sign counts are zero.
    DiskCountDetail out;
    if (!cs.psi().is_zero()) {
        const SturmSequence seq = build_sturm(cs.phi(), cs.psi());
        out.w_plus_infinity = seq.sign_changes_at_infinity(Direction::plus);
        out.w_minus_infinity = seq.sign_changes_at_infinity(Direction::minus);
    }
    const int twice = out.w_plus_infinity - out.w_minus_infinity + f.degree();
    if (twice % 2 != 0 || twice < 0 || twice > 2 * f.degree()) {
        throw InvariantError("disk count parity violated: w(+inf)=" + std::to_string(out.w_plus_infinity) +
                             " w(-inf)=" + std::to_string(out.w_minus_infinity));
    }
    out.roots_inside = twice / 2;
    return out;
}

int count_roots_in_disk(const Poly& f, const Rational& radius) {
    return count_roots_in_disk_detail(f, radius).roots_inside;
}

}  // namespace coxperron
