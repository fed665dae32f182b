#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxperron/rational.hpp"

namespace coxperron {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies t^i. The coefficient vector never carries a zero
/// leading entry, so the zero polynomial is the empty vector and has degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    /// c * t^k
    static Poly monomial(const Rational& c, int k);
    static Poly from_integers(std::span<const long> coeffs);
    static Poly from_integers(std::span<const Integer> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of t^i; zero beyond the degree.
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const { return eval(x); }
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(eval(x)); }

    bool has_integer_coeffs() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form such as "t^3 - 3*t - 1".
    std::string to_string(char var = 't') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// f = q*g + r with deg r < deg g. Throws PreconditionError when g is zero.
DivRem div_rem(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

inline Rational eval(const Poly& f, const Rational& x) { return f.eval(x); }

/// Monic greatest common divisor. Throws PreconditionError when both are zero.
Poly gcd(const Poly& f, const Poly& g);

/// Sylvester resultant Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots
/// alpha of f, computed with a subresultant remainder sequence.
/// Throws PreconditionError when either input is zero.
Rational resultant(const Poly& f, const Poly& g);

/// Number of sign changes in the sequence, zeros skipped.
int sign_variations(std::span<const Rational> coeffs);
inline int sign_variations(const Poly& f) { return sign_variations(f.coeffs()); }

/// 1 + max_{i<deg} |a_i| / |a_deg|; every complex root has modulus strictly
/// below it. Throws PreconditionError for constant polynomials.
Rational cauchy_bound(const Poly& f);

/// Positive rational multiple of f with coprime integer coefficients.
/// Zero maps to zero.
Poly primitive_part(const Poly& f);

/// True when f and f' share no root (deg f <= 0 counts as squarefree).
bool is_squarefree(const Poly& f);

/// Reverses the coefficient list: t^deg f * f(1/t).
Poly reversed(const Poly& f);

/// Polynomial raised to a nonnegative power.
Poly pow(const Poly& f, unsigned exp);

/// Polynomial 1 + t + ... + t^(n-1).
Poly bracket(int n);

/// Real/imaginary split re(t) + i*im(t) of a polynomial with Gaussian
/// rational coefficients.
struct ComplexSplitPoly {
    Poly re;
    Poly im;

    ComplexSplitPoly& operator+=(const ComplexSplitPoly& o);
    ComplexSplitPoly& operator*=(const Rational& c);
    friend ComplexSplitPoly operator*(const ComplexSplitPoly& a, const ComplexSplitPoly& b);
    friend ComplexSplitPoly operator+(ComplexSplitPoly a, const ComplexSplitPoly& b) { return a += b; }
    friend bool operator==(const ComplexSplitPoly&, const ComplexSplitPoly&) = default;
};

}  // namespace coxperron
