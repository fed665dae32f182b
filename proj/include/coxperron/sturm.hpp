#pragma once

#include <vector>

#include "coxperron/poly.hpp"

namespace coxperron {

/// Number of sign changes in a Sturm chain evaluated somewhere.
using SignCount = int;

enum class Direction { plus, minus };

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Negated-remainder chain f_0 = f, f_1 = g, f_{i+1} ~ q_i*f_i - f_{i-1}.
///
/// Every element is kept as a primitive integer polynomial obtained from the
/// exact chain by a positive rational factor, so all sign data is preserved
/// while coefficient growth stays bounded. The last element is (a positive
/// multiple of) gcd(f, g).
class SturmSequence {
public:
    const std::vector<Poly>& chain() const { return chain_; }
    std::size_t size() const { return chain_.size(); }
    const Poly& operator[](std::size_t i) const { return chain_[i]; }

    /// Sign changes of (f_0(x), ..., f_r(x)), zeros skipped.
    SignCount sign_changes_at(const Rational& x) const;
    /// Sign changes of the leading coefficients, times (-1)^deg for minus.
    SignCount sign_changes_at_infinity(Direction dir) const;

    /// Positive rescaling of one element; sign queries are unaffected.
    SturmSequence scaled(std::size_t index, const Rational& factor) const;

private:
    friend SturmSequence build_sturm(const Poly& f, const Poly& g);
    explicit SturmSequence(std::vector<Poly> chain) : chain_(std::move(chain)) {}

    std::vector<Poly> chain_;
};

/// Requires f, g nonzero and deg f >= deg g.
SturmSequence build_sturm(const Poly& f, const Poly& g);

inline SignCount sign_changes_at(const SturmSequence& seq, const Rational& x) { return seq.sign_changes_at(x); }
inline SignCount sign_changes_at_infinity(const SturmSequence& seq, Direction dir) {
    return seq.sign_changes_at_infinity(dir);
}

/// Sign changes in a sequence of signs/values, zeros skipped.
SignCount count_sign_changes(const std::vector<int>& signs);

/// Number of distinct real roots of f in [a, b].
/// Throws EndpointRootError if f(a) == 0 or f(b) == 0.
int count_real_roots(const Poly& f, const Rational& a, const Rational& b);

/// Number of distinct real roots of f.
int count_all_real_roots(const Poly& f);

/// w(a) - w(b) for the Sturm chain of (f, g): the signed count of crossings
/// of the roots of f in [a, b]. Requires f and g to share no root.
int generalized_weight(const Poly& f, const Poly& g, const Rational& a, const Rational& b);

/// Smallest power of two that is >= cauchy_bound(f).
Rational dyadic_root_bound(const Poly& f);

/// Disjoint isolating intervals, in increasing order, one per real root.
/// f must be squarefree.
std::vector<Interval> isolate_real_roots(const Poly& f);

/// Bisects an isolating interval of a simple root down to width <= eps.
/// A degenerate [x, x] is returned when a midpoint hits the root exactly.
Interval refine_root(const Poly& f, Interval interval, const Rational& eps);

}  // namespace coxperron
