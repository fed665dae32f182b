#include "coxperron/sturm.hpp"

#include "coxperron/errors.hpp"
#include "int_poly.hpp"

namespace coxperron {

namespace {

int leading_sign(const Poly& p, Direction dir) {
    int s = sign(p.leading());
    if (dir == Direction::minus && p.degree() % 2 != 0) s = -s;
    return s;
}

struct Cell {
    Rational lo;
    Rational hi;
    SignCount w_lo;
    SignCount w_hi;
};

// Shrinks [cell.lo, cell.hi], which holds exactly one simple root, until both
// endpoints lie strictly inside the cell.
Interval shrink_into_cell(const Poly& f, const Cell& cell) {
    Rational lo = cell.lo;
    Rational hi = cell.hi;
    const int s_lo = f.sign_at(lo);
    while (lo == cell.lo || hi == cell.hi) {
        Rational mid = (lo + hi) / 2;
        int s = f.sign_at(mid);
        if (s == 0) return {mid, mid};
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

void isolate_in(const Poly& f, const SturmSequence& seq, const Cell& cell, std::vector<Interval>& out) {
    const int roots = cell.w_lo - cell.w_hi;
    if (roots <= 0) return;
    if (roots == 1) {
        out.push_back(shrink_into_cell(f, cell));
        return;
    }
    Rational split = (cell.lo + cell.hi) / 2;
    while (f.sign_at(split) == 0) split = (cell.lo + split) / 2;
    const SignCount w_split = seq.sign_changes_at(split);
    isolate_in(f, seq, {cell.lo, split, cell.w_lo, w_split}, out);
    isolate_in(f, seq, {split, cell.hi, w_split, cell.w_hi}, out);
}

}  // namespace

SignCount count_sign_changes(const std::vector<int>& signs) {
    SignCount changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

SignCount SturmSequence::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_sign_changes(signs);
}

SignCount SturmSequence::sign_changes_at_infinity(Direction dir) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(leading_sign(p, dir));
    return count_sign_changes(signs);
}

SturmSequence SturmSequence::scaled(std::size_t index, const Rational& factor) const {
    if (factor <= 0) throw PreconditionError("Sturm chain rescaling requires a positive factor");
    std::vector<Poly> chain = chain_;
    chain.at(index) *= factor;
    return SturmSequence(std::move(chain));
}

SturmSequence build_sturm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("Sturm sequence of a zero polynomial");
    if (f.degree() < g.degree()) throw PreconditionError("Sturm sequence requires deg f >= deg g");

    detail::IntPoly prev;
    detail::IntPoly cur;
    detail::split_content(f, prev);
    detail::split_content(g, cur);
    std::vector<Poly> chain{detail::to_poly(prev), detail::to_poly(cur)};

    while (detail::degree(cur) > 0) {
        // lc^(delta+1) * prev = q*cur + R, so -R * sign(lc)^(delta+1) is a
        // positive multiple of the negated remainder.
        const int exponent = detail::degree(prev) - detail::degree(cur) + 1;
        detail::IntPoly next = detail::pseudo_remainder(prev, cur);
        if (next.empty()) break;
        const bool flip = !(sign(cur.back()) < 0 && exponent % 2 == 1);
        if (flip) {
            for (auto& c : next) c = -c;
        }
        detail::make_primitive(next);
        chain.push_back(detail::to_poly(next));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return SturmSequence(std::move(chain));
}

int count_real_roots(const Poly& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw PreconditionError("root count of the zero polynomial");
    if (!(a < b)) throw PreconditionError("root count requires a < b");
    if (f.sign_at(a) == 0) throw EndpointRootError(a);
    if (f.sign_at(b) == 0) throw EndpointRootError(b);
    if (f.degree() == 0) return 0;
    SturmSequence seq = build_sturm(f, derivative(f));
    return seq.sign_changes_at(a) - seq.sign_changes_at(b);
}

int count_all_real_roots(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("root count of the zero polynomial");
    if (f.degree() == 0) return 0;
    SturmSequence seq = build_sturm(f, derivative(f));
    return seq.sign_changes_at_infinity(Direction::minus) - seq.sign_changes_at_infinity(Direction::plus);
}

int generalized_weight(const Poly& f, const Poly& g, const Rational& a, const Rational& b) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("generalized Sturm weight of a zero polynomial");
    if (!(a < b)) throw PreconditionError("generalized Sturm weight requires a < b");
    if (f.sign_at(a) == 0) throw EndpointRootError(a);
    if (f.sign_at(b) == 0) throw EndpointRootError(b);
    if (resultant(f, g) == 0) throw PreconditionError("f and g share a root (resultant is zero)");
    SturmSequence seq = build_sturm(f, g);
    return seq.sign_changes_at(a) - seq.sign_changes_at(b);
}

Rational dyadic_root_bound(const Poly& f) {
    const Rational bound = cauchy_bound(f);
    Rational p = 1;
    while (p < bound) p *= 2;
    return p;
}

std::vector<Interval> isolate_real_roots(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("root isolation of the zero polynomial");
    if (f.degree() == 0) return {};
    if (!is_squarefree(f)) throw PreconditionError("root isolation requires a squarefree polynomial");

    const SturmSequence seq = build_sturm(f, derivative(f));
    const Rational bound = dyadic_root_bound(f);
    std::vector<Interval> out;
    isolate_in(f, seq, {-bound, bound, seq.sign_changes_at(-bound), seq.sign_changes_at(bound)}, out);
    return out;
}

Interval refine_root(const Poly& f, Interval interval, const Rational& eps) {
    if (eps <= 0) throw PreconditionError("refinement width must be positive");
    if (interval.lo > interval.hi) throw PreconditionError("interval endpoints out of order");
    if (interval.lo == interval.hi) {
        if (f.sign_at(interval.lo) != 0) throw PreconditionError("degenerate interval does not hold a root");
        return interval;
    }
    const int s_lo = f.sign_at(interval.lo);
    const int s_hi = f.sign_at(interval.hi);
    if (s_lo == 0) return {interval.lo, interval.lo};
    if (s_hi == 0) return {interval.hi, interval.hi};
    if (s_lo == s_hi) throw PreconditionError("interval does not bracket a simple root (no sign change)");

    while (interval.width() > eps) {
        Rational mid = (interval.lo + interval.hi) / 2;
        int s = f.sign_at(mid);
        if (s == 0) return {mid, mid};
        if (s == s_lo) {
            interval.lo = mid;
        } else {
            interval.hi = mid;
        }
    }
    return interval;
}

}  // namespace coxperron
