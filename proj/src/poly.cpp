#include "coxperron/poly.hpp"

#include <algorithm>
#include <sstream>

#include "coxperron/errors.hpp"
#include "int_poly.hpp"

namespace coxperron {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw PreconditionError("monomial with negative exponent");
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_integers(std::span<const long> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

Poly Poly::from_integers(std::span<const Integer> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

bool Poly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || i == 0) {
            os << mag.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

DivRem div_rem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw PreconditionError("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly{}, f};
    std::vector<Rational> rem = f.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
    const auto& gc = g.coeffs();
    const Rational& lc = g.leading();
    const int dg = g.degree();
    for (int k = f.degree() - dg; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dg)] / lc;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= q * gc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly derivative(const Poly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> d(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = f.coeffs()[static_cast<std::size_t>(i)] * i;
    return Poly(std::move(d));
}

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd of two zero polynomials");
    detail::IntPoly a;
    detail::IntPoly b;
    detail::split_content(f, a);
    detail::split_content(g, b);
    if (detail::degree(a) < detail::degree(b)) std::swap(a, b);
    // primitive remainder sequence
    while (!b.empty()) {
        detail::IntPoly r = detail::pseudo_remainder(a, b);
        detail::make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    Poly out = detail::to_poly(a);
    return out * (Rational(1) / out.leading());
}

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant of a zero polynomial");
    using detail::degree;
    detail::IntPoly a;
    detail::IntPoly b;
    const Rational ca = detail::split_content(f, a);
    const Rational cb = detail::split_content(g, b);
    // Res(ca*A, cb*B) = ca^deg B * cb^deg A * Res(A, B)
    const Rational t = rpow(ca, static_cast<unsigned long>(degree(b))) * rpow(cb, static_cast<unsigned long>(degree(a)));

    int s = 1;
    if (degree(a) < degree(b)) {
        std::swap(a, b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
    }
    if (degree(b) == 0) {
        return t * s * Rational(ipow(b.back(), static_cast<unsigned long>(degree(a))));
    }

    Integer g_acc = 1;
    Integer h = 1;
    while (true) {
        const int delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
        detail::IntPoly r = detail::pseudo_remainder(a, b);
        if (r.empty()) return 0;
        a = std::move(b);
        const Integer divisor = g_acc * ipow(h, static_cast<unsigned long>(delta));
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        b = std::move(r);
        g_acc = a.back();
        // h <- g^delta / h^(delta-1)
        Integer num = ipow(g_acc, static_cast<unsigned long>(delta));
        if (delta > 1) {
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        } else if (delta == 0) {
            // h^(1-0) * g^0 = h
            num = h;
        }
        h = num;
        if (degree(b) <= 0) break;
    }
    // h <- lc(B)^deg A / h^(deg A - 1)
    const int da = degree(a);
    Integer res = ipow(b.back(), static_cast<unsigned long>(da));
    if (da > 1) {
        Integer den = ipow(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(res.get_mpz_t(), res.get_mpz_t(), den.get_mpz_t());
    } else if (da == 0) {
        res = h;
    }
    return t * s * Rational(res);
}

int sign_variations(std::span<const Rational> coeffs) {
    int count = 0;
    int prev = 0;
    for (const auto& c : coeffs) {
        int s = sign(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Rational cauchy_bound(const Poly& f) {
    if (f.degree() < 1) throw PreconditionError("Cauchy bound of a constant polynomial");
    Rational m = 0;
    for (int i = 0; i < f.degree(); ++i) m = std::max<Rational>(m, abs(f.coeffs()[static_cast<std::size_t>(i)]));
    return 1 + m / abs(f.leading());
}

Poly primitive_part(const Poly& f) {
    detail::IntPoly p;
    detail::split_content(f, p);
    return detail::to_poly(p);
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return true;
    return resultant(f, derivative(f)) != 0;
}

Poly reversed(const Poly& f) {
    std::vector<Rational> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(std::move(v));
}

Poly pow(const Poly& f, unsigned exp) {
    Poly result = Poly::constant(1);
    Poly base = f;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        exp >>= 1u;
        if (exp > 0) base *= base;
    }
    return result;
}

Poly bracket(int n) {
    if (n < 1) throw PreconditionError("bracket [n] requires n >= 1");
    return Poly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

ComplexSplitPoly& ComplexSplitPoly::operator+=(const ComplexSplitPoly& o) {
    re += o.re;
    im += o.im;
    return *this;
}

ComplexSplitPoly& ComplexSplitPoly::operator*=(const Rational& c) {
    re *= c;
    im *= c;
    return *this;
}

ComplexSplitPoly operator*(const ComplexSplitPoly& a, const ComplexSplitPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

namespace detail {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntPoly& p) {
    Integer g = content(p);
    if (g <= 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw PreconditionError("pseudo-division by zero");
    IntPoly r = a;
    const int db = degree(b);
    if (degree(r) < db) {
        return r;
    }
    const Integer& lc = b.back();
    int e = degree(a) - db + 1;
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        Integer lead = r.back();
        for (auto& c : r) c *= lc;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= lead * b[static_cast<std::size_t>(j)];
        trim(r);
        --e;
    }
    // scale so the identity uses exactly lc^(deg a - deg b + 1)
    if (e > 0) {
        Integer f = ipow(lc, static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

Rational split_content(const Poly& f, IntPoly& out) {
    out.clear();
    if (f.is_zero()) return 1;
    Integer lcm_den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.emplace_back(c.get_num() * (lcm_den / c.get_den()));
    Integer g = content(out);
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return make_rational(g, lcm_den);
}

Poly to_poly(const IntPoly& p) { return Poly::from_integers(std::span<const Integer>(p)); }

}  // namespace detail

}  // namespace coxperron
