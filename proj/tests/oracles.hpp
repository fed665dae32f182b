#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code paths with the library beyond the Poly/Rational containers.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "coxperron/coxeter.hpp"
#include "coxperron/poly.hpp"

namespace oracle {

using coxperron::Integer;
using coxperron::Poly;
using coxperron::Rational;
using cplx = std::complex<long double>;

// ---------------------------------------------------------------- random

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    Rational rational(long lo, long hi, long den) { return coxperron::make_rational(uniform(lo * den, hi * den), den); }

    /// Integer polynomial of exact degree deg with coefficients in [-bound, bound].
    Poly poly(int deg, long bound) {
        std::vector<long> c(static_cast<std::size_t>(deg + 1));
        for (auto& x : c) x = uniform(-bound, bound);
        while (c.back() == 0) c.back() = uniform(-bound, bound);
        return Poly::from_integers(std::span<const long>(c));
    }

    /// Squarefree integer polynomial of degree in [1, max_deg].
    Poly squarefree_poly(int max_deg, long bound) {
        for (;;) {
            Poly f = poly(static_cast<int>(uniform(1, max_deg)), bound);
            if (coxperron::is_squarefree(f)) return f;
        }
    }
};

// ---------------------------------------------------------------- roots

inline long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

inline cplx horner(const Poly& f, cplx z) {
    cplx acc = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z + to_ld(*it);
    return acc;
}

/// Complex roots from the eigenvalues of the companion matrix, polished by
/// a few Newton steps on the original polynomial.
inline std::vector<cplx> companion_roots(const Poly& f) {
    const int d = f.degree();
    if (d < 1) return {};
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    Mat c = Mat::Zero(d, d);
    const long double lc = to_ld(f.leading());
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -to_ld(f.coeff(i)) / lc;
    Eigen::EigenSolver<Mat> es(c, false);
    const Poly df = coxperron::derivative(f);
    std::vector<cplx> out;
    for (int i = 0; i < d; ++i) {
        cplx z = es.eigenvalues()[i];
        for (int k = 0; k < 4; ++k) {
            const cplx dz = horner(df, z);
            if (std::abs(dz) == 0) break;
            const cplx step = horner(f, z) / dz;
            if (std::abs(step) > 1e-3L * (1 + std::abs(z))) break;
            z -= step;
        }
        out.push_back(z);
    }
    return out;
}

inline bool is_real(cplx z, long double tol = 1e-9L) { return std::abs(z.imag()) <= tol; }

/// Smallest distance between two of the roots (infinity for fewer than two).
inline long double min_separation(const std::vector<cplx>& roots) {
    long double best = INFINITY;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) best = std::min(best, std::abs(roots[i] - roots[j]));
    }
    return best;
}

/// Smallest |Im| over non-real roots, used to tell real from complex roots apart.
inline long double min_imag_gap(const std::vector<cplx>& roots) {
    long double best = INFINITY;
    for (const auto& z : roots) {
        if (!is_real(z)) best = std::min(best, std::abs(z.imag()));
    }
    return best;
}

// ---------------------------------------------------------------- resultant

/// det of the Sylvester matrix by Gaussian elimination over Q.
inline Rational sylvester_resultant(const Poly& f, const Poly& g) {
    const int m = f.degree();
    const int n = g.degree();
    const int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k <= m; ++k) s[r][r + k] = f.coeff(m - k);
    }
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.coeff(n - k);
    }
    Rational det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = col;
        while (pivot < size && s[pivot][col] == 0) ++pivot;
        if (pivot == size) return 0;
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (s[r][col] == 0) continue;
            const Rational factor = s[r][col] / s[col][col];
            for (int k = col; k < size; ++k) s[r][k] -= factor * s[col][k];
        }
    }
    return det;
}

// ---------------------------------------------------------------- Gaussian rationals

struct Gauss {
    Rational re;
    Rational im;

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const Gauss&, const Gauss&) = default;
};

/// f(z(t)) * (t + i)^deg f at a rational t, with z(t) = r(t - i)/(t + i).
inline Gauss circle_value(const Poly& f, const Rational& r, const Rational& t) {
    const Gauss t_minus_i{t, -1};
    const Gauss t_plus_i{t, 1};
    const Gauss z = Gauss{r, 0} * t_minus_i / t_plus_i;
    Gauss acc{0, 0};
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * z + Gauss{*it, 0};
    for (int k = 0; k < f.degree(); ++k) acc = acc * t_plus_i;
    return acc;
}

// ---------------------------------------------------------------- word growth

/// Number of group elements of each word length 0..max_length, by breadth-first
/// search over the Tits geometric representation (faithful for every Coxeter
/// group). Elements are matrices, identified after rounding.
inline std::vector<long> word_growth(const coxperron::CoxeterMatrix& m, int max_length) {
    const int k = m.rank();
    using Mat = Eigen::MatrixXd;
    Mat bilinear(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const int e = m.at(i, j);
            bilinear(i, j) = i == j ? 1.0 : (e == coxperron::kInfinity ? -1.0 : -std::cos(std::numbers::pi / e));
        }
    }
    std::vector<Mat> gens;
    for (int i = 0; i < k; ++i) {
        Mat s = Mat::Identity(k, k);
        // s_i(x) = x - 2 B(e_i, x) e_i
        s.row(i) -= 2.0 * bilinear.row(i);
        gens.push_back(s);
    }
    auto key = [&](const Mat& w) {
        std::vector<long long> out(static_cast<std::size_t>(k * k));
        for (int i = 0; i < k * k; ++i) out[static_cast<std::size_t>(i)] = std::llround(w.data()[i] * 1e4);
        return out;
    };
    std::set<std::vector<long long>> seen;
    std::vector<Mat> frontier{Mat::Identity(k, k)};
    seen.insert(key(frontier.front()));
    std::vector<long> counts{1};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Mat> next;
        for (const auto& w : frontier) {
            for (const auto& s : gens) {
                Mat ws = w * s;
                if (seen.insert(key(ws)).second) next.push_back(std::move(ws));
            }
        }
        counts.push_back(static_cast<long>(next.size()));
        frontier = std::move(next);
    }
    return counts;
}

/// Coefficients of the power series num/den up to t^len (den(0) != 0).
inline std::vector<Rational> series_divide(const Poly& num, const Poly& den, int len) {
    std::vector<Rational> out;
    for (int l = 0; l <= len; ++l) {
        Rational acc = num.coeff(l);
        for (int j = 1; j <= l; ++j) acc -= den.coeff(j) * out[static_cast<std::size_t>(l - j)];
        out.push_back(acc / den.coeff(0));
    }
    return out;
}

}  // namespace oracle
