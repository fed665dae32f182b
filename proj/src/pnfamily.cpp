#include "coxperron/pnfamily.hpp"

#include <array>
#include <cstdlib>

#include "coxperron/errors.hpp"
#include "coxperron/sturm.hpp"

namespace coxperron {

PnSystem build_pn(int n) {
    if (n < 1) throw PreconditionError("P_n requires n >= 1");
    const int rank = n + 6;
    std::vector<std::vector<int>> m(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), kInfinity));
    auto set = [&](int i, int j, int v) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    };
    PnSystem sys{n, CoxeterMatrix{{1}}};
    for (int i = 0; i < rank; ++i) set(i, i, 1);

    for (int j = 1; j < n; ++j) set(sys.c_index(j), sys.c_index(j + 1), 2);
    for (int f = 1; f <= 2; ++f) {
        for (int g = 1; g <= 4; ++g) set(sys.f_index(f), sys.g_index(g), 2);
    }
    for (int g = 1; g <= 4; ++g) {
        set(sys.g_index(g), sys.g_index(g % 4 + 1), 2);
        for (int j = 1; j <= n; ++j) set(sys.g_index(g), sys.c_index(j), 3);
    }
    set(sys.f_index(1), sys.c_index(1), 4);
    set(sys.f_index(2), sys.c_index(n), 4);
    // all remaining pairs stay infinite: F1-F2, G_i-G_{i+2}, far C's, F-C away from the ends

    std::vector<std::string> labels{"F1", "F2"};
    for (int j = 1; j <= n; ++j) labels.push_back("C" + std::to_string(j));
    for (int g = 1; g <= 4; ++g) labels.push_back("G" + std::to_string(g));
    sys.matrix = CoxeterMatrix(std::move(m), std::move(labels));
    return sys;
}

PnCensus expected_census(int n) {
    PnCensus c;
    c.singletons = n + 6;
    c.pairs_a1a1 = n + 11;
    c.pairs_a2 = 4 * n;
    c.pairs_b2 = 2;
    c.triples_a1a1a1 = 8;
    c.triples_b3 = 8;
    c.triples_a3 = 8 * n - 4;
    return c;
}

PnCensus census(const PnSystem& sys) {
    const FiniteType a1 = FiniteType::make(Family::A, 1);
    const FiniteDecomposition a1a1{a1, a1};
    const FiniteDecomposition a1a1a1{a1, a1, a1};
    const FiniteDecomposition a2{FiniteType::make(Family::A, 2)};
    const FiniteDecomposition b2{FiniteType::make(Family::B, 2)};
    const FiniteDecomposition b3{FiniteType::make(Family::B, 3)};
    const FiniteDecomposition a3{FiniteType::make(Family::A, 3)};

    PnCensus c;
    for_each_finite_subset(sys.matrix, [&](const FiniteSubset& s) {
        switch (s.generators.size()) {
            case 0: break;
            case 1: ++c.singletons; break;
            case 2:
                if (s.types == a1a1) ++c.pairs_a1a1;
                else if (s.types == a2) ++c.pairs_a2;
                else if (s.types == b2) ++c.pairs_b2;
                else ++c.other;
                break;
            case 3:
                if (s.types == a1a1a1) ++c.triples_a1a1a1;
                else if (s.types == b3) ++c.triples_b3;
                else if (s.types == a3) ++c.triples_a3;
                else ++c.other;
                break;
            default: ++c.larger; break;
        }
    });
    if (!(c == expected_census(sys.n))) {
        throw InvariantError("P_" + std::to_string(sys.n) + " census does not match the closed forms");
    }
    return c;
}

Poly closed_form_dn(int n) {
    const long k = n;
    const std::array<long, 10> c{-4 * (k + 1), 3 * k + 4, 3 * k - 5, -(2 * k - 11), 2 * k - 8,
                                 2 * k + 8,    2 * k - 8, -(k - 4), -(k + 3),      1};
    return Poly::from_integers(std::span<const long>(c));
}

Poly closed_form_pn() {
    const Poly t_plus_1{1, 1};
    return pow(t_plus_1, 3) * Poly{1, 0, 1} * Poly{1, -1, 1} * Poly{1, 1, 1};
}

Poly closed_form_phi(int n) {
    const long k = n;
    std::array<long, 10> c{};
    c[9] = -(162 * k + 56);
    c[7] = 6456 * k - 6512;
    c[5] = -(2476 * k - 49792);
    c[3] = -(7176 * k + 60048);
    c[1] = 894 * k + 13752;
    return Poly::from_integers(std::span<const long>(c));
}

Poly closed_form_psi(int n) {
    const long k = n;
    std::array<long, 9> c{};
    c[8] = 2034 * k - 456;
    c[6] = -(8280 * k - 24880);
    c[4] = -(7188 * k + 67136);
    c[2] = 4136 * k + 36816;
    c[0] = -(14 * k + 2808);
    return Poly::from_integers(std::span<const long>(c));
}

namespace {

// Polynomial in n given lowest power first.
Integer eval_in_n(std::span<const long> coeffs, const Integer& n) {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

// Chain element whose t^i coefficient is a polynomial in n; rows run from the
// constant term upward in t.
template <std::size_t Rows, std::size_t Cols>
Poly chain_element(const std::array<std::array<long, Cols>, Rows>& rows, int n, const Rational& scale) {
    std::vector<Rational> coeffs;
    for (const auto& row : rows) coeffs.emplace_back(eval_in_n(row, n));
    return Poly(std::move(coeffs)) * scale;
}

// Sturm chain element d_2 of (D_n, D_n'), times 81.
constexpr std::array<std::array<long, 3>, 8> kD2{{
    {312, 311, -3},
    {-258, -224, -6},
    {216, -204, 6},
    {-498, 116, -8},
    {240, -160, -10},
    {-144, -60, -12},
    {132, -61, 7},
    {0, 66, 8},
}};

// d_3 times 4n^2(4n+33)^2 / 81.
constexpr std::array<std::array<long, 5>, 7> kD3{{
    {-4576, -8548, -7161, -3428, -259},
    {3784, 8870, 8540, 2508, 162},
    {-3168, -1660, -3216, 1374, 150},
    {7304, 6246, 3866, -776, -88},
    {-3520, -4372, -1872, 470, 54},
    {2112, 4480, 3956, 612, 36},
    {-1936, -1848, -2673, 266, 39},
}};

// Positive rational c with a == c * b, if one exists.
std::optional<Rational> positive_ratio(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree() || a.is_zero()) return std::nullopt;
    const Rational c = a.leading() / b.leading();
    if (c <= 0 || !(a == b * c)) return std::nullopt;
    return c;
}

}  // namespace

Integer lemma_p(const Integer& n) {
    constexpr std::array<long, 9> p{-45088, -1476508, 1122697, 899112, 2017855, 2420092, -1607896, 20600, 13008};
    return eval_in_n(p, n);
}

std::vector<Poly> appendix_chain(int n) {
    if (n < 1) throw PreconditionError("appendix fixtures require n >= 1");
    const Poly d0 = closed_form_dn(n);
    const Integer nn = n;
    const Integer four_n_33 = 4 * nn + 33;
    const Rational d3_scale = make_rational(81, 4 * nn * nn * four_n_33 * four_n_33);
    return {d0, derivative(d0), chain_element(kD2, n, Rational(1, 81)), chain_element(kD3, n, d3_scale)};
}

AppendixCheck appendix_fixture_check(int n) {
    const auto published = appendix_chain(n);
    const Poly d = closed_form_dn(n);
    const SturmSequence seq = build_sturm(d, derivative(d));
    if (seq.size() < published.size()) {
        throw InvariantError("Sturm chain of D_" + std::to_string(n) + " is shorter than the published one");
    }
    AppendixCheck out;
    out.n = n;
    for (std::size_t k = 0; k < published.size(); ++k) {
        auto ratio = positive_ratio(seq[k], published[k]);
        if (!ratio) {
            throw InvariantError("chain element d_" + std::to_string(k) + " of D_" + std::to_string(n) +
                                 " is not a positive multiple of the published one");
        }
        out.ratios.push_back(*ratio);
    }
    out.w_zero = seq.sign_changes_at(0);
    out.w_plus_infinity = seq.sign_changes_at_infinity(Direction::plus);
    out.w_minus_infinity = seq.sign_changes_at_infinity(Direction::minus);
    out.w_two = seq.sign_changes_at(2);
    return out;
}

}  // namespace coxperron
