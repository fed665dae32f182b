#include "coxperron/coxeter.hpp"

#include <algorithm>
#include <map>

#include "coxperron/errors.hpp"

namespace coxperron {

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries, std::vector<std::string> labels)
    : entries_(std::move(entries)), labels_(std::move(labels)) {
    const std::size_t k = entries_.size();
    if (k == 0) throw PreconditionError("Coxeter matrix must have rank at least 1");
    for (std::size_t i = 0; i < k; ++i) {
        if (entries_[i].size() != k) throw PreconditionError("Coxeter matrix must be square");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (entries_[i][i] != 1) throw PreconditionError("Coxeter matrix diagonal entries must be 1");
        for (std::size_t j = 0; j < k; ++j) {
            if (entries_[i][j] != entries_[j][i]) throw PreconditionError("Coxeter matrix must be symmetric");
            if (i != j && entries_[i][j] != kInfinity && entries_[i][j] < 2) {
                throw PreconditionError("off-diagonal Coxeter matrix entries must be >= 2 or infinity");
            }
        }
    }
    if (labels_.empty()) {
        for (std::size_t i = 0; i < k; ++i) labels_.push_back("s" + std::to_string(i + 1));
    } else if (labels_.size() != k) {
        throw PreconditionError("Coxeter matrix label count does not match its rank");
    }
}

CoxeterMatrix CoxeterMatrix::submatrix(std::span<const int> generators) const {
    std::vector<std::vector<int>> sub;
    std::vector<std::string> names;
    for (int i : generators) {
        if (i < 0 || i >= rank()) throw PreconditionError("generator index out of range");
    }
    for (int i : generators) {
        std::vector<int> row;
        for (int j : generators) row.push_back(at(i, j));
        sub.push_back(std::move(row));
        names.push_back(labels_.at(static_cast<std::size_t>(i)));
    }
    return CoxeterMatrix(std::move(sub), std::move(names));
}

FiniteType FiniteType::make(Family family, int param) {
    auto bad = [&] { throw PreconditionError("invalid finite Coxeter type parameter " + std::to_string(param)); };
    switch (family) {
        case Family::A: if (param < 1) bad(); break;
        case Family::B: if (param < 2) bad(); break;
        case Family::D: if (param < 4) bad(); break;
        case Family::E: if (param < 6 || param > 8) bad(); break;
        case Family::F: if (param != 4) bad(); break;
        case Family::H: if (param < 3 || param > 4) bad(); break;
        case Family::I:
            if (param < 3) bad();
            if (param == 3) return {Family::A, 2};
            if (param == 4) return {Family::B, 2};
            break;
    }
    return {family, param};
}

std::string FiniteType::to_string() const {
    static constexpr char names[] = {'A', 'B', 'D', 'E', 'F', 'H', 'I'};
    std::string s(1, names[static_cast<int>(family)]);
    if (family == Family::I) return s + "2(" + std::to_string(param) + ")";
    return s + std::to_string(param);
}

namespace {

struct Edge {
    int u;
    int v;
    int label;
};

// Irreducible finite type of a connected diagram on local vertices 0..k-1.
std::optional<FiniteType> classify_connected(int k, const std::vector<Edge>& edges) {
    if (k == 1) return FiniteType::make(Family::A, 1);
    if (static_cast<int>(edges.size()) != k - 1) return std::nullopt;  // has a cycle
    if (k == 2) return FiniteType::make(Family::I, edges.front().label);

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    std::vector<const Edge*> labeled;
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        if (e.label >= 4) labeled.push_back(&e);
    }
    int max_degree = 0;
    int branch = -1;
    int branch_count = 0;
    for (int v = 0; v < k; ++v) {
        const int d = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        max_degree = std::max(max_degree, d);
        if (d >= 3) {
            branch = v;
            ++branch_count;
        }
    }

    if (labeled.empty()) {
        if (max_degree <= 2) return FiniteType::make(Family::A, k);
        if (max_degree > 3 || branch_count != 1) return std::nullopt;
        std::vector<int> arms;
        for (int start : adj[static_cast<std::size_t>(branch)]) {
            int len = 1;
            int prev = branch;
            int cur = start;
            while (adj[static_cast<std::size_t>(cur)].size() == 2) {
                const auto& nb = adj[static_cast<std::size_t>(cur)];
                const int next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return FiniteType::make(Family::D, k);
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return FiniteType::make(Family::E, k);
        return std::nullopt;
    }

    if (labeled.size() > 1 || max_degree > 2) return std::nullopt;
    const Edge& e = *labeled.front();
    const bool at_end = adj[static_cast<std::size_t>(e.u)].size() == 1 || adj[static_cast<std::size_t>(e.v)].size() == 1;
    if (e.label == 4) {
        if (at_end) return FiniteType::make(Family::B, k);
        if (k == 4) return FiniteType::make(Family::F, 4);
        return std::nullopt;
    }
    if (e.label == 5 && at_end && (k == 3 || k == 4)) return FiniteType::make(Family::H, k);
    return std::nullopt;
}

}  // namespace

std::optional<FiniteDecomposition> classify_finite(const CoxeterMatrix& m, std::span<const int> generators) {
    const int k = static_cast<int>(generators.size());
    for (int g : generators) {
        if (g < 0 || g >= m.rank()) throw PreconditionError("generator index out of range");
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (m.is_infinite(generators[static_cast<std::size_t>(a)], generators[static_cast<std::size_t>(b)])) {
                return std::nullopt;
            }
        }
    }

    // connected components of the diagram (edges where m_ij >= 3)
    std::vector<int> component(static_cast<std::size_t>(k), -1);
    int components = 0;
    for (int s = 0; s < k; ++s) {
        if (component[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        component[static_cast<std::size_t>(s)] = components;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < k; ++v) {
                if (component[static_cast<std::size_t>(v)] >= 0) continue;
                if (m.at(generators[static_cast<std::size_t>(u)], generators[static_cast<std::size_t>(v)]) >= 3) {
                    component[static_cast<std::size_t>(v)] = components;
                    stack.push_back(v);
                }
            }
        }
        ++components;
    }

    FiniteDecomposition result;
    for (int c = 0; c < components; ++c) {
        std::vector<int> local;  // positions within `generators`
        for (int v = 0; v < k; ++v) {
            if (component[static_cast<std::size_t>(v)] == c) local.push_back(v);
        }
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < local.size(); ++a) {
            for (std::size_t b = a + 1; b < local.size(); ++b) {
                const int label = m.at(generators[static_cast<std::size_t>(local[a])],
                                       generators[static_cast<std::size_t>(local[b])]);
                if (label >= 3) edges.push_back({static_cast<int>(a), static_cast<int>(b), label});
            }
        }
        auto type = classify_connected(static_cast<int>(local.size()), edges);
        if (!type) return std::nullopt;
        result.push_back(*type);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<FiniteDecomposition> classify_finite(const CoxeterMatrix& m) {
    std::vector<int> all(static_cast<std::size_t>(m.rank()));
    for (int i = 0; i < m.rank(); ++i) all[static_cast<std::size_t>(i)] = i;
    return classify_finite(m, all);
}

std::vector<int> exponents(const FiniteType& type) {
    const int n = type.param;
    std::vector<int> e;
    switch (type.family) {
        case Family::A:
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            break;
        case Family::E:
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case Family::F: e = {1, 5, 7, 11}; break;
        case Family::H:
            if (n == 3) e = {1, 5, 9};
            if (n == 4) e = {1, 11, 19, 29};
            break;
        case Family::I: e = {1, n - 1}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

Poly solomon_series(std::span<const FiniteType> components) {
    Poly out = Poly::constant(1);
    for (const auto& c : components) {
        for (int e : exponents(c)) out *= bracket(e + 1);
    }
    return out;
}

void for_each_finite_subset(const CoxeterMatrix& m, const std::function<void(const FiniteSubset&)>& visit) {
    std::vector<FiniteSubset> layer{{{}, {}}};
    while (!layer.empty()) {
        std::vector<FiniteSubset> next;
        for (const auto& subset : layer) {
            visit(subset);
            const int start = subset.generators.empty() ? 0 : subset.generators.back() + 1;
            for (int j = start; j < m.rank(); ++j) {
                bool blocked = false;
                for (int i : subset.generators) {
                    if (m.is_infinite(i, j)) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) continue;
                std::vector<int> gens = subset.generators;
                gens.push_back(j);
                if (auto types = classify_finite(m, gens)) next.push_back({std::move(gens), std::move(*types)});
            }
        }
        layer = std::move(next);
    }
}

std::vector<FiniteSubset> enumerate_finite_subsets(const CoxeterMatrix& m) {
    std::vector<FiniteSubset> out;
    for_each_finite_subset(m, [&](const FiniteSubset& s) { out.push_back(s); });
    return out;
}

GrowthFunction normalize_growth(Poly numerator, Poly denominator) {
    if (denominator.is_zero()) throw PreconditionError("growth function with zero denominator");
    const Poly common = gcd(numerator, denominator);
    if (common.degree() > 0) {
        numerator = div_rem(numerator, common).quotient;
        denominator = div_rem(denominator, common).quotient;
    }
    const Poly prim = primitive_part(denominator);
    Rational scale = prim.leading() / denominator.leading();
    if (prim.leading() < 0) scale = -scale;
    return {numerator * scale, denominator * scale};
}

GrowthFunction steinberg_sum(const CoxeterMatrix& m) {
    // group the subsets by type so each distinct f_I(t) is added once
    std::map<FiniteDecomposition, long> weights;
    for_each_finite_subset(m, [&](const FiniteSubset& s) {
        weights[s.types] += (s.generators.size() % 2 == 0) ? 1 : -1;
    });

    Poly num;  // running sum num/den
    Poly den = Poly::constant(1);
    for (const auto& [types, weight] : weights) {
        if (weight == 0) continue;
        const Poly f_i = solomon_series(types);
        const Poly g = gcd(den, f_i);
        const Poly den_part = div_rem(den, g).quotient;
        const Poly f_part = div_rem(f_i, g).quotient;
        num = num * f_part + Poly::constant(weight) * den_part;
        den = den * f_part;
        if (!num.is_zero()) {
            const Poly h = gcd(num, den);
            if (h.degree() > 0) {
                num = div_rem(num, h).quotient;
                den = div_rem(den, h).quotient;
            }
        }
    }
    if (num.is_zero()) throw PreconditionError("Steinberg sum vanishes identically");
    // 1/f(1/t) = num/den
    return normalize_growth(den, num);
}

std::vector<Integer> series_coefficients(const GrowthFunction& gf, int max_length) {
    if (max_length < 0) throw PreconditionError("series length must be nonnegative");
    const int p = gf.numerator.degree();
    const int q = gf.denominator.degree();
    if (gf.numerator.is_zero()) return std::vector<Integer>(static_cast<std::size_t>(max_length) + 1, 0);
    const int shift = q - p;
    if (shift < 0) throw InvariantError("growth function has a pole at t = 0");

    // f(u) = u^(q-p) * rev(P)(u) / rev(D)(u)
    const Poly num = reversed(gf.numerator);
    const Poly den = reversed(gf.denominator);
    const int terms = max_length + 1;
    std::vector<Rational> quotient(static_cast<std::size_t>(terms));
    for (int k = 0; k + shift < terms; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeff(j) * quotient[static_cast<std::size_t>(k - j)];
        quotient[static_cast<std::size_t>(k)] = acc / den.coeff(0);
    }
    std::vector<Integer> out(static_cast<std::size_t>(terms), 0);
    for (int l = shift; l < terms; ++l) {
        const Rational& c = quotient[static_cast<std::size_t>(l - shift)];
        if (!is_integer(c) || c < 0) {
            throw InvariantError("growth series coefficient a_" + std::to_string(l) + " = " + to_string(c) +
                                 " is not a nonnegative integer");
        }
        out[static_cast<std::size_t>(l)] = c.get_num();
    }
    return out;
}

int decimal_places_for(const Rational& eps) {
    if (eps <= 0) throw PreconditionError("precision must be positive");
    int k = 0;
    Rational step = 1;
    while (step > eps) {
        step /= 10;
        ++k;
    }
    return k;
}

GrowthRate growth_rate(const GrowthFunction& gf, const Rational& eps) {
    const Poly& d = gf.denominator;
    if (d.degree() < 1) throw PreconditionError("growth rate needs a nonconstant denominator");
    const int places = decimal_places_for(eps);

    Poly squarefree = d;
    const Poly common = gcd(d, derivative(d));
    if (common.degree() > 0) squarefree = div_rem(d, common).quotient;

    const auto intervals = isolate_real_roots(squarefree);
    if (intervals.empty()) throw PreconditionError("denominator has no real root");

    GrowthRate out;
    out.interval = refine_root(squarefree, intervals.back(), eps);
    out.decimal = to_decimal((out.interval.lo + out.interval.hi) / 2, places);

    const Rational one = 1;
    Poly beyond = squarefree;
    if (beyond.sign_at(one) == 0) beyond = div_rem(beyond, Poly{-1, 1}).quotient;
    if (beyond.degree() >= 1) {
        const Rational bound = dyadic_root_bound(beyond) + 1;
        out.exceeds_one = count_real_roots(beyond, one, bound) > 0;
    }
    return out;
}

}  // namespace coxperron
