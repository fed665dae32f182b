#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxperron/poly.hpp"
#include "coxperron/sturm.hpp"

namespace coxperron {

/// Matrix entry standing for m_ij = infinity (no relation between s_i, s_j).
inline constexpr int kInfinity = 0;

/// Symmetric Coxeter matrix: m_ii = 1, m_ij >= 2 or kInfinity off the diagonal.
class CoxeterMatrix {
public:
    /// Throws PreconditionError when the entries violate the invariants.
    explicit CoxeterMatrix(std::vector<std::vector<int>> entries, std::vector<std::string> labels = {});
    CoxeterMatrix(std::initializer_list<std::initializer_list<int>> rows, std::vector<std::string> labels = {})
        : CoxeterMatrix(std::vector<std::vector<int>>(rows.begin(), rows.end()), std::move(labels)) {}

    int rank() const { return static_cast<int>(entries_.size()); }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool is_infinite(int i, int j) const { return at(i, j) == kInfinity; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

    /// Generator names; defaults to "s1", "s2", ...
    const std::vector<std::string>& labels() const { return labels_; }

    CoxeterMatrix submatrix(std::span<const int> generators) const;

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    std::vector<std::vector<int>> entries_;
    std::vector<std::string> labels_;
};

enum class Family { A, B, D, E, F, H, I };

/// Irreducible finite Coxeter type. For the I family `param` is the dihedral
/// label m (rank 2); for the others it is the rank.
struct FiniteType {
    Family family = Family::A;
    int param = 1;

    /// Validates the parameter range; I2(3) becomes A2 and I2(4) becomes B2.
    static FiniteType make(Family family, int param);

    int rank() const { return family == Family::I ? 2 : param; }
    std::string to_string() const;

    friend auto operator<=>(const FiniteType&, const FiniteType&) = default;
};

/// Sorted multiset of irreducible components.
using FiniteDecomposition = std::vector<FiniteType>;

/// Decomposition of the whole matrix, or nullopt when the group is infinite.
std::optional<FiniteDecomposition> classify_finite(const CoxeterMatrix& m);
/// Same, for the parabolic subgroup generated by `generators`.
std::optional<FiniteDecomposition> classify_finite(const CoxeterMatrix& m, std::span<const int> generators);

/// Exponents m_1, ..., m_p of an irreducible finite type.
std::vector<int> exponents(const FiniteType& type);

/// Growth polynomial prod over components of prod_i [m_i + 1]; 1 for no components.
Poly solomon_series(std::span<const FiniteType> components);

struct FiniteSubset {
    std::vector<int> generators;
    FiniteDecomposition types;
};

/// Visits every generator subset spanning a finite subgroup (the empty set
/// included), in order of increasing size. Only finite subsets are extended.
void for_each_finite_subset(const CoxeterMatrix& m, const std::function<void(const FiniteSubset&)>& visit);
std::vector<FiniteSubset> enumerate_finite_subsets(const CoxeterMatrix& m);

/// f_S(t^{-1}) = numerator(t) / denominator(t) in lowest terms; the
/// denominator has coprime integer coefficients and positive leading term.
struct GrowthFunction {
    Poly numerator;
    Poly denominator;

    friend bool operator==(const GrowthFunction&, const GrowthFunction&) = default;
};

/// Sum over finite subsets I of (-1)^|I| / f_I(t), inverted and normalized.
GrowthFunction steinberg_sum(const CoxeterMatrix& m);

/// Reduces and normalizes numerator/denominator as GrowthFunction requires.
GrowthFunction normalize_growth(Poly numerator, Poly denominator);

/// a_0, ..., a_L of the growth series f_S(t).
/// Throws InvariantError if a coefficient is not a nonnegative integer.
std::vector<Integer> series_coefficients(const GrowthFunction& gf, int max_length);

struct GrowthRate {
    Interval interval;      ///< isolates the largest real root of the denominator
    std::string decimal;    ///< midpoint rendered to the precision of eps
    bool exceeds_one = false;
};

/// Largest real root of the denominator, refined to width <= eps.
/// Throws PreconditionError if the denominator is constant or has no real root.
GrowthRate growth_rate(const GrowthFunction& gf, const Rational& eps);

/// Number of decimal places k with 10^-k <= eps.
int decimal_places_for(const Rational& eps);

}  // namespace coxperron
