#pragma once

#include <string>
#include <vector>

#include "coxperron/coxeter.hpp"
#include "coxperron/poly.hpp"

namespace coxperron {

/// Coxeter system of the polytope built from n glued copies of the ideal
/// 4-pyramid. Generators are ordered F1, F2, C1..Cn, G1..G4.
struct PnSystem {
    int n = 0;
    CoxeterMatrix matrix;

    int f_index(int i) const { return i - 1; }       // i in {1, 2}
    int c_index(int j) const { return 1 + j; }       // j in 1..n
    int g_index(int j) const { return n + 1 + j; }   // j in 1..4
};

/// Throws PreconditionError when n < 1.
PnSystem build_pn(int n);

/// Finite generator subsets of P_n grouped by type.
struct PnCensus {
    int singletons = 0;
    int pairs_a1a1 = 0;
    int pairs_a2 = 0;
    int pairs_b2 = 0;
    int triples_a1a1a1 = 0;
    int triples_b3 = 0;
    int triples_a3 = 0;
    int larger = 0;  ///< finite subsets of size >= 4
    int other = 0;   ///< subsets of size <= 3 of any unexpected type

    int pairs() const { return pairs_a1a1 + pairs_a2 + pairs_b2; }
    int triples() const { return triples_a1a1a1 + triples_b3 + triples_a3; }
    friend bool operator==(const PnCensus&, const PnCensus&) = default;
};

/// Counts the finite subsets and checks them against the closed forms
/// (n+6; n+11, 4n, 2; 8, 8, 8n-4; 0). Throws InvariantError on mismatch.
PnCensus census(const PnSystem& sys);

/// Census the closed forms predict for a given n.
PnCensus expected_census(int n);

/// t^9 - (n+3)t^8 - (n-4)t^7 + (2n-8)t^6 + (2n+8)t^5 + (2n-8)t^4
///     - (2n-11)t^3 + (3n-5)t^2 + (3n+4)t - 4(n+1)
Poly closed_form_dn(int n);

/// (t+1)^3 (t^2+1) (t^2-t+1) (t^2+t+1)
Poly closed_form_pn();

/// Phi and Psi of D_n on the circle of radius 2, as printed closed forms in n.
Poly closed_form_phi(int n);
Poly closed_form_psi(int n);

/// Sign-determining factor p(n) of the constant term of the sixth Sturm chain element d_5.
Integer lemma_p(const Integer& n);

struct AppendixCheck {
    int n = 0;
    /// computed chain element = ratio * published element, for d_0..d_3
    std::vector<Rational> ratios;
    SignCount w_zero = 0;
    SignCount w_plus_infinity = 0;
    SignCount w_minus_infinity = 0;
    SignCount w_two = 0;
};

/// Published chain elements d_0..d_3 of (D_n, D_n') evaluated at n.
std::vector<Poly> appendix_chain(int n);

/// Verifies that the computed chain of (D_n, D_n') is positively proportional
/// to the published d_0..d_3. Throws InvariantError on failure.
AppendixCheck appendix_fixture_check(int n);

}  // namespace coxperron
