#pragma once

#include <string>
#include <vector>

#include "coxperron/poly.hpp"
#include "coxperron/serialize.hpp"
#include "coxperron/sturm.hpp"

namespace coxperron {

/// Sign-change data recorded alongside a certificate. Not used for the verdict.
struct SturmDiagnostics {
    SignCount w_zero = 0;
    SignCount w_plus_infinity = 0;
    SignCount w_minus_infinity = 0;
    SignCount w_two = 0;
    SignCount disk_w_plus_infinity = 0;
    SignCount disk_w_minus_infinity = 0;

    friend bool operator==(const SturmDiagnostics&, const SturmDiagnostics&) = default;
};

/// Evidence that the growth rate of P_n is a Perron number.
///
/// perron holds iff the resultant of D and D' is nonzero, deg D - 1 roots lie
/// in the open disk |z| < 2, none lie on |z| = 2, and exactly one real root
/// exceeds 2.
struct PerronCertificate {
    int n = 0;
    std::vector<Integer> d_coeffs;  ///< constant term first
    Integer resultant_value;
    int positive_root_count = 0;
    int negative_root_count = 0;
    int disk2_count = 0;
    int roots_beyond_2 = 0;
    Interval tau_interval{0, 0};
    std::string tau_decimal;
    bool perron = false;
    long long elapsed_ms = 0;
    /// "<stage>: <reason>" when perron is false.
    std::string failure;
    SturmDiagnostics diagnostics;

    /// Equality of every field except the timing.
    bool same_evidence(const PerronCertificate& o) const;
};

/// 10^-12
Rational default_tau_eps();

/// Runs the full pipeline for one n. Stage failures yield perron = false;
/// a Steinberg/closed-form mismatch throws InvariantError.
PerronCertificate certify_pn(int n, const Rational& eps = default_tau_eps());

/// One certificate per n in [from, to], ordered by n, computed on `jobs`
/// threads. Per-n errors end up in that certificate's failure field.
std::vector<PerronCertificate> sweep(int from, int to, const Rational& eps = default_tau_eps(), int jobs = 1);

/// n at which the (positive, negative) real-root split differs from n - 1.
struct DistributionChange {
    int n = 0;
    int positive_before = 0;
    int negative_before = 0;
    int positive_after = 0;
    int negative_after = 0;
};
std::vector<DistributionChange> distribution_changes(const std::vector<PerronCertificate>& certs);

/// Recomputes every count from d_coeffs alone; returns the mismatching field
/// names (empty when the certificate replays cleanly).
std::vector<std::string> replay_certificate(const PerronCertificate& cert);

Json certificate_to_json(const PerronCertificate& cert);
PerronCertificate certificate_from_json(const Json& j);

/// Multi-line human-readable summary.
std::string certificate_to_text(const PerronCertificate& cert);

}  // namespace coxperron
