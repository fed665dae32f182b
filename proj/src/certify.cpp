#include "coxperron/certify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "coxperron/coxeter.hpp"
#include "coxperron/diskcount.hpp"
#include "coxperron/errors.hpp"
#include "coxperron/pnfamily.hpp"

namespace coxperron {

namespace {

constexpr int kRadius = 2;

struct StageFailure {
    std::string stage;
    std::string reason;
};

// Stages that depend only on the denominator polynomial. Fills the count
// fields of `cert` and returns the first failure, if any.
std::optional<StageFailure> run_root_stages(const Poly& d, const Rational& eps, PerronCertificate& cert) {
    const Poly d_prime = derivative(d);
    cert.resultant_value = resultant(d, d_prime).get_num();
    if (cert.resultant_value == 0) return StageFailure{"simple-roots", "resultant(D, D') vanishes"};

    const SturmSequence seq = build_sturm(d, d_prime);
    cert.diagnostics.w_plus_infinity = seq.sign_changes_at_infinity(Direction::plus);
    cert.diagnostics.w_minus_infinity = seq.sign_changes_at_infinity(Direction::minus);
    cert.diagnostics.w_zero = seq.sign_changes_at(0);
    cert.diagnostics.w_two = seq.sign_changes_at(kRadius);

    if (d.sign_at(0) == 0) return StageFailure{"real-roots", "D(0) = 0"};
    cert.positive_root_count = cert.diagnostics.w_zero - cert.diagnostics.w_plus_infinity;
    cert.negative_root_count = cert.diagnostics.w_minus_infinity - cert.diagnostics.w_zero;

    if (d.sign_at(kRadius) == 0) return StageFailure{"circle", "D(2) = 0"};
    if (d.sign_at(-kRadius) == 0) return StageFailure{"circle", "D(-2) = 0"};
    if (has_root_on_circle(d, kRadius)) return StageFailure{"circle", "D has a root on |z| = 2"};
    const DiskCountDetail disk = count_roots_in_disk_detail(d, kRadius);
    cert.disk2_count = disk.roots_inside;
    cert.diagnostics.disk_w_plus_infinity = disk.w_plus_infinity;
    cert.diagnostics.disk_w_minus_infinity = disk.w_minus_infinity;

    const Rational upper = cauchy_bound(d) + 1;
    cert.roots_beyond_2 = count_real_roots(d, kRadius, upper);
    if (cert.roots_beyond_2 == 1) {
        cert.tau_interval = refine_root(d, {kRadius, upper}, eps);
        cert.tau_decimal = to_decimal((cert.tau_interval.lo + cert.tau_interval.hi) / 2, decimal_places_for(eps));
    }

    if (cert.disk2_count != d.degree() - 1) {
        return StageFailure{"disk", std::to_string(cert.disk2_count) + " roots in |z| < 2, expected " +
                                        std::to_string(d.degree() - 1)};
    }
    if (cert.roots_beyond_2 != 1) {
        return StageFailure{"beyond-2", std::to_string(cert.roots_beyond_2) + " real roots in (2, inf), expected 1"};
    }
    return std::nullopt;
}

}  // namespace

Rational default_tau_eps() { return make_rational(1, ipow(10, 12)); }

bool PerronCertificate::same_evidence(const PerronCertificate& o) const {
    return n == o.n && d_coeffs == o.d_coeffs && resultant_value == o.resultant_value &&
           positive_root_count == o.positive_root_count && negative_root_count == o.negative_root_count &&
           disk2_count == o.disk2_count && roots_beyond_2 == o.roots_beyond_2 && tau_interval == o.tau_interval &&
           tau_decimal == o.tau_decimal && perron == o.perron && failure == o.failure &&
           diagnostics == o.diagnostics;
}

PerronCertificate certify_pn(int n, const Rational& eps) {
    if (n < 1) throw PreconditionError("certification requires n >= 1");
    if (eps <= 0) throw PreconditionError("tau precision must be positive");
    const auto start = std::chrono::steady_clock::now();

    PerronCertificate cert;
    cert.n = n;

    const GrowthFunction gf = steinberg_sum(build_pn(n).matrix);
    if (!(gf.denominator == closed_form_dn(n)) || !(gf.numerator == closed_form_pn())) {
        throw InvariantError("Steinberg sum of P_" + std::to_string(n) + " differs from the closed form: D = " +
                             gf.denominator.to_string() + ", P = " + gf.numerator.to_string());
    }
    const Poly& d = gf.denominator;
    for (const auto& c : d.coeffs()) cert.d_coeffs.push_back(c.get_num());

    if (auto failure = run_root_stages(d, eps, cert)) {
        cert.failure = failure->stage + ": " + failure->reason;
    } else {
        cert.perron = true;
    }
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

std::vector<PerronCertificate> sweep(int from, int to, const Rational& eps, int jobs) {
    if (from < 1 || from > to) throw PreconditionError("sweep requires 1 <= from <= to");
    if (jobs < 1) throw PreconditionError("sweep requires at least one job");
    const int count = to - from + 1;
    std::vector<PerronCertificate> out(static_cast<std::size_t>(count));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            const int n = from + i;
            try {
                out[static_cast<std::size_t>(i)] = certify_pn(n, eps);
            } catch (const Error& e) {
                PerronCertificate failed;
                failed.n = n;
                failed.failure = std::string("pipeline: ") + e.what();
                out[static_cast<std::size_t>(i)] = std::move(failed);
            }
        }
    };
    const int threads = std::min(jobs, count);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return out;
}

std::vector<DistributionChange> distribution_changes(const std::vector<PerronCertificate>& certs) {
    std::vector<DistributionChange> out;
    for (std::size_t i = 1; i < certs.size(); ++i) {
        const auto& a = certs[i - 1];
        const auto& b = certs[i];
        if (a.positive_root_count != b.positive_root_count || a.negative_root_count != b.negative_root_count) {
            out.push_back({b.n, a.positive_root_count, a.negative_root_count, b.positive_root_count,
                           b.negative_root_count});
        }
    }
    return out;
}

std::vector<std::string> replay_certificate(const PerronCertificate& cert) {
    const Poly d = Poly::from_integers(std::span<const Integer>(cert.d_coeffs));
    PerronCertificate again;
    const Rational width = cert.tau_interval.width();
    const Rational eps = width > 0 ? width : default_tau_eps();
    const bool ok = !run_root_stages(d, eps, again).has_value();

    std::vector<std::string> mismatches;
    auto check = [&](bool equal, const char* field) {
        if (!equal) mismatches.emplace_back(field);
    };
    check(again.resultant_value == cert.resultant_value, "resultant");
    check(again.positive_root_count == cert.positive_root_count, "positive_roots");
    check(again.negative_root_count == cert.negative_root_count, "negative_roots");
    check(again.disk2_count == cert.disk2_count, "disk2_count");
    check(again.roots_beyond_2 == cert.roots_beyond_2, "roots_beyond_2");
    check(ok == cert.perron, "perron");
    if (cert.perron) {
        // the recorded interval must still bracket the root beyond 2
        const Interval& tau = cert.tau_interval;
        const bool brackets = tau.lo > kRadius &&
                              (tau.lo == tau.hi ? d.sign_at(tau.lo) == 0 : d.sign_at(tau.lo) * d.sign_at(tau.hi) < 0);
        check(brackets, "tau");
    }
    return mismatches;
}

Json certificate_to_json(const PerronCertificate& cert) {
    Json j;
    j["n"] = cert.n;
    Json coeffs = Json::array();
    for (const auto& c : cert.d_coeffs) coeffs.push_back(integer_to_json(c));
    j["d_coeffs"] = std::move(coeffs);
    j["resultant"] = cert.resultant_value.get_str();
    j["positive_roots"] = cert.positive_root_count;
    j["negative_roots"] = cert.negative_root_count;
    j["disk2_count"] = cert.disk2_count;
    j["roots_beyond_2"] = cert.roots_beyond_2;
    j["tau"] = Json{{"lo", to_string(cert.tau_interval.lo)},
                    {"hi", to_string(cert.tau_interval.hi)},
                    {"decimal", cert.tau_decimal}};
    j["perron"] = cert.perron;
    j["elapsed_ms"] = cert.elapsed_ms;
    if (!cert.failure.empty()) j["failure"] = cert.failure;
    const auto& dg = cert.diagnostics;
    j["diagnostics"] = Json{{"w_zero", dg.w_zero},
                            {"w_plus_infinity", dg.w_plus_infinity},
                            {"w_minus_infinity", dg.w_minus_infinity},
                            {"w_two", dg.w_two},
                            {"disk_w_plus_infinity", dg.disk_w_plus_infinity},
                            {"disk_w_minus_infinity", dg.disk_w_minus_infinity}};
    return j;
}

PerronCertificate certificate_from_json(const Json& j) {
    auto field = [&](const char* key) -> const Json& {
        if (!j.contains(key)) throw PreconditionError(std::string("certificate JSON lacks \"") + key + "\"");
        return j[key];
    };
    try {
        PerronCertificate c;
        c.n = field("n").get<int>();
        for (const auto& v : field("d_coeffs")) c.d_coeffs.push_back(integer_from_json(v));
        c.resultant_value = integer_from_json(field("resultant"));
        c.positive_root_count = field("positive_roots").get<int>();
        c.negative_root_count = field("negative_roots").get<int>();
        c.disk2_count = field("disk2_count").get<int>();
        c.roots_beyond_2 = field("roots_beyond_2").get<int>();
        const Json& tau = field("tau");
        c.tau_interval = {parse_rational(tau.at("lo").get<std::string>()), parse_rational(tau.at("hi").get<std::string>())};
        c.tau_decimal = tau.at("decimal").get<std::string>();
        c.perron = field("perron").get<bool>();
        c.elapsed_ms = field("elapsed_ms").get<long long>();
        if (j.contains("failure")) c.failure = j["failure"].get<std::string>();
        if (j.contains("diagnostics")) {
            const Json& dg = j["diagnostics"];
            c.diagnostics.w_zero = dg.at("w_zero").get<int>();
            c.diagnostics.w_plus_infinity = dg.at("w_plus_infinity").get<int>();
            c.diagnostics.w_minus_infinity = dg.at("w_minus_infinity").get<int>();
            c.diagnostics.w_two = dg.at("w_two").get<int>();
            c.diagnostics.disk_w_plus_infinity = dg.at("disk_w_plus_infinity").get<int>();
            c.diagnostics.disk_w_minus_infinity = dg.at("disk_w_minus_infinity").get<int>();
        }
        return c;
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("malformed certificate JSON: ") + e.what());
    }
}

std::string certificate_to_text(const PerronCertificate& cert) {
    std::ostringstream os;
    os << "P_" << cert.n << ": " << (cert.perron ? "Perron" : "NOT certified") << "\n";
    os << "  D(t)            = "
       << Poly::from_integers(std::span<const Integer>(cert.d_coeffs)).to_string() << "\n";
    os << "  Res(D, D')      = " << cert.resultant_value.get_str() << "\n";
    os << "  real roots      = " << cert.positive_root_count << " positive, " << cert.negative_root_count
       << " negative\n";
    os << "  roots in |z|<2  = " << cert.disk2_count << "\n";
    os << "  roots in (2,oo) = " << cert.roots_beyond_2 << "\n";
    if (!cert.tau_decimal.empty()) {
        os << "  tau             = " << cert.tau_decimal << "  in [" << to_string(cert.tau_interval.lo) << ", "
           << to_string(cert.tau_interval.hi) << "]\n";
    }
    if (!cert.failure.empty()) os << "  failure         = " << cert.failure << "\n";
    os << "  elapsed         = " << cert.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace coxperron
