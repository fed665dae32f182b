#include "coxperron/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "coxperron/certify.hpp"
#include "coxperron/coxeter.hpp"
#include "coxperron/diskcount.hpp"
#include "coxperron/errors.hpp"
#include "coxperron/pnfamily.hpp"
#include "coxperron/serialize.hpp"
#include "coxperron/sturm.hpp"

namespace coxperron {

namespace {

struct Options {
    int n = 1;
    std::string eps = "1e-12";
    bool json = false;
    bool text = false;
    int from = 1;
    int to = 1;
    int jobs = 1;
    std::string out_path;
    std::string matrix_path;
    int coeffs = 10;
    std::string poly_path;
    std::string a;
    std::string b;
    std::string radius;
};

Rational positive_eps(const std::string& text) {
    const Rational eps = parse_rational(text);
    if (eps <= 0) throw PreconditionError("--eps must be positive");
    return eps;
}

std::string join(const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].get_str();
    }
    return s + "]";
}

int cmd_certify(const Options& o, std::ostream& out) {
    const PerronCertificate cert = certify_pn(o.n, positive_eps(o.eps));
    if (o.json && !o.text) {
        out << certificate_to_json(cert).dump(2) << "\n";
    } else {
        out << certificate_to_text(cert);
    }
    return cert.perron ? kExitOk : kExitNotCertified;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto certs = sweep(o.from, o.to, positive_eps(o.eps), o.jobs);
    Json all = Json::array();
    for (const auto& c : certs) all.push_back(certificate_to_json(c));

    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) throw PreconditionError("cannot write '" + o.out_path + "'");
        file << all.dump(2) << "\n";
    }
    bool all_perron = true;
    for (const auto& c : certs) all_perron = all_perron && c.perron;

    if (o.json) {
        out << all.dump(2) << "\n";
    } else {
        for (const auto& c : certs) {
            out << "n=" << c.n << "  perron=" << (c.perron ? "yes" : "no") << "  real roots +" << c.positive_root_count
                << "/-" << c.negative_root_count << "  disk2=" << c.disk2_count << "  tau=" << c.tau_decimal;
            if (!c.failure.empty()) out << "  failure: " << c.failure;
            out << "\n";
        }
        for (const auto& ch : distribution_changes(certs)) {
            out << "real-root split changes at n=" << ch.n << ": (" << ch.positive_before << ", "
                << ch.negative_before << ") -> (" << ch.positive_after << ", " << ch.negative_after << ")\n";
        }
        out << (all_perron ? "all certified" : "some n NOT certified") << "\n";
    }
    return all_perron ? kExitOk : kExitNotCertified;
}

int cmd_growth(const Options& o, std::ostream& out) {
    if (o.coeffs < 0) throw PreconditionError("--coeffs must be nonnegative");
    const CoxeterMatrix m = matrix_from_json(read_json_file(o.matrix_path));
    const GrowthFunction gf = steinberg_sum(m);
    out << "P(t) = " << gf.numerator.to_string() << "\n";
    out << "D(t) = " << gf.denominator.to_string() << "\n";
    try {
        const GrowthRate rate = growth_rate(gf, positive_eps(o.eps));
        out << "growth rate = " << rate.decimal << "  in [" << to_string(rate.interval.lo) << ", "
            << to_string(rate.interval.hi) << "]" << (rate.exceeds_one ? "" : "  (not > 1)") << "\n";
    } catch (const PreconditionError& e) {
        out << "growth rate: none (" << e.what() << ")\n";
    }
    out << "coefficients = " << join(series_coefficients(gf, o.coeffs)) << "\n";
    return kExitOk;
}

int cmd_roots_interval(const Options& o, std::ostream& out) {
    const Poly f = poly_from_json(read_json_file(o.poly_path));
    out << count_real_roots(f, parse_rational(o.a), parse_rational(o.b)) << "\n";
    return kExitOk;
}

int cmd_roots_disk(const Options& o, std::ostream& out) {
    const Poly f = poly_from_json(read_json_file(o.poly_path));
    out << count_roots_in_disk(f, parse_rational(o.radius)) << "\n";
    return kExitOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
    out << matrix_to_json(build_pn(o.n).matrix).dump() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact growth functions of Coxeter systems and Perron certificates for P_n", "coxperron"};
    app.require_subcommand(1);

    auto* certify = app.add_subcommand("certify", "certify that the growth rate of P_n is a Perron number");
    certify->add_option("--n", o.n, "index n >= 1")->required();
    certify->add_option("--eps", o.eps, "width of the tau interval");
    auto* json_flag = certify->add_flag("--json", o.json, "print the certificate as JSON");
    certify->add_flag("--text", o.text, "print a readable summary (default)")->excludes(json_flag);

    auto* sweep_cmd = app.add_subcommand("sweep", "certify P_n for every n in [from, to]");
    sweep_cmd->add_option("--from", o.from, "first n")->required();
    sweep_cmd->add_option("--to", o.to, "last n")->required();
    sweep_cmd->add_option("--jobs", o.jobs, "worker threads")->envname("COXPERRON_JOBS");
    sweep_cmd->add_option("--out", o.out_path, "write the certificates as a JSON array");
    sweep_cmd->add_option("--eps", o.eps, "width of the tau intervals");
    sweep_cmd->add_flag("--json", o.json, "print the certificates as JSON");

    auto* growth = app.add_subcommand("growth", "growth function of a Coxeter matrix read from JSON");
    growth->add_option("--matrix", o.matrix_path, "matrix JSON file")->required();
    growth->add_option("--coeffs", o.coeffs, "print series coefficients a_0..a_L");
    growth->add_option("--eps", o.eps, "width of the growth-rate interval");

    auto* roots = app.add_subcommand("roots", "exact root counts of a polynomial read from JSON");
    roots->require_subcommand(1);
    auto* interval = roots->add_subcommand("interval", "distinct real roots in (a, b)");
    interval->add_option("--poly", o.poly_path, "coefficient array JSON file")->required();
    interval->add_option("--a", o.a, "left endpoint")->required();
    interval->add_option("--b", o.b, "right endpoint")->required();
    auto* disk = roots->add_subcommand("disk", "roots in the open disk |z| < R");
    disk->add_option("--poly", o.poly_path, "coefficient array JSON file")->required();
    disk->add_option("--radius", o.radius, "radius R > 0")->required();

    auto* matrix = app.add_subcommand("matrix", "print the Coxeter matrix of P_n as JSON");
    matrix->add_option("--n", o.n, "index n >= 1")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("coxperron");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*certify) return cmd_certify(o, out);
        if (*sweep_cmd) return cmd_sweep(o, out);
        if (*growth) return cmd_growth(o, out);
        if (*interval) return cmd_roots_interval(o, out);
        if (*disk) return cmd_roots_disk(o, out);
        if (*matrix) return cmd_matrix(o, out);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitNotCertified;
    }
    return kExitBadInput;
}

}  // namespace coxperron
