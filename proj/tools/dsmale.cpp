// dsmale: command-line front end for the certificate checks, the torus scan and
// polynomial metrics.  Exit status 0 = pass, 1 = a check failed, 2 = bad usage
// or input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dsmale/certificate.hpp"
#include "dsmale/error.hpp"
#include "dsmale/io.hpp"
#include "dsmale/optimizer.hpp"
#include "dsmale/smale_metrics.hpp"

namespace {

using dsmale::Json;

constexpr std::uint64_t kDefaultSeed = 20240607;

struct Common {
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw dsmale::UsageError("cannot write " + path);
    f << content;
}

void emit(const Common& c, const Json& report) {
    const std::string text = c.format == "text" ? dsmale::to_text(report) : report.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << text;
    } else {
        write_file(c.out, text);
    }
}

bool scan_pass(const dsmale::ScanResult& s) {
    const double target = 1.0 / 49.0;
    bool ok = s.grid_min_value >= target - 1e-12;
    if (s.refined) ok = ok && std::abs(s.min_value - target) <= 1e-10 && s.orbits.size() == 3;
    return ok;
}

std::string read_poly_source(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) {
        std::string t = inline_text;
        for (char& ch : t)
            if (ch == ';') ch = '\n';
        return t;
    }
    std::ifstream f(path);
    if (!f) throw dsmale::InputParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

dsmale::ExactComplex parse_exact_complex(const std::string& re, const std::string& im) {
    try {
        return {dsmale::QSqrt3(dsmale::parse_rational(re)), dsmale::QSqrt3(dsmale::parse_rational(im))};
    } catch (const dsmale::Error& e) {
        throw dsmale::UsageError(std::string("bad scale a: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual Smale problem: certificate checks, torus scan and polynomial metrics"};
    app.require_subcommand(1);

    Common cert_c, lemma_c, scan_c, metrics_c, ext_c, sample_c, all_c;

    auto* cert = app.add_subcommand("verify-certificate", "exact identity check, equality cases and numeric oracles");
    add_common(cert, cert_c);
    int cert_samples = 1000;
    std::string residual_out;
    cert->add_option("--samples", cert_samples, "random tuples for the positivity check")->capture_default_str();
    cert->add_option("--residual-out", residual_out, "dump the identity residual here if nonzero");

    auto* lemma = app.add_subcommand("verify-lemma", "four-variable expansion and the h -> h2 chain");
    add_common(lemma, lemma_c);
    int lemma_samples = 1000;
    lemma->add_option("--samples", lemma_samples, "exact spot checks of the h2 summands")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "grid scan of S^2 over the 5-torus");
    add_common(scan, scan_c);
    int grid = 48;
    bool do_refine = false;
    double scan_tol = 1e-12;
    std::string csv;
    scan->add_option("--grid", grid, "points per axis (>= 8)")->capture_default_str();
    scan->add_flag("--refine", do_refine, "refine every grid-local minimum");
    scan->add_option("--tol", scan_tol, "refinement step tolerance")->capture_default_str();
    scan->add_option("--csv", csv, "write grid-local minima as CSV");

    auto* met = app.add_subcommand("metrics", "T, S, alpha and Lambda of a polynomial");
    add_common(met, metrics_c);
    std::string poly_path, poly_inline;
    double met_tol = 1e-12;
    auto* poly_opt = met->add_option("--poly", poly_path, "coefficient file, constant term first");
    met->add_option("--coeffs", poly_inline, "inline coefficients, lines separated by ';'")->excludes(poly_opt);
    met->add_option("--tol", met_tol, "root clustering tolerance")->capture_default_str();

    auto* ext = app.add_subcommand("extremal", "exact metrics of the extremal polynomials");
    add_common(ext, ext_c);
    std::string a_re = "1", a_im = "0";
    ext->add_option("--a-re", a_re, "real part of the scale a (integer or p/q)")->capture_default_str();
    ext->add_option("--a-im", a_im, "imaginary part of a")->capture_default_str();

    auto* sample = app.add_subcommand("sample-check", "random checks over the polynomial classes");
    add_common(sample, sample_c);
    int sample_n = 0, samples = 10000, pairs = 1000, disc_samples = 100000;
    sample->add_option("--n", sample_n, "degree 2..7 (default: all)");
    sample->add_option("--samples", samples, "random polynomials per degree")->capture_default_str();
    sample->add_option("--pairs", pairs, "random (f, z) pairs per degree for the distortion bound")->capture_default_str();
    sample->add_option("--disc-samples", disc_samples, "random 4-tuples in the closed unit disc")->capture_default_str();

    auto* all = app.add_subcommand("verify-all", "lemma, identity, equality cases, 24-point scan, 1000-sample check");
    add_common(all, all_c);
    int all_grid = 24, all_samples = 1000;
    all->add_option("--grid", all_grid, "points per axis for the scan")->capture_default_str();
    all->add_option("--samples", all_samples, "random polynomials per degree")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cert) {
            const auto id = dsmale::verify_identity_id1(cert_c.seed);
            const auto eq = dsmale::verify_equality_cases(dsmale::build_g(), cert_c.seed, cert_samples);
            const auto orc = dsmale::run_numeric_oracles(cert_c.seed);
            if (!residual_out.empty() && !id.residual_dump.empty()) write_file(residual_out, id.residual_dump);
            const bool ok = id.pass && eq.pass && orc.pass;
            emit(cert_c, dsmale::make_report("verify-certificate", {{"pass", ok},
                                                                     {"identity", dsmale::to_json(id)},
                                                                     {"equality", dsmale::to_json(eq)},
                                                                     {"oracles", dsmale::to_json(orc)}}));
            return ok ? 0 : 1;
        }
        if (*lemma) {
            const auto r = dsmale::verify_lemma1(lemma_c.seed, lemma_samples);
            emit(lemma_c, dsmale::make_report("verify-lemma", {{"pass", r.pass}, {"lemma", dsmale::to_json(r)}}));
            return r.pass ? 0 : 1;
        }
        if (*scan) {
            const auto r = do_refine ? dsmale::scan_and_refine(grid, scan_tol) : dsmale::grid_scan(grid);
            if (!csv.empty()) write_file(csv, dsmale::local_minima_csv(r));
            const bool ok = scan_pass(r);
            emit(scan_c, dsmale::make_report("scan", {{"pass", ok}, {"scan", dsmale::to_json(r)}}));
            return ok ? 0 : 1;
        }
        if (*met) {
            if (poly_path.empty() && poly_inline.empty()) throw dsmale::UsageError("metrics needs --poly or --coeffs");
            const auto parsed = dsmale::parse_polynomial_text(read_poly_source(poly_path, poly_inline));
            const auto m = dsmale::metrics(parsed.numeric, met_tol);
            emit(metrics_c, dsmale::make_report("metrics", {{"exact_input", parsed.exact.has_value()},
                                                            {"degree", parsed.numeric.degree()},
                                                            {"polynomial", dsmale::to_json(parsed.numeric)},
                                                            {"metrics", dsmale::to_json(m)}}));
            return 0;
        }
        if (*ext) {
            const dsmale::ExactComplex a = parse_exact_complex(a_re, a_im);
            Json body = Json::object();
            const auto g1 = dsmale::extremal_g1(a);
            body["g1"] = {{"exact", dsmale::to_json(dsmale::extremal_g1_metrics(a))},
                          {"numeric", dsmale::to_json(dsmale::metrics(dsmale::to_numeric(g1)))}};
            for (int sign : {1, -1}) {
                const auto g = dsmale::extremal_g23(a, sign);
                body[sign > 0 ? "g2" : "g3"] = {{"q", dsmale::ExactComplex::sixth_root_of_unity(sign).to_string()},
                                                {"exact", dsmale::to_json(dsmale::extremal_g23_metrics(a, sign))},
                                                {"numeric", dsmale::to_json(dsmale::metrics(dsmale::to_numeric(g)))}};
            }
            emit(ext_c, dsmale::make_report("extremal", body));
            return 0;
        }
        if (*sample) {
            if (sample_n != 0 && (sample_n < 2 || sample_n > 7)) throw dsmale::UsageError("--n must be in 2..7");
            Json conj = Json::array(), dub = Json::array();
            bool ok = true;
            for (int n = 2; n <= 7; ++n) {
                if (sample_n != 0 && n != sample_n) continue;
                const auto c = dsmale::conjecture_sample_check(n, samples, sample_c.seed + static_cast<std::uint64_t>(n));
                const auto d = dsmale::dubinin_sample_check(n, pairs, sample_c.seed + 100 + static_cast<std::uint64_t>(n));
                ok = ok && c.pass && d.pass;
                conj.push_back(dsmale::to_json(c));
                dub.push_back(dsmale::to_json(d));
            }
            const auto disc = dsmale::disc_bound_sample_check(disc_samples, sample_c.seed);
            ok = ok && disc.pass;
            emit(sample_c, dsmale::make_report("sample-check", {{"pass", ok},
                                                                {"conjecture", conj},
                                                                {"distortion", dub},
                                                                {"disc_bounds", dsmale::to_json(disc)}}));
            return ok ? 0 : 1;
        }
        if (*all) {
            const auto lem = dsmale::verify_lemma1(all_c.seed);
            const auto id = dsmale::verify_identity_id1(all_c.seed);
            const auto eq = dsmale::verify_equality_cases(dsmale::build_g(), all_c.seed);
            const auto sc = dsmale::scan_and_refine(all_grid);
            Json conj = Json::array();
            bool conj_ok = true;
            for (int n = 2; n <= 7; ++n) {
                const auto c = dsmale::conjecture_sample_check(n, all_samples, all_c.seed + static_cast<std::uint64_t>(n));
                conj_ok = conj_ok && c.pass;
                conj.push_back(dsmale::to_json(c));
            }
            const bool ok = lem.pass && id.pass && eq.pass && scan_pass(sc) && conj_ok;
            emit(all_c, dsmale::make_report("verify-all", {{"pass", ok},
                                                          {"lemma", dsmale::to_json(lem)},
                                                          {"identity", dsmale::to_json(id)},
                                                          {"equality", dsmale::to_json(eq)},
                                                          {"scan", dsmale::to_json(sc)},
                                                          {"conjecture", conj}}));
            return ok ? 0 : 1;
        }
    } catch (const dsmale::InputParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const dsmale::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const dsmale::NotInClass& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const dsmale::ZeroScale& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const dsmale::DegenerateInput& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const dsmale::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
