#include "dsmale/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dsmale/error.hpp"

namespace dsmale {
namespace {

struct Coefficient {
    std::complex<double> value;
    std::optional<ExactComplex> exact;
};

struct Scalar {
    double value = 0.0;
    std::optional<Rational> exact;
};

Scalar parse_scalar(const std::string& tok, std::size_t line) {
    Scalar s;
    try {
        s.exact = parse_rational(tok);
        s.value = s.exact->get_d();
        return s;
    } catch (const Error&) {
    }
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v))
        throw InputParseError(line, "cannot read coefficient '" + tok + "'");
    s.value = v;
    return s;
}

Coefficient combine(const Scalar& re, const Scalar& im) {
    Coefficient c{{re.value, im.value}, std::nullopt};
    if (re.exact && im.exact) c.exact = ExactComplex(QSqrt3(*re.exact), QSqrt3(*im.exact));
    return c;
}

ParsedPolynomial assemble(const std::vector<Coefficient>& cs) {
    if (cs.empty()) throw InputParseError(0, "no coefficients");
    ParsedPolynomial out;
    std::vector<std::complex<double>> num;
    std::vector<ExactComplex> ex;
    bool all_exact = true;
    for (const auto& c : cs) {
        num.push_back(c.value);
        if (c.exact) {
            ex.push_back(*c.exact);
        } else {
            all_exact = false;
        }
    }
    out.numeric = ComplexPolynomial(std::move(num));
    if (all_exact) out.exact = ExactPolynomial(std::move(ex));
    return out;
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

Scalar json_scalar(const nlohmann::json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>(), 1);
    if (v.is_number_integer()) {
        Scalar s;
        s.exact = Rational(v.get<long>());
        s.value = s.exact->get_d();
        return s;
    }
    if (v.is_number()) return {v.get<double>(), std::nullopt};
    throw InputParseError(1, "coefficient entries must be numbers, strings or [re, im] pairs");
}

ParsedPolynomial parse_json_array(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputParseError(line_of_offset(text, e.byte), "invalid JSON");
    }
    if (!j.is_array()) throw InputParseError(1, "expected a JSON array of coefficients");
    std::vector<Coefficient> cs;
    for (const auto& e : j) {
        if (e.is_array()) {
            if (e.size() != 2) throw InputParseError(1, "[re, im] pairs must have two entries");
            cs.push_back(combine(json_scalar(e[0]), json_scalar(e[1])));
        } else {
            cs.push_back(combine(json_scalar(e), Scalar{0.0, Rational(0)}));
        }
    }
    return assemble(cs);
}

Json angles_json(const Angles& a) {
    Json j = Json::array();
    for (double v : a) j.push_back(v);
    return j;
}

Json minima_json(const std::vector<LocalMinimum>& v) {
    Json arr = Json::array();
    for (const auto& m : v) arr.push_back({{"angles", angles_json(m.angles)}, {"value", m.value}});
    return arr;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_flat(const Json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& e : v)
        if (e.is_array() || e.is_object()) return false;
    return true;
}

void render(const Json& v, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (is_flat(val)) {
                os << pad << key << ": " << (val.is_array() ? val.dump() : scalar_text(val)) << '\n';
            } else {
                os << pad << key << ":\n";
                render(val, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const auto& e : v) {
            if (is_flat(e)) {
                os << pad << "- " << (e.is_array() ? e.dump() : scalar_text(e)) << '\n';
            } else {
                os << pad << "-\n";
                render(e, indent + 2, os);
            }
        }
    } else {
        os << pad << scalar_text(v) << '\n';
    }
}

}  // namespace

ParsedPolynomial parse_polynomial_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') return parse_json_array(text);
    std::vector<Coefficient> cs;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() > 2) throw InputParseError(lineno, "expected 're im' or 're'");
        const Scalar re = parse_scalar(toks[0], lineno);
        const Scalar im = toks.size() == 2 ? parse_scalar(toks[1], lineno) : Scalar{0.0, Rational(0)};
        cs.push_back(combine(re, im));
    }
    return assemble(cs);
}

ParsedPolynomial load_polynomial(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputParseError(0, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_polynomial_text(ss.str());
}

Json to_json(const ComplexPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(Json::array({c.real(), c.imag()}));
    return arr;
}

Json to_json(const MetricsReport& m) {
    Json pts = Json::array();
    for (const auto& c : m.critical.points) {
        pts.push_back({{"re", c.zeta.real()},
                       {"im", c.zeta.imag()},
                       {"multiplicity", c.multiplicity},
                       {"ratio_abs", std::abs(c.ratio)}});
    }
    return {{"T", m.T},
            {"S", m.S},
            {"alpha", m.alpha},
            {"lambda", m.lambda},
            {"residual_bound", m.critical.residual_bound},
            {"critical_points", pts}};
}

Json to_json(const ExactMetrics& m) {
    Json pts = Json::array();
    for (const auto& p : m.points) {
        pts.push_back({{"zeta", p.zeta.to_string()},
                       {"multiplicity", p.multiplicity},
                       {"ratio", p.ratio.to_string()},
                       {"ratio_abs_squared", p.ratio_norm.to_string()},
                       {"zeta_abs_squared", p.zeta_norm.to_string()}});
    }
    return {{"T_squared", m.T_squared.to_string()},
            {"S_squared", m.S_squared.to_string()},
            {"alpha_squared", m.alpha_squared.to_string()},
            {"lambda_squared", m.lambda_squared.to_string()},
            {"T", std::sqrt(m.T_squared.to_double())},
            {"S", std::sqrt(m.S_squared.to_double())},
            {"alpha", std::sqrt(m.alpha_squared.to_double())},
            {"lambda", std::sqrt(m.lambda_squared.to_double())},
            {"critical_points", pts}};
}

Json to_json(const IdentityReport& r) {
    Json ev = Json::array();
    for (const auto& [group, shape] : r.nonneg_evidence) ev.push_back({{"group", group}, {"shape", shape}});
    Json j = {{"pass", r.pass},
              {"residual_zero", r.residual_terms == 0},
              {"residual_terms", r.residual_terms},
              {"g_terms", r.g_terms},
              {"J2_reading", to_string(r.reading)},
              {"reading_mismatch", r.reading_mismatch},
              {"numeric_pass", r.numeric_pass},
              {"numeric_max_discrepancy", r.numeric_max_discrepancy},
              {"numeric_samples", r.numeric_samples},
              {"nonneg_evidence", ev}};
    if (!r.residual_dump.empty()) j["residual"] = r.residual_dump;
    return j;
}

Json to_json(const LemmaReport& r) {
    Json coeffs = Json::array();
    for (const auto& c : r.coefficients) {
        coeffs.push_back({{"monomial", c.monomial},
                          {"expected", c.expected.get_str()},
                          {"actual", c.actual.get_str()},
                          {"pass", c.pass}});
    }
    Json chain = Json::array();
    for (const auto& s : r.h_chain) {
        Json e = {{"step", s.step}, {"pass", s.pass}};
        if (!s.bracket.empty()) e["bracket"] = s.bracket;
        if (s.exact_min != "n/a") e["exact_min"] = s.exact_min;
        chain.push_back(e);
    }
    Json terms = Json::array();
    for (const auto& t : r.h2_terms) terms.push_back({{"term", t.term}, {"shape", t.shape}, {"nonneg", t.nonneg}});
    Json j = {{"pass", r.pass},
              {"expansion_pass", r.expansion_pass},
              {"verbatim", r.verbatim},
              {"coefficients", coeffs},
              {"h1_difference_pass", r.h1_difference_pass},
              {"h_chain", chain},
              {"y_free", r.y_free},
              {"h2_match", r.h2_match},
              {"h2_constant", r.h2_constant.get_str()},
              {"h2_w1w2w3w4", r.h2_w1w2w3w4.get_str()},
              {"h2_terms", terms},
              {"sample_points", r.sample_points}};
    if (!r.expansion_residual.empty()) j["expansion_residual"] = r.expansion_residual;
    if (!r.h2_residual.empty()) j["h2_residual"] = r.h2_residual;
    return j;
}

Json to_json(const EqualityReport& r) {
    Json pts = Json::array();
    for (const auto& p : r.points) pts.push_back({{"point", p.name}, {"g", p.exact_value}, {"pass", p.pass}});
    return {{"pass", r.pass},
            {"points", pts},
            {"samples", r.samples},
            {"all_positive", r.all_positive},
            {"min_sampled_g", r.min_sampled_g},
            {"min_sampled_at", angles_json(r.min_sampled_at)}};
}

Json to_json(const OracleReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"quantity", e.quantity}, {"max_rel_discrepancy", e.max_rel_discrepancy}, {"pass", e.pass}});
    }
    double worst_g = 0.0;
    for (const auto& s : r.g_samples) worst_g = std::max(worst_g, s.second);
    return {{"pass", r.pass},
            {"samples", r.g_samples.size()},
            {"max_abs_g_discrepancy", worst_g},
            {"entries", entries}};
}

Json to_json(const ScanResult& r) {
    return {{"points_per_axis", r.points_per_axis},
            {"grid_resolution", r.grid_resolution},
            {"evaluations", r.evaluations},
            {"grid_min_value", r.grid_min_value},
            {"grid_argmin", angles_json(r.grid_argmin)},
            {"refined", r.refined},
            {"min_value", r.min_value},
            {"min_value_minus_one_49th", r.min_value - 1.0 / 49.0},
            {"argmin", angles_json(r.argmin)},
            {"local_minima", minima_json(r.local_minima)},
            {"refined_minima", minima_json(r.refined_minima)},
            {"orbits", minima_json(r.orbits)}};
}

Json to_json(const ConjectureReport& r) {
    return {{"n", r.n},
            {"samples", r.samples},
            {"pass", r.pass},
            {"min_S", r.min_S},
            {"min_S_polynomial", to_json(r.min_S_poly)},
            {"max_T", r.max_T},
            {"below_one_over_n", r.below_one_over_n},
            {"below_weak_bound", r.below_weak_bound},
            {"smale_violations", r.smale_violations},
            {"root_failures", r.root_failures}};
}

Json to_json(const DubininReport& r) {
    return {{"n", r.n}, {"pairs", r.pairs}, {"pass", r.pass}, {"violations", r.violations}, {"min_margin", r.min_margin}};
}

Json to_json(const DiscBoundReport& r) {
    return {{"samples", r.samples},
            {"pass", r.pass},
            {"b_not_above_a", r.b_not_above_a},
            {"b_not_above_one_sixth", r.b_not_above_sixth},
            {"min_abs_b", r.min_b},
            {"min_gap", r.min_gap}};
}

Json make_report(const std::string& command, Json body) {
    Json j = {{"schema", kReportSchema}, {"command", command}};
    for (auto& [k, v] : body.items()) j[k] = v;
    return j;
}

std::string to_text(const Json& report) {
    std::ostringstream os;
    render(report, 0, os);
    return os.str();
}

std::string local_minima_csv(const ScanResult& r) {
    std::ostringstream os;
    os.precision(17);
    os << "phi1,phi2,phi3,phi4,phi5,value\n";
    for (const auto& m : r.local_minima) {
        for (double a : m.angles) os << a << ',';
        os << m.value << '\n';
    }
    return os.str();
}

}  // namespace dsmale
