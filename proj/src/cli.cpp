#include "distprod/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "distprod/acceptance.hpp"
#include "distprod/constants.hpp"
#include "distprod/detail/parallel.hpp"

namespace distprod::cli {

namespace {

using distrib::DistributionExpr;
using distrib::TestFunction;
using json = nlohmann::json;

struct HelpRequested {
    std::string text;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// JSON value for a double; non-finite values become strings ("inf",
/// "-inf", "nan") since JSON has no representation for them.
json jnum(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

// ---------------------------------------------------------------------------
// expression grammar

double parse_number(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot parse number '" + text + "' in " + what);
    }
}

std::vector<double> parse_bracket_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::string item;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(parse_number(item, what));
            item.clear();
        } else {
            item += ch;
        }
    }
    if (!item.empty()) out.push_back(parse_number(item, what));
    if (out.empty()) throw UsageError("empty parameter list in " + what);
    return out;
}

/// Splits on top-level +/- separators, keeping the sign with each term.
std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty() &&
            cur.find_first_not_of(" \t") != std::string::npos) {
            const char prev = cur.back();
            if (prev != 'e' && prev != 'E' && prev != '*') {
                terms.push_back(cur);
                cur.clear();
                if (ch == '-') cur = "-";
                continue;
            }
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    if (!cur.empty()) terms.push_back(cur);
    if (terms.empty()) throw UsageError("empty distribution expression");
    return terms;
}

std::vector<double> parse_point(const std::string& text, int dim, const std::string& what) {
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw UsageError("unbalanced point tuple in " + what);
        std::vector<double> pt = parse_bracket_list(text.substr(1, text.size() - 2), what);
        if (static_cast<int>(pt.size()) != dim)
            throw UsageError("point tuple dimension mismatch in " + what);
        return pt;
    }
    if (dim != 1)
        throw UsageError("a d-dimensional point must be written as (x1,...,xd) in " + what);
    return {parse_number(text, what)};
}

void parse_term_into(const std::string& term, int dim, DistributionExpr& expr) {
    std::string rest = term;
    double coeff = 1.0;
    if (!rest.empty() && rest.front() == '-') {
        coeff = -1.0;
        rest.erase(0, 1);
    }
    const size_t star = rest.find('*');
    if (star != std::string::npos) {
        coeff *= parse_number(rest.substr(0, star), "coefficient");
        rest.erase(0, star + 1);
    }

    if (rest.rfind("hat@[", 0) == 0) {
        if (dim != 1) throw UsageError("hat terms are one-dimensional");
        if (rest.back() != ']') throw UsageError("unbalanced hat support: " + rest);
        std::vector<double> ab = parse_bracket_list(rest.substr(5, rest.size() - 6), "hat");
        if (ab.size() != 2) throw UsageError("hat@[a,b] takes exactly two numbers");
        DistributionExpr h = DistributionExpr::hat(ab[0], ab[1]);
        h.continuous.front().coeff = coeff;
        expr.continuous.push_back(h.continuous.front());
        return;
    }

    if (rest.rfind("delta", 0) != 0) throw UsageError("unknown distribution term '" + term + "'");
    rest.erase(0, 5);

    int order = 0;
    while (!rest.empty() && rest.front() == '\'') {
        ++order;
        rest.erase(0, 1);
    }
    if (!rest.empty() && rest.front() == '^') {
        rest.erase(0, 1);
        const size_t at = rest.find('@');
        const std::string num = rest.substr(0, at);
        order += static_cast<int>(parse_number(num, "delta order"));
        rest.erase(0, at == std::string::npos ? rest.size() : at);
    }
    std::vector<double> point(dim, 0.0);
    if (!rest.empty() && rest.front() == '@') {
        point = parse_point(rest.substr(1), dim, "delta point");
        rest.clear();
    }
    if (!rest.empty()) throw UsageError("trailing characters in term '" + term + "'");

    if (dim == 1) {
        expr.deltas.push_back(distrib::DeltaTerm{coeff, {order}, point});
    } else {
        if (order != 0)
            throw UsageError("delta derivatives in d > 1 are not expressible in the CLI grammar");
        expr.deltas.push_back(distrib::DeltaTerm{coeff, std::vector<int>(dim, 0), point});
    }
}

DistributionExpr parse_distribution(const std::string& text, int dim) {
    DistributionExpr expr;
    expr.dim = dim;
    for (const std::string& term : split_terms(text)) parse_term_into(term, dim, expr);
    expr.validate();
    return expr;
}

TestFunction parse_test_function(const std::string& text, int dim) {
    auto bracket_args = [&](const std::string& head) -> std::vector<double> {
        std::string rest = text.substr(head.size());
        if (rest.empty()) return {};
        if (rest.front() != '[' || rest.back() != ']')
            throw UsageError("malformed test function '" + text + "'");
        return parse_bracket_list(rest.substr(1, rest.size() - 2), "test function");
    };

    if (text.rfind("axisbump", 0) == 0) {
        std::vector<double> a = bracket_args("axisbump");
        const double c = a.size() > 0 ? a[0] : 2.718281828459045235;
        const double s = a.size() > 1 ? a[1] : 1.0;
        return TestFunction::axis_bump(dim, c, s);
    }
    if (text.rfind("polybump", 0) == 0) {
        std::vector<double> a = bracket_args("polybump");
        if (a.empty()) throw UsageError("polybump requires coefficients, e.g. polybump[0,1]");
        return TestFunction::poly_bump(a, dim);
    }
    if (text.rfind("xbump", 0) == 0) {
        std::vector<double> a = bracket_args("xbump");
        const int axis = a.size() > 0 ? static_cast<int>(a[0]) : 0;
        const int power = a.size() > 1 ? static_cast<int>(a[1]) : 1;
        return TestFunction::vanishing_at_origin(axis, power, dim);
    }
    if (text.rfind("bump", 0) == 0) {
        std::vector<double> a = bracket_args("bump");
        const double c = a.size() > 0 ? a[0] : 2.718281828459045235;
        const double s = a.size() > 1 ? a[1] : 1.0;
        return TestFunction::bump(dim, c, s);
    }
    throw UsageError("unknown test function '" + text + "'");
}

// ---------------------------------------------------------------------------

mollifier::Kind parse_mkind(const std::string& s) {
    if (s == "oned") return mollifier::Kind::OneD;
    if (s == "product") return mollifier::Kind::ProductND;
    if (s == "radial") return mollifier::Kind::RadialND;
    throw UsageError("mollifier kind must be oned, product, or radial (got '" + s + "')");
}

products::ProductKind parse_pkind(const std::string& s) {
    if (s == "sym") return products::ProductKind::Sym;
    if (s == "direct") return products::ProductKind::Direct;
    if (s == "exchange") return products::ProductKind::Exchange;
    if (s == "legacy") return products::ProductKind::LegacySym;
    throw UsageError("product kind must be sym, direct, exchange, or legacy (got '" + s + "')");
}

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

void add_common_options(CLI::App* sub, RunConfig& cfg, bool with_exprs) {
    sub->add_option("--m", cfg.m, "mollifier order (even, >= 2)");
    sub->add_option("--mkind", cfg.mkind, "mollifier kind: oned | product | radial");
    sub->add_option("--d", cfg.d, "spatial dimension");
    if (with_exprs) {
        sub->add_option("--S", cfg.S, "first distribution expression");
        sub->add_option("--T", cfg.T, "second distribution expression");
        sub->add_option("--psi", cfg.psi, "test function expression");
    }
    sub->add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance");
    sub->add_option("--output", cfg.output, "output path (default: stdout)");
    sub->add_option("--workers", cfg.workers, "worker threads for grids and scans");
    sub->set_config("--config");
}

void add_limit_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--alpha", cfg.alpha, "exponent alpha");
    sub->add_option("--beta", cfg.beta, "exponent beta");
    sub->add_option("--ngrid", cfg.ngrid, "n grid as n0:ratio:J (n up to n0*ratio^J)");
    sub->add_option("--tau-s", cfg.tau_slope, "slope threshold for growth/decay");
    sub->add_option("--tau-c", cfg.tau_cauchy, "Cauchy tail threshold for convergence");
    sub->add_option("--window", cfg.window, "tail window length");
}

RunConfig parse_args_impl(const std::vector<std::string>& argv) {
    RunConfig cfg;

    CLI::App app{"numerical laboratory for regularized products of distributions"};
    app.require_subcommand(1);

    CLI::App* sc_constants = app.add_subcommand("constants", "emit the constant table as JSON");
    RunConfig c_constants;
    add_common_options(sc_constants, c_constants, false);

    CLI::App* sc_sequence = app.add_subcommand("sequence", "evaluate a product sequence (CSV)");
    RunConfig c_sequence;
    add_common_options(sc_sequence, c_sequence, true);
    add_limit_options(sc_sequence, c_sequence);
    sc_sequence->add_option("--kind", c_sequence.kind, "sym | direct | exchange | legacy");
    sc_sequence->add_option("--format", c_sequence.format, "csv | json");

    CLI::App* sc_limit = app.add_subcommand("limit", "estimate the sequence limit (JSON)");
    RunConfig c_limit;
    add_common_options(sc_limit, c_limit, true);
    add_limit_options(sc_limit, c_limit);
    sc_limit->add_option("--kind", c_limit.kind, "sym | direct | exchange | legacy");

    CLI::App* sc_scan = app.add_subcommand("scan", "classify verdicts over a ratio range");
    RunConfig c_scan;
    add_common_options(sc_scan, c_scan, true);
    add_limit_options(sc_scan, c_scan);
    sc_scan->add_option("--kind", c_scan.kind, "sym | direct | exchange");
    sc_scan->add_option("--ratio", c_scan.ratio, "ratio range lo:hi:step")->required();

    CLI::App* sc_legacy = app.add_subcommand("legacy", "legacy Cauchy-regularized product limit");
    RunConfig c_legacy;
    add_common_options(sc_legacy, c_legacy, true);
    add_limit_options(sc_legacy, c_legacy);

    CLI::App* sc_suite = app.add_subcommand("suite", "run the acceptance suite");
    RunConfig c_suite;
    sc_suite->add_option("--workers", c_suite.workers, "worker threads");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        throw HelpRequested{help.str()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (sc_constants->parsed()) {
        cfg = c_constants;
        cfg.sub = Subcommand::Constants;
    } else if (sc_sequence->parsed()) {
        cfg = c_sequence;
        cfg.sub = Subcommand::Sequence;
    } else if (sc_limit->parsed()) {
        cfg = c_limit;
        cfg.sub = Subcommand::Limit;
    } else if (sc_scan->parsed()) {
        cfg = c_scan;
        cfg.sub = Subcommand::Scan;
    } else if (sc_legacy->parsed()) {
        cfg = c_legacy;
        cfg.sub = Subcommand::Legacy;
        cfg.kind = "legacy";
        cfg.mkind = "oned";
    } else {
        cfg = c_suite;
        cfg.sub = Subcommand::Suite;
    }
    return cfg;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.sub == Subcommand::Suite) return;
    if (cfg.m < 2 || cfg.m % 2 != 0) throw UsageError("m must be even and >= 2");
    if (cfg.mkind == "oned" && cfg.d != 1)
        throw UsageError("mkind oned requires --d 1");
    if (cfg.d < 1) throw UsageError("d must be >= 1");
    if (!(cfg.alpha > 0.0) || !(cfg.beta > 0.0))
        throw UsageError("alpha and beta must be positive");
    if (!(cfg.rel_tol > 0.0)) throw UsageError("rel-tol must be positive");
    if (!(cfg.tau_slope > 0.0) || !(cfg.tau_cauchy > 0.0))
        throw UsageError("tau-s and tau-c must be positive");
    if (cfg.window < 2) throw UsageError("window must be >= 2");
    if (cfg.workers < 1) throw UsageError("workers must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw UsageError("format must be csv or json");
}

// ---------------------------------------------------------------------------
// emitters

void emit_samples_csv(std::ostream& os, const std::vector<products::SequenceSample>& samples) {
    os << "n,value,quad_error,rescale_exponent\n";
    for (const auto& s : samples)
        os << s.n << ',' << fmt17(s.value) << ',' << fmt17(s.quad_error) << ','
           << fmt17(s.rescale_exponent) << '\n';
}

json sample_json(const products::SequenceSample& s) {
    return json{{"n", s.n},
                {"value", jnum(s.value)},
                {"quad_error", jnum(s.quad_error)},
                {"rescale_exponent", jnum(s.rescale_exponent)}};
}

json verdict_json(const limits::LimitVerdict& v) {
    json j;
    j["class"] = limits::to_string(v.cls);
    j["slope"] = jnum(v.slope);
    j["sign_changes"] = v.sign_changes;
    switch (v.cls) {
        case limits::LimitClass::Convergent:
            j["value"] = jnum(v.value);
            j["extrapolation_error"] = jnum(v.extrapolation_error);
            break;
        case limits::LimitClass::Zero:
            j["decay_exponent"] = jnum(v.decay_exponent);
            break;
        case limits::LimitClass::Divergent:
            j["growth_exponent"] = jnum(v.growth_exponent);
            break;
        case limits::LimitClass::Inconclusive:
            break;
    }
    j["samples"] = json::array();
    for (const auto& s : v.samples) j["samples"].push_back(sample_json(s));
    return j;
}

class OutputStream {
public:
    OutputStream(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output path '" + path + "'");
        }
    }
    std::ostream& get() { return file_.is_open() ? file_ : fallback_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

int run_constants(const RunConfig& cfg, std::ostream& out) {
    json j;
    j["m"] = cfg.m;
    j["d"] = cfg.d;
    j["entries"] = json::object();
    for (const auto& [key, cv] : constants::table(cfg.m, cfg.d))
        j["entries"][key] = json{{"value", jnum(cv.value)}, {"error", jnum(cv.error)}};
    OutputStream os(cfg.output, out);
    os.get() << j.dump(2) << '\n';
    return 0;
}

int run_sequence(const RunConfig& cfg, std::ostream& out) {
    products::ProductQuery q = build_query(cfg);
    const std::vector<long> ns = build_grid(cfg).values();
    std::vector<products::SequenceSample> samples = detail::parallel_map(
        ns, [&](long n) { return products::eval_product_at_n(q, n); }, cfg.workers);

    OutputStream os(cfg.output, out);
    if (cfg.format == "json") {
        json j;
        j["samples"] = json::array();
        for (const auto& s : samples) j["samples"].push_back(sample_json(s));
        os.get() << j.dump(2) << '\n';
    } else {
        emit_samples_csv(os.get(), samples);
    }
    return 0;
}

int run_limit(const RunConfig& cfg, std::ostream& out) {
    products::ProductQuery q = build_query(cfg);
    limits::LimitVerdict v =
        limits::estimate_limit(q, build_grid(cfg), build_tolerances(cfg), cfg.workers);
    OutputStream os(cfg.output, out);
    os.get() << verdict_json(v).dump(2) << '\n';
    return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
    const std::vector<std::string> parts = split_colon(cfg.ratio);
    if (parts.size() != 3) throw UsageError("--ratio must be lo:hi:step");
    scanner::ScanRequest req;
    req.query = build_query(cfg);
    req.ratio_lo = parse_number(parts[0], "--ratio");
    req.ratio_hi = parse_number(parts[1], "--ratio");
    req.step = parse_number(parts[2], "--ratio");
    req.grid = build_grid(cfg);
    req.tol = build_tolerances(cfg);
    req.workers = cfg.workers;
    scanner::ScanReport rep = scanner::scan(req);

    {
        OutputStream os(cfg.output, out);
        os.get() << "r,class,value,slope\n";
        for (const auto& p : rep.points)
            os.get() << fmt17(p.ratio) << ',' << limits::to_string(p.cls) << ','
                     << fmt17(p.value) << ',' << fmt17(p.slope) << '\n';
        if (!os.to_file()) out << '\n';
    }

    json j;
    j["detected_critical"] = json::array();
    for (double r : rep.detected_critical) j["detected_critical"].push_back(jnum(r));
    j["predicted_ratio"] = jnum(rep.predicted_ratio);
    j["predicted_constant_id"] = rep.predicted_constant_id;
    j["predicted_constant"] = jnum(rep.predicted_constant);
    j["ordering_ok"] = rep.ordering_ok();
    if (rep.at_predicted) {
        j["at_predicted"] = json{{"r", jnum(rep.at_predicted->ratio)},
                                 {"class", limits::to_string(rep.at_predicted->cls)},
                                 {"value", jnum(rep.at_predicted->value)},
                                 {"slope", jnum(rep.at_predicted->slope)}};
    }
    out << j.dump(2) << '\n';
    return 0;
}

int run_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    acceptance::SuiteResult res = acceptance::run_suite(&err, cfg.workers);
    json j;
    j["criteria"] = json::array();
    for (const auto& c : res.criteria)
        j["criteria"].push_back(json{
            {"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["all_pass"] = res.all_pass;
    out << j.dump(2) << '\n';
    return res.all_pass ? 0 : 1;
}

}  // namespace

std::string RunConfig::to_config_text() const {
    std::ostringstream os;
    os << "m=" << m << '\n';
    os << "mkind=" << mkind << '\n';
    os << "d=" << d << '\n';
    os << "S=" << S << '\n';
    os << "T=" << T << '\n';
    os << "psi=" << psi << '\n';
    os << "kind=" << kind << '\n';
    os << "alpha=" << fmt17(alpha) << '\n';
    os << "beta=" << fmt17(beta) << '\n';
    if (!ratio.empty()) os << "ratio=" << ratio << '\n';
    os << "ngrid=" << ngrid << '\n';
    os << "tau-s=" << fmt17(tau_slope) << '\n';
    os << "tau-c=" << fmt17(tau_cauchy) << '\n';
    os << "window=" << window << '\n';
    os << "rel-tol=" << fmt17(rel_tol) << '\n';
    os << "format=" << format << '\n';
    if (!output.empty()) os << "output=" << output << '\n';
    os << "workers=" << workers << '\n';
    return os.str();
}

RunConfig parse_config_text(const std::string& text, Subcommand sub) {
    RunConfig cfg;
    cfg.sub = sub;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line missing '=': " + line);
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "m") cfg.m = static_cast<int>(parse_number(val, key));
        else if (key == "mkind") cfg.mkind = val;
        else if (key == "d") cfg.d = static_cast<int>(parse_number(val, key));
        else if (key == "S") cfg.S = val;
        else if (key == "T") cfg.T = val;
        else if (key == "psi") cfg.psi = val;
        else if (key == "kind") cfg.kind = val;
        else if (key == "alpha") cfg.alpha = parse_number(val, key);
        else if (key == "beta") cfg.beta = parse_number(val, key);
        else if (key == "ratio") cfg.ratio = val;
        else if (key == "ngrid") cfg.ngrid = val;
        else if (key == "tau-s") cfg.tau_slope = parse_number(val, key);
        else if (key == "tau-c") cfg.tau_cauchy = parse_number(val, key);
        else if (key == "window") cfg.window = static_cast<int>(parse_number(val, key));
        else if (key == "rel-tol") cfg.rel_tol = parse_number(val, key);
        else if (key == "format") cfg.format = val;
        else if (key == "output") cfg.output = val;
        else if (key == "workers") cfg.workers = static_cast<int>(parse_number(val, key));
        else throw UsageError("unknown config key '" + key + "'");
    }
    validate_config(cfg);
    return cfg;
}

products::ProductQuery build_query(const RunConfig& cfg) {
    validate_config(cfg);
    products::ProductQuery q;
    q.spec = {cfg.m, parse_mkind(cfg.mkind), cfg.d};
    q.S = parse_distribution(cfg.S, cfg.d);
    q.T = parse_distribution(cfg.T, cfg.d);
    q.psi = parse_test_function(cfg.psi, cfg.d);
    q.kind = parse_pkind(cfg.kind);
    q.alpha = cfg.alpha;
    q.beta = cfg.beta;
    q.rel_tol = cfg.rel_tol;
    q.validate();
    return q;
}

limits::NGrid build_grid(const RunConfig& cfg) {
    const std::vector<std::string> parts = split_colon(cfg.ngrid);
    if (parts.size() != 3) throw UsageError("--ngrid must be n0:ratio:J");
    limits::NGrid g;
    g.n0 = static_cast<long>(parse_number(parts[0], "--ngrid"));
    g.ratio = static_cast<long>(parse_number(parts[1], "--ngrid"));
    g.count = static_cast<int>(parse_number(parts[2], "--ngrid")) + 1;
    g.validate();
    return g;
}

limits::ToleranceSet build_tolerances(const RunConfig& cfg) {
    limits::ToleranceSet t;
    t.tau_slope = cfg.tau_slope;
    t.tau_cauchy = cfg.tau_cauchy;
    t.window = cfg.window;
    return t;
}

RunConfig parse_args(const std::vector<std::string>& argv) {
    RunConfig cfg;
    try {
        cfg = parse_args_impl(argv);
    } catch (const HelpRequested& h) {
        throw UsageError(h.text);
    }
    validate_config(cfg);
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.sub) {
            case Subcommand::Constants: return run_constants(cfg, out);
            case Subcommand::Sequence: return run_sequence(cfg, out);
            case Subcommand::Limit: return run_limit(cfg, out);
            case Subcommand::Scan: return run_scan(cfg, out);
            case Subcommand::Legacy: return run_limit(cfg, out);
            case Subcommand::Suite: return run_suite(cfg, out, err);
        }
        return 0;
    } catch (const NumericalError& e) {
        json j;
        j["error"] = e.what();
        j["partial_value"] = jnum(e.partial_value);
        j["error_estimate"] = jnum(e.error_estimate);
        out << j.dump(2) << '\n';
        return 1;
    }
}

int main_impl(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = parse_args_impl(argv);
        validate_config(cfg);
        return run(cfg, out, err);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace distprod::cli
