#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dok/errors.hpp"
#include "dok/kernel.hpp"
#include "dok/spectral.hpp"
#include "dok/step_size.hpp"
#include "dok/verify.hpp"

namespace dok::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Usage/configuration problems -> exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

const char* branch_name(EvalBranch b) { return b == EvalBranch::direct ? "direct" : "series"; }
const char* kind_name(CheckKind k) { return k == CheckKind::positive ? "positive" : "control"; }
const char* mode_name(PrecisionMode m) { return m == PrecisionMode::fast ? "fast" : "strict"; }

StepSize to_step(const HValue& hv) {
    if (hv.denominator) return StepSize::from_denominator(*hv.denominator);
    return StepSize(hv.value);
}

void validate(const Options& opt) {
    if (opt.steps.empty()) throw UsageError("at least one --h step is required");
    for (const HValue& hv : opt.steps) {
        if (!(hv.value > 0.0) || hv.value > 1.0)
            throw UsageError("step '" + hv.text + "' outside (0, 1]");
    }
    if (opt.radius < 2) throw UsageError("--radius must be >= 2");
    if (opt.radius > kRadiusCap)
        throw UsageError("--radius exceeds cap " + std::to_string(kRadiusCap));
    if (opt.grid < 16) throw UsageError("--grid must be >= 16");
    if (opt.terms < 128) throw UsageError("--terms must be >= 128");
    if (opt.delta_window < 5) throw UsageError("--delta-window must be >= 5");
    if (opt.ann_window < 1) throw UsageError("--ann-window must be >= 1");
    for (const auto& t : {opt.tol, opt.ann_factor, opt.spectral_tol}) {
        if (t && !(*t > 0.0)) throw UsageError("tolerances must be positive");
    }
}

void emit(const Options& opt, const std::string& doc, std::ostream& out) {
    if (opt.output_path.empty()) {
        out << doc;
        return;
    }
    std::ofstream f(opt.output_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + opt.output_path + "'");
    f << doc;
}

// ---- params ----------------------------------------------------------------

std::string params_json(const Options& opt) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "params";
    doc["records"] = ordered_json::array();
    for (const HValue& hv : opt.steps) {
        const OperatorParams p = compute_params(to_step(hv), opt.mode);
        ordered_json rec;
        rec["h"] = hv.text;
        rec["h_value"] = p.h;
        rec["d"] = p.d;
        rec["s"] = p.s;
        rec["lambda1"] = p.lambda1;
        rec["lambda2"] = p.lambda2;
        rec["a1"] = p.a1;
        rec["b1"] = p.b1;
        rec["k"] = p.k;
        rec["c"] = p.c;
        rec["branch"] = branch_name(p.branch);
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string params_csv(const Options& opt) {
    std::ostringstream os;
    os << "h,lambda1,lambda2,a1,b1,k,c,branch\n";
    for (const HValue& hv : opt.steps) {
        const OperatorParams p = compute_params(to_step(hv), opt.mode);
        os << csv_quote(hv.text) << ',' << format_double(p.lambda1) << ','
           << format_double(p.lambda2) << ',' << format_double(p.a1) << ','
           << format_double(p.b1) << ',' << format_double(p.k) << ',' << format_double(p.c)
           << ',' << branch_name(p.branch) << '\n';
    }
    return os.str();
}

// ---- kernel ----------------------------------------------------------------

std::string kernel_json(const Options& opt) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "kernel";
    doc["records"] = ordered_json::array();
    for (const HValue& hv : opt.steps) {
        const StepSize step = to_step(hv);
        const OperatorParams p = compute_params(step, opt.mode);
        ordered_json rec;
        rec["h"] = hv.text;
        rec["h_value"] = p.h;
        rec["radius"] = opt.radius;
        rec["rows"] = ordered_json::array();
        for (std::int64_t b = -opt.radius; b <= opt.radius; ++b) {
            ordered_json row;
            row["beta"] = b;
            row["D"] = eval_D(p, b);
            row["G"] = eval_G_discrete(step, b);
            rec["rows"].push_back(std::move(row));
        }
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string kernel_csv(const Options& opt) {
    std::ostringstream os;
    os << "h,beta,D,G\n";
    for (const HValue& hv : opt.steps) {
        const StepSize step = to_step(hv);
        const OperatorParams p = compute_params(step, opt.mode);
        for (std::int64_t b = -opt.radius; b <= opt.radius; ++b) {
            os << csv_quote(hv.text) << ',' << b << ',' << format_double(eval_D(p, b)) << ','
               << format_double(eval_G_discrete(step, b)) << '\n';
        }
    }
    return os.str();
}

// ---- symbol ----------------------------------------------------------------

struct SymbolRow {
    double p;
    double re;
    double im;
    double residual;  // lattice-sum agreement, NaN when the sum sits on a pole
};

std::vector<SymbolRow> symbol_rows(const HValue& hv, const Options& opt) {
    const StepSize step = to_step(hv);
    const OperatorParams params = compute_params(step, opt.mode);
    std::vector<SymbolRow> rows;
    rows.reserve(static_cast<std::size_t>(opt.grid));
    for (std::int64_t j = 0; j < opt.grid; ++j) {
        const double p = double(j) / (double(opt.grid) * params.h);
        const SymbolValue sv = symbol_closed(params, p);
        double residual = std::numeric_limits<double>::quiet_NaN();
        try {
            const std::complex<double> series = symbol_series(step, p, opt.terms);
            residual = std::abs(series - sv.value) / (1.0 + std::abs(sv.value));
        } catch (const PoleProximity&) {
            // row stays, residual marked unavailable
        }
        rows.push_back({p, sv.value.real(), sv.value.imag(), residual});
    }
    return rows;
}

std::string symbol_json(const Options& opt) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "symbol";
    doc["records"] = ordered_json::array();
    for (const HValue& hv : opt.steps) {
        ordered_json rec;
        rec["h"] = hv.text;
        rec["h_value"] = hv.denominator ? 1.0 / double(*hv.denominator) : hv.value;
        rec["grid"] = opt.grid;
        rec["terms"] = opt.terms;
        rec["rows"] = ordered_json::array();
        for (const SymbolRow& r : symbol_rows(hv, opt)) {
            ordered_json row;
            row["p"] = r.p;
            row["re"] = r.re;
            row["im"] = r.im;
            row["series_residual"] = r.residual;
            rec["rows"].push_back(std::move(row));
        }
        doc["records"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string symbol_csv(const Options& opt) {
    std::ostringstream os;
    os << "h,p,re,im,series_residual\n";
    for (const HValue& hv : opt.steps) {
        for (const SymbolRow& r : symbol_rows(hv, opt)) {
            os << csv_quote(hv.text) << ',' << format_double(r.p) << ',' << format_double(r.re)
               << ',' << format_double(r.im) << ',' << format_double(r.residual) << '\n';
        }
    }
    return os.str();
}

// ---- check -----------------------------------------------------------------

VerifyConfig check_config(const Options& opt) {
    VerifyConfig cfg;
    cfg.delta_window = opt.delta_window;
    cfg.annihilation_window = opt.ann_window;
    if (opt.tol) cfg.delta_tol = *opt.tol;
    if (opt.ann_factor) cfg.annihilation_tol_factor = *opt.ann_factor;
    if (opt.spectral_tol) cfg.spectral_tol = *opt.spectral_tol;
    cfg.seed = opt.seed;
    cfg.include_controls = opt.controls;
    cfg.mode = opt.mode;
    return cfg;
}

ordered_json report_json(const CheckReport& rep, const std::string& h_text) {
    ordered_json r;
    r["name"] = rep.name;
    r["h"] = h_text;
    r["h_value"] = rep.h;
    r["tolerance"] = rep.tolerance;
    r["max_residual"] = rep.max_residual;
    r["radius_used"] = rep.radius_used;
    r["passed"] = rep.passed;
    r["kind"] = kind_name(rep.kind);
    r["note"] = rep.note;
    r["details"] = ordered_json::array();
    for (const Offender& o : rep.details) {
        ordered_json d;
        d["beta"] = o.beta;
        d["residual"] = o.residual;
        r["details"].push_back(std::move(d));
    }
    return r;
}

int cmd_check(const Options& opt, std::ostream& out) {
    const VerifyConfig cfg = check_config(opt);
    std::vector<StepSize> steps;
    steps.reserve(opt.steps.size());
    for (const HValue& hv : opt.steps) steps.push_back(to_step(hv));
    const std::vector<CheckReport> reports = run_suite(steps, cfg);
    const std::size_t per_step = reports.size() / opt.steps.size();

    bool all_passed = true;
    for (const CheckReport& r : reports) all_passed = all_passed && r.passed;

    std::string doc;
    if (opt.format == OutputFormat::json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "check";
        j["mode"] = mode_name(opt.mode);
        j["passed"] = all_passed;
        j["reports"] = ordered_json::array();
        for (std::size_t i = 0; i < reports.size(); ++i)
            j["reports"].push_back(report_json(reports[i], opt.steps[i / per_step].text));
        doc = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "h,name,tolerance,max_residual,radius_used,passed,kind,note\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const CheckReport& r = reports[i];
            os << csv_quote(opt.steps[i / per_step].text) << ',' << r.name << ','
               << format_double(r.tolerance) << ',' << format_double(r.max_residual) << ','
               << r.radius_used << ',' << (r.passed ? "true" : "false") << ','
               << kind_name(r.kind) << ',' << csv_quote(r.note) << '\n';
        }
        doc = os.str();
    }
    emit(opt, doc, out);
    return all_passed ? 0 : 1;
}

}  // namespace

HValue parse_h(const std::string& text) {
    const auto bad = [&text](const char* why) {
        return std::invalid_argument("step '" + text + "': " + why);
    };
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num != "1") throw bad("rational steps must have numerator 1");
        if (den.empty() || den.find_first_not_of("0123456789") != std::string::npos)
            throw bad("denominator is not a positive integer");
        std::int64_t n = 0;
        const auto res = std::from_chars(den.data(), den.data() + den.size(), n);
        if (res.ec != std::errc() || res.ptr != den.data() + den.size() || n <= 0)
            throw bad("denominator is not a positive integer");
        return {text, 1.0 / double(n), n};
    }
    double v = 0.0;
    std::size_t pos = 0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw bad("not a decimal number");
    }
    if (pos != text.size()) throw bad("trailing characters after the number");
    return {text, v, std::nullopt};
}

int run(const Options& options, std::ostream& out, std::ostream& err) {
    try {
        validate(options);
        switch (options.command) {
            case Command::params:
                emit(options,
                     options.format == OutputFormat::json ? params_json(options)
                                                          : params_csv(options),
                     out);
                return 0;
            case Command::kernel:
                emit(options,
                     options.format == OutputFormat::json ? kernel_json(options)
                                                          : kernel_csv(options),
                     out);
                return 0;
            case Command::symbol:
                emit(options,
                     options.format == OutputFormat::json ? symbol_json(options)
                                                          : symbol_csv(options),
                     out);
                return 0;
            case Command::check: return cmd_check(options, out);
        }
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    std::vector<std::string> raw_steps;
    std::string format = "json";

    CLI::App app{"discrete fourth-order operator toolkit"};
    app.require_subcommand(1);
    CLI::App* sub_params =
        app.add_subcommand("params", "characteristic roots and kernel coefficients");
    CLI::App* sub_kernel =
        app.add_subcommand("kernel", "operator weights and fundamental-solution samples");
    CLI::App* sub_symbol =
        app.add_subcommand("symbol", "closed-form symbol with lattice-sum residuals");
    CLI::App* sub_check = app.add_subcommand("check", "windowed verification suite");

    for (CLI::App* sub : {sub_params, sub_kernel, sub_symbol, sub_check}) {
        // the default help flag owns "-h", which CLI11 treats as a clash
        sub->set_help_flag("--help", "print this help and exit");
        sub->add_option("--h", raw_steps, "lattice step, decimal or 1/N, in (0, 1]")
            ->required();
        sub->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", opt.output_path, "write the document to this file");
    }
    sub_kernel->add_option("--radius", opt.radius, "window radius (>= 2)");
    sub_symbol->add_option("--grid", opt.grid, "frequency samples per period (>= 16)");
    sub_symbol->add_option("--terms", opt.terms, "lattice-sum terms (>= 128)");
    sub_check->add_option("--tol", opt.tol, "delta-reproduction tolerance");
    sub_check->add_option("--ann-factor", opt.ann_factor,
                          "annihilation tolerance factor (scaled by K = 2/d)");
    sub_check->add_option("--spectral-tol", opt.spectral_tol,
                          "coefficient-recovery tolerance");
    sub_check->add_option("--delta-window", opt.delta_window, "delta window (>= 5)");
    sub_check->add_option("--ann-window", opt.ann_window, "annihilation window (>= 1)");
    sub_check->add_option("--seed", opt.seed, "frequency-draw seed");
    sub_check->add_flag("--controls", opt.controls,
                        "append the negative control (quadratic probe)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("DOK_PRECISION_MODE")) {
        const std::string v(env);
        if (v == "strict") {
            opt.mode = PrecisionMode::strict;
        } else if (v != "fast" && !v.empty()) {
            err << "error: DOK_PRECISION_MODE must be 'fast' or 'strict', got '" << v << "'\n";
            return 2;
        }
    }

    if (app.got_subcommand(sub_params)) opt.command = Command::params;
    else if (app.got_subcommand(sub_kernel)) opt.command = Command::kernel;
    else if (app.got_subcommand(sub_symbol)) opt.command = Command::symbol;
    else opt.command = Command::check;

    try {
        for (const std::string& raw : raw_steps) opt.steps.push_back(parse_h(raw));
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    opt.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    return run(opt, out, err);
}

}  // namespace dok::cli
