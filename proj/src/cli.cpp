#include "tpzeros/cli.hpp"

#include "tpzeros/classifier.hpp"
#include "tpzeros/error.hpp"
#include "tpzeros/polynomials.hpp"
#include "tpzeros/report_json.hpp"
#include "tpzeros/rootfinder.hpp"
#include "tpzeros/svg_plot.hpp"
#include "tpzeros/verifier.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tpz::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_reals(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string field = text.substr(pos, comma - pos);
        double v = 0.0;
        const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size())
            throw UsageError(std::string("cannot parse ") + what + " value '" + field + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

RecurrenceSpec parse_spec(const std::string& text) {
    const std::vector<double> v = parse_reals(text, "--spec");
    if (v.size() != 5)
        throw UsageError("--spec expects a,b,c,a0,a1");
    return validate(v[0], v[1], v[2], v[3], v[4]);
}

ParamBox parse_box(const std::string& text) {
    const std::vector<double> v = parse_reals(text, "--box");
    ParamBox box;
    if (v.size() == 2) {
        box = ParamBox::uniform(v[0], v[1]);
    } else if (v.size() == 10) {
        for (std::size_t i = 0; i < 5; ++i) {
            box.lo[i] = v[2 * i];
            box.hi[i] = v[2 * i + 1];
        }
    } else {
        throw UsageError("--box expects lo,hi or ten values lo_a,hi_a,...,lo_a1,hi_a1");
    }
    for (std::size_t i = 0; i < 5; ++i) {
        if (!(box.lo[i] < box.hi[i]))
            throw UsageError("--box ranges must satisfy lo < hi");
    }
    return box;
}

std::string format_real(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, end) : std::string("nan");
}

struct Options {
    std::string spec;
    std::size_t m = 0;
    std::vector<std::size_t> m_list;
    std::string target = "P";
    std::uint64_t seed = 0;
    std::size_t n = 1000;
    std::string box = "-5,5";
    std::string format;
    std::string out_path;
    double boundary_tol = kDefaultBoundaryTol;
    std::optional<double> epsilon;
    std::size_t samples = 256;
    std::optional<std::size_t> threshold_max;
};

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file)
        throw IoError("cannot open " + opt.out_path + " for writing");
    file << text;
    if (!file)
        throw IoError("failed writing " + opt.out_path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    if (opt.format.empty())
        return;
    for (const char* f : allowed) {
        if (opt.format == f)
            return;
    }
    throw UsageError("--format " + opt.format + " is not supported by this command");
}

std::string cmd_seq(const Options& opt) {
    require_format(opt, {"json", "csv"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const std::vector<double> seq = generate_sequence(spec, opt.m);
    if (opt.format == "json")
        return dump(Json{{"spec", io::to_json(spec)}, {"m", opt.m}, {"sequence", seq}});
    std::ostringstream s;
    if (opt.format == "csv") {
        s << "n,a_n\n";
        for (std::size_t i = 0; i < seq.size(); ++i)
            s << i << ',' << format_real(seq[i]) << '\n';
        return s.str();
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        s << (i ? " " : "") << format_real(seq[i]);
    s << '\n';
    return s.str();
}

PolynomialCoeffs target_poly(const RecurrenceSpec& spec, std::size_t m, const std::string& target) {
    if (target == "P")
        return taylor_poly(spec, m);
    if (target == "Pstar")
        return reciprocal_poly(taylor_poly(spec, m));
    return normalized_H(spec, m);
}

std::string cmd_roots(const Options& opt) {
    require_format(opt, {"json", "csv"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const PolynomialCoeffs poly = target_poly(spec, opt.m, opt.target);
    const RootSet rs = find_roots(poly.coeffs);
    if (opt.format == "csv") {
        std::ostringstream s;
        s << "index,re,im,modulus,residual\n";
        std::size_t idx = 0;
        for (std::size_t k = 0; k < rs.trailing_zero_multiplicity; ++k)
            s << idx++ << ",0,0,0,0\n";
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
            s << idx++ << ',' << format_real(rs.roots[k].real()) << ',' << format_real(rs.roots[k].imag()) << ','
              << format_real(std::abs(rs.roots[k])) << ',' << format_real(rs.residuals[k]) << '\n';
        }
        return s.str();
    }
    Json j{{"spec", io::to_json(spec)}, {"target", opt.target}, {"polynomial", io::to_json(poly)}};
    const Json roots_json = io::to_json(rs);
    for (const auto& [key, value] : roots_json.items())
        j[key] = value;
    return dump(j);
}

std::string cmd_classify(const Options& opt) {
    require_format(opt, {"json"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const CharacteristicData ch = characteristic(spec);
    return dump(Json{{"spec", io::to_json(spec)},
                     {"characteristic", io::to_json(ch)},
                     {"classification", io::to_json(classify(spec, ch))}});
}

std::string cmd_verify(const Options& opt) {
    require_format(opt, {"json"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const std::vector<std::size_t> ms = opt.m_list.empty() ? kDefaultMValues : opt.m_list;
    Json j = io::to_json(verify_instance(spec, ms, opt.boundary_tol));
    if (opt.threshold_max) {
        const auto threshold = find_threshold_m(spec, *opt.threshold_max, opt.boundary_tol);
        j["threshold_search"] = Json{{"m_max", *opt.threshold_max},
                                     {"threshold", threshold ? Json(*threshold) : Json(nullptr)}};
    }
    return dump(j);
}

std::string cmd_sweep(const Options& opt) {
    require_format(opt, {"json"});
    if (opt.n < 1)
        throw UsageError("--n must be at least 1");
    const std::vector<std::size_t> ms = opt.m_list.empty() ? std::vector<std::size_t>{50, 100} : opt.m_list;
    return dump(io::to_json(sweep(opt.seed, opt.n, parse_box(opt.box), ms, opt.boundary_tol)));
}

std::string cmd_rouche(const Options& opt) {
    require_format(opt, {"json"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const CharacteristicData ch = characteristic(spec);
    const std::size_t m = opt.m == 0 ? 100 : opt.m;
    const double eps = opt.epsilon.value_or(default_epsilon(ch));
    Json regimes = Json::array();
    for (RoucheRegime r : {RoucheRegime::ACNeg, RoucheRegime::ACPosCDNonneg, RoucheRegime::ACPosCDNeg}) {
        Json entry{{"regime", to_string(r)}, {"applicable", regime_applies(ch, r)}};
        if (regime_applies(ch, r)) {
            const double margin = rouche_margin(ch, m, eps, opt.samples, r);
            entry["margin"] = margin;
            entry["certified"] = margin > 0.0;
        } else {
            entry["margin"] = nullptr;
            entry["certified"] = nullptr;
        }
        regimes.push_back(entry);
    }
    return dump(Json{{"spec", io::to_json(spec)},
                     {"m", m},
                     {"epsilon", eps},
                     {"samples", opt.samples},
                     {"margin_scale", "divided by t2^(m+1)"},
                     {"regimes", regimes}});
}

std::string cmd_figure(const Options& opt) {
    require_format(opt, {"svg"});
    const RecurrenceSpec spec = parse_spec(opt.spec);
    const CharacteristicData ch = characteristic(spec);
    const std::size_t m = opt.m == 0 ? 10 : opt.m;
    const PolynomialCoeffs poly = target_poly(spec, m, opt.target);
    const RootSet rs = find_roots(poly.coeffs);

    ZeroPlot plot;
    plot.zeros.assign(rs.trailing_zero_multiplicity, cplx(0.0, 0.0));
    plot.zeros.insert(plot.zeros.end(), rs.roots.begin(), rs.roots.end());
    std::string name;
    if (opt.target == "H") {
        plot.circle_radius = std::abs(ch.t2);
        plot.circle_label = "|z| = |t2| = " + format_real(plot.circle_radius);
        name = "H";
    } else if (opt.target == "Pstar") {
        plot.circle_radius = 1.0 / ch.critical_radius;
        plot.circle_label = "|z| = 1/r* = " + format_real(plot.circle_radius);
        name = "P*";
    } else {
        plot.circle_radius = ch.critical_radius;
        plot.circle_label = "|z| = r* = " + format_real(plot.circle_radius);
        name = "P";
    }
    plot.title = "Zeros of " + name + "_" + std::to_string(m) + "(z), (a,b,c,a0,a1) = (" + format_real(spec.a) + ","
                 + format_real(spec.b) + "," + format_real(spec.c) + "," + format_real(spec.a0) + ","
                 + format_real(spec.a1) + ")";
    return render_zero_plot(plot);
}

// CLI11 treats a leading '-' in the next token as a new flag; glue values of
// value-taking flags that look like negative numbers onto the flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    static const std::vector<std::string> valued{"--spec", "--box", "--epsilon", "--boundary-tol"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const bool takes_value = std::find(valued.begin(), valued.end(), args[i]) != valued.end();
        if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-'
            && (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

void error_record(std::ostream& err, std::string_view name, int code, const std::string& message) {
    err << Json{{"error", name}, {"code", code}, {"message", message}}.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeros of Taylor polynomials of three-term recurrences", "tpzeros"};
    app.require_subcommand(1);
    Options opt;

    const auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", opt.spec, "a,b,c,a0,a1")->required();
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "json, csv or svg");
        sub->add_option("--out", opt.out_path, "write to file instead of stdout");
    };
    const auto add_target = [&](CLI::App* sub) {
        sub->add_option("--target", opt.target, "P, Pstar or H")->check(CLI::IsMember({"P", "Pstar", "H"}));
    };

    auto* seq = app.add_subcommand("seq", "print a_0 .. a_m");
    add_spec(seq);
    seq->add_option("--m", opt.m)->required();
    add_output(seq);

    auto* roots = app.add_subcommand("roots", "zeros of P_m, P*_m or H_m");
    add_spec(roots);
    roots->add_option("--m", opt.m)->required()->check(CLI::PositiveNumber);
    add_target(roots);
    add_output(roots);

    auto* cls = app.add_subcommand("classify", "which theorem applies, with hypothesis trace");
    add_spec(cls);
    add_output(cls);

    auto* verify = app.add_subcommand("verify", "check the theorem conclusion on computed zeros");
    add_spec(verify);
    verify->add_option("--m-list", opt.m_list, "m values (default 10,25,50,100)")->delimiter(',');
    verify->add_option("--boundary-tol", opt.boundary_tol);
    verify->add_option("--threshold-max", opt.threshold_max, "also search the empirical m threshold up to this m");
    add_output(verify);

    auto* sw = app.add_subcommand("sweep", "seeded randomized sweep over a parameter box");
    sw->add_option("--seed", opt.seed)->required();
    sw->add_option("--n", opt.n);
    sw->add_option("--box", opt.box, "lo,hi or ten values");
    sw->add_option("--m-list", opt.m_list, "m values (default 50,100)")->delimiter(',');
    sw->add_option("--boundary-tol", opt.boundary_tol);
    add_output(sw);

    auto* rouche = app.add_subcommand("rouche", "Rouché margins on the circle |z| = t2 +- eps");
    add_spec(rouche);
    rouche->add_option("--m", opt.m, "default 100");
    rouche->add_option("--epsilon", opt.epsilon, "default min(0.01, (t2-1)/10)");
    rouche->add_option("--samples", opt.samples)->check(CLI::Range(8, 1 << 20));
    add_output(rouche);

    auto* fig = app.add_subcommand("figure", "SVG scatter of zeros with the reference circle");
    add_spec(fig);
    fig->add_option("--m", opt.m, "default 10");
    opt.target = "P";
    add_target(fig);
    add_output(fig);

    std::vector<std::string> reversed = glue_negative_values(args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        fig->parse_complete_callback([&] {
            if (fig->count("--target") == 0)
                opt.target = "H";
        });
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        error_record(err, "UsageError", kUsageExit, e.what());
        return kUsageExit;
    }

    try {
        std::string text;
        if (*seq)
            text = cmd_seq(opt);
        else if (*roots)
            text = cmd_roots(opt);
        else if (*cls)
            text = cmd_classify(opt);
        else if (*verify)
            text = cmd_verify(opt);
        else if (*sw)
            text = cmd_sweep(opt);
        else if (*rouche)
            text = cmd_rouche(opt);
        else
            text = cmd_figure(opt);
        emit(opt, out, text);
    } catch (const Error& e) {
        error_record(err, to_string(e.code()), static_cast<int>(e.code()), e.what());
        return static_cast<int>(e.code());
    } catch (const UsageError& e) {
        error_record(err, "UsageError", kUsageExit, e.what());
        return kUsageExit;
    } catch (const IoError& e) {
        error_record(err, "IoError", kIoExit, e.what());
        return kIoExit;
    }
    return 0;
}

} // namespace tpz::cli
