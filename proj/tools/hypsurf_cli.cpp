#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "figure_svg.hpp"
#include "hypsurf/detail/kernel.hpp"
#include "hypsurf/geometry.hpp"
#include "hypsurf/group.hpp"
#include "hypsurf/identities.hpp"
#include "hypsurf/invariants.hpp"
#include "hypsurf/json_io.hpp"
#include "hypsurf/surfaces.hpp"

namespace {

constexpr const char* tool_version = "hypsurf 1.0.0";

using hypsurf::json;

struct Run {
    std::string surface;
    std::string out;
    std::string figure_path;
    std::string format = "json";
    std::string precision = "double";
    std::string point = "0,1";
    std::string box = "-1,1,0.1,3";
    std::string window = "-2.5,2.5,2.2";
    int depth = -1;
    int grid = 60;
    int refine = 3;
    double cutoff = -1;
    double assert_near = std::numeric_limits<double>::quiet_NaN();
    double tol = 1e-9;
    double assert_rel = std::numeric_limits<double>::quiet_NaN();
};

struct Loaded {
    hypsurf::FuchsianGroup group;
    std::optional<hypsurf::SurfaceSpec> spec;
};

std::string spec_file_text(const json& doc) {
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "sphere3") return kind;
    std::string text = kind + ":";
    const auto& params = doc.at("params");
    for (std::size_t k = 0; k < params.size(); ++k) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s%.17g", k ? "," : "", params[k].get<double>());
        text += buf;
    }
    return text;
}

Loaded load_surface(const std::string& arg) {
    Loaded out;
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            hypsurf::fail(hypsurf::errc::parse_error, "surface file " + arg + ": " + e.what());
        }
        if (doc.contains("generators")) {
            out.group = hypsurf::group_from_json(doc);
            return out;
        }
        out.spec = hypsurf::parse_surface_spec(spec_file_text(doc));
    } else {
        out.spec = hypsurf::parse_surface_spec(arg);
    }
    out.group = hypsurf::build_surface(*out.spec);
    return out;
}

// Normalizes at a stored cusp, a parabolic generator, or the commutator.
hypsurf::FuchsianGroup cusp_normalized(const hypsurf::FuchsianGroup& G, int depth) {
    using namespace hypsurf;
    if (G.cusp && G.cusp->normalized) return G;
    if (G.cusp && !G.cusp->peripheral.empty()) return cusp_normalize(G, G.cusp->peripheral, depth);
    for (std::size_t i = 0; i < G.generators.size(); ++i)
        if (classify(G.generators[i]) == MapClass::Parabolic)
            return cusp_normalize(G, Word{{static_cast<int>(i + 1)}}, depth);
    if (G.generators.size() == 2) {
        Word comm{{1, 2, -1, -2}};
        if (classify(evaluate(G, comm)) == MapClass::Parabolic)
            return cusp_normalize(G, comm, depth);
    }
    fail(errc::no_cusp, "surface has no parabolic to normalize at");
}

std::vector<double> parse_reals(const std::string& text, std::size_t want, const char* what) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            vals.push_back(std::stod(part));
        } catch (const std::exception&) {
            hypsurf::fail(hypsurf::errc::parse_error, std::string(what) + ": bad number " + part);
        }
    }
    if (vals.size() != want)
        hypsurf::fail(hypsurf::errc::parse_error,
                      std::string(what) + ": expected " + std::to_string(want) + " numbers");
    return vals;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) hypsurf::fail(hypsurf::errc::io_error, "cannot write " + path);
    f << text;
}

std::string csv_sibling(const std::string& out) {
    if (out.empty())
        hypsurf::fail(hypsurf::errc::io_error, "--format csv needs --out to name the files");
    std::filesystem::path p(out);
    p.replace_extension(".csv");
    return p.string();
}

hypsurf::detail::tmat<long double> eval_extended(const hypsurf::FuchsianGroup& G,
                                                 const hypsurf::Word& w) {
    auto m = hypsurf::detail::ident<long double>();
    for (int l : w.letters) {
        const auto& g = G.generators.at(static_cast<std::size_t>(std::abs(l)) - 1);
        hypsurf::detail::tmat<long double> t{g.a, g.b, g.c, g.d};
        m = hypsurf::detail::mul(m, l > 0 ? t : hypsurf::detail::inv(t));
    }
    return m;
}

double class_length_extended(const hypsurf::FuchsianGroup& G, const hypsurf::Word& w) {
    long double t = hypsurf::detail::tr(eval_extended(G, w));
    return static_cast<double>(2 * std::acosh(std::fabs(t) / 2));
}

double displacement_extended(const hypsurf::FuchsianGroup& G, const hypsurf::Word& w,
                             const hypsurf::HPoint& p) {
    auto m = eval_extended(G, w);
    long double x = p.x, y = p.y;
    long double den = (m.c * x + m.d) * (m.c * x + m.d) + m.c * m.c * y * y;
    long double x2 = ((m.a * x + m.b) * (m.c * x + m.d) + m.a * m.c * y * y) / den;
    long double y2 = y / den;
    long double c = 1 + ((x - x2) * (x - x2) + (y - y2) * (y - y2)) / (2 * y * y2);
    return static_cast<double>(std::acosh(c));
}

double radius_extended(const hypsurf::FuchsianGroup& G, const std::vector<hypsurf::Word>& words,
                       const hypsurf::HPoint& p, double fallback) {
    if (words.empty()) return fallback;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : words) best = std::min(best, displacement_extended(G, w, p));
    return best / 2;
}

struct ExtendedSum {
    long double total = 0, carry = 0;

    void add(long double v) {
        long double y = v - carry;
        long double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

json envelope(const json& config, json report) {
    json doc;
    doc["version"] = tool_version;
    doc["config"] = config;
    doc["report"] = std::move(report);
    return doc;
}

json base_config(const char* command, const Run& r) {
    json c;
    c["command"] = command;
    c["surface"] = r.surface;
    c["precision"] = r.precision;
    c["format"] = r.format;
    if (!r.out.empty()) c["out"] = r.out;
    if (!r.figure_path.empty()) c["figure"] = r.figure_path;
    return c;
}

void maybe_emit_figure(const Run& r, const hypsurf::FuchsianGroup& G) {
    if (r.figure_path.empty()) return;
    hypsurf::figure::Options opt;
    auto w = parse_reals(r.window, 3, "--window");
    opt.x_min = w[0];
    opt.x_max = w[1];
    opt.y_max = w[2];
    hypsurf::figure::Counts counts;
    write_text(r.figure_path, hypsurf::figure::render(G, opt, counts));
}

// Writes report (and CSV when asked), then checks the assertions; the report
// file is produced even when an assertion downgrades the exit code to 2.
int finish(const Run& r, const json& config, json report, double headline,
           const char* headline_name, std::optional<std::pair<double, double>> residual_target,
           const std::string& csv = {}) {
    if (r.format == "csv") {
        if (csv.empty())
            hypsurf::fail(hypsurf::errc::domain_error,
                          "this command has no CSV table; use --format json");
        write_text(csv_sibling(r.out), csv);
    }
    write_text(r.out, envelope(config, std::move(report)).dump(2) + "\n");
    int code = 0;
    if (!std::isnan(r.assert_near)) {
        if (!(std::fabs(headline - r.assert_near) <= r.tol)) {
            std::fprintf(stderr, "assert-near failed: %s = %.15g, want %.15g within %g\n",
                         headline_name, headline, r.assert_near, r.tol);
            code = 2;
        }
    }
    if (!std::isnan(r.assert_rel)) {
        if (!residual_target)
            hypsurf::fail(hypsurf::errc::domain_error,
                          "--assert-rel-residual only applies to verify commands");
        double rel = std::fabs(residual_target->first / residual_target->second);
        if (!(rel <= r.assert_rel)) {
            std::fprintf(stderr, "assert-rel-residual failed: |%.3e / %.15g| = %.3e > %g\n",
                         residual_target->first, residual_target->second, rel, r.assert_rel);
            code = 2;
        }
    }
    return code;
}

int run_systole(const Run& r) {
    Loaded S = load_surface(r.surface);
    int depth = r.depth < 0 ? 8 : r.depth;
    double cutoff = r.cutoff < 0 ? 8 : r.cutoff;
    double trace_bound = 2 * std::cosh(cutoff / 2);
    auto rep = hypsurf::systoles(S.group, depth, trace_bound);
    json body = hypsurf::systole_report_to_json(rep);
    double headline = rep.nonsimple_length.value_or(rep.length);
    if (r.precision == "extended") {
        body["length"] = class_length_extended(S.group, rep.shortest.rep);
        if (rep.nonsimple_shortest) {
            headline = class_length_extended(S.group, rep.nonsimple_shortest->rep);
            body["nonsimple_length"] = headline;
        } else {
            headline = body["length"].get<double>();
        }
    }
    json config = base_config("systole", r);
    config["depth"] = depth;
    config["cutoff"] = cutoff;
    config["trace_bound"] = trace_bound;
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), headline, "nonsimple_length", std::nullopt);
}

int run_cusp_area(const Run& r) {
    Loaded S = load_surface(r.surface);
    int depth = r.depth < 0 ? 6 : r.depth;
    auto N = cusp_normalized(S.group, depth);
    auto mc = hypsurf::maximal_cusp(N, depth);
    json body = hypsurf::maximal_cusp_to_json(mc, N.cusp->omega);
    double headline = mc.area;
    if (r.precision == "extended") {
        long double c = std::fabs(eval_extended(N, mc.witness).c);
        body["min_c"] = static_cast<double>(c);
        body["height"] = static_cast<double>(1 / c);
        headline = static_cast<double>(N.cusp->omega * c);
        body["area"] = headline;
    }
    json config = base_config("cusp-area", r);
    config["depth"] = depth;
    maybe_emit_figure(r, N);
    return finish(r, config, std::move(body), headline, "area", std::nullopt);
}

int run_injrad(const Run& r) {
    Loaded S = load_surface(r.surface);
    int depth = r.depth < 0 ? 8 : r.depth;
    auto pt = parse_reals(r.point, 2, "--point");
    hypsurf::HPoint p{pt[0], pt[1]};
    auto rep = hypsurf::injrad_at(S.group, p, depth);
    json body = hypsurf::injrad_report_to_json(rep);
    double headline = rep.radius;
    if (r.precision == "extended") {
        headline = radius_extended(S.group, rep.realizing_words, p, rep.radius);
        body["radius"] = headline;
    }
    json config = base_config("injrad", r);
    config["depth"] = depth;
    config["point"] = {{"x", p.x}, {"y", p.y}};
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), headline, "radius", std::nullopt);
}

int run_sup_injrad(const Run& r) {
    Loaded S = load_surface(r.surface);
    int depth = r.depth < 0 ? 8 : r.depth;
    auto b = parse_reals(r.box, 4, "--box");
    hypsurf::SamplingBox region{b[0], b[1], b[2], b[3]};
    auto rep = hypsurf::sup_injrad(S.group, region, r.grid, r.refine, depth);
    json body = hypsurf::sup_injrad_report_to_json(rep);
    double headline = rep.lower;
    if (r.precision == "extended") {
        headline = radius_extended(S.group, rep.at_argmax.realizing_words, rep.argmax, rep.lower);
        body["lower"] = headline;
        body["at_argmax"]["radius"] = headline;
    }
    json config = base_config("sup-injrad", r);
    config["depth"] = depth;
    config["grid"] = r.grid;
    config["refine"] = r.refine;
    config["box"] = {b[0], b[1], b[2], b[3]};
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), headline, "lower", std::nullopt);
}

int run_verify_mcshane(const Run& r) {
    Loaded S = load_surface(r.surface);
    if (!S.spec || S.spec->kind != hypsurf::SurfaceSpec::OneHoledTorus)
        hypsurf::fail(hypsurf::errc::domain_error, "verify-mcshane needs a torus1 surface spec");
    double cutoff = r.cutoff < 0 ? 25 : r.cutoff;
    auto rep = hypsurf::verify_mcshane(*S.spec, cutoff);
    auto lines = hypsurf::simple_torus_spectrum(*S.spec, cutoff);
    json body = hypsurf::identity_report_to_json(rep);
    std::string csv;
    if (r.format == "csv") {
        csv = "p,q,trace,length,term\n";
        char buf[160];
        for (const auto& s : lines) {
            double term = hypsurf::mcshane_term_D(rep.target_alternative, s.length, s.length);
            std::snprintf(buf, sizeof buf, "%lld,%lld,%.17g,%.17g,%.17g\n", s.p, s.q, s.trace,
                          s.length, term);
            csv += buf;
        }
    }
    if (r.precision == "extended") {
        long double b1 = rep.target_alternative;
        ExtendedSum sum;
        for (const auto& s : lines) {
            long double l = s.length;
            sum.add(2 * std::log1p(2 * std::sinh(b1 / 2) / (std::exp(-b1 / 2) + std::exp(l))));
        }
        double total = static_cast<double>(sum.total);
        body["partial_sum"] = total;
        body["residuals"]["paper"] = rep.target_paper - total;
        body["residuals"]["alternative"] = rep.target_alternative - total;
        rep.partial_sum = total;
        rep.residual_paper = rep.target_paper - total;
        rep.residual_alternative = rep.target_alternative - total;
    }
    bool paper = rep.convention_selected == "paper";
    auto residual_target =
        paper ? std::pair{rep.residual_paper, rep.target_paper}
              : std::pair{rep.residual_alternative, rep.target_alternative};
    json config = base_config("verify-mcshane", r);
    config["cutoff"] = cutoff;
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), rep.partial_sum, "partial_sum", residual_target,
                  csv);
}

int run_verify_bridgeman(const Run& r) {
    Loaded S = load_surface(r.surface);
    if (!S.spec || S.spec->kind != hypsurf::SurfaceSpec::PairOfPants)
        hypsurf::fail(hypsurf::errc::domain_error, "verify-bridgeman needs a pants surface spec");
    double cutoff = r.cutoff < 0 ? 16 : r.cutoff;
    int depth = r.depth < 0 ? 11 : r.depth;
    auto rep = hypsurf::verify_bridgeman(*S.spec, cutoff, depth);
    json body = hypsurf::identity_report_to_json(rep);
    std::string csv;
    bool need_arcs = r.format == "csv" || r.precision == "extended";
    std::vector<hypsurf::Orthogeodesic> arcs;
    if (need_arcs) arcs = hypsurf::orthogeodesic_spectrum(*S.spec, cutoff, depth);
    if (r.format == "csv") {
        csv = "i,j,length,foot_i,foot_j,term\n";
        char buf[160];
        for (const auto& a : arcs) {
            double c = std::cosh(a.length / 2);
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", a.i, a.j, a.length,
                          a.foot_i, a.foot_j, hypsurf::rogers_dilog(1 / (c * c)));
            csv += buf;
        }
    }
    if (r.precision == "extended") {
        ExtendedSum sum;
        for (const auto& a : arcs) {
            double c = std::cosh(a.length / 2);
            sum.add(hypsurf::rogers_dilog(1 / (c * c)));
        }
        double total = static_cast<double>(sum.total);
        body["partial_sum"] = total;
        body["residuals"]["paper"] = rep.target_paper - total;
        body["residuals"]["alternative"] = rep.target_paper - total;
        rep.partial_sum = total;
        rep.residual_paper = rep.target_paper - total;
    }
    json config = base_config("verify-bridgeman", r);
    config["cutoff"] = cutoff;
    config["depth"] = depth;
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), rep.partial_sum, "partial_sum",
                  std::pair{rep.residual_paper, rep.target_paper}, csv);
}

int run_spectrum(const Run& r) {
    Loaded S = load_surface(r.surface);
    json config = base_config("spectrum", r);
    char buf[160];
    if (S.spec && S.spec->kind == hypsurf::SurfaceSpec::OneHoledTorus) {
        double cutoff = r.cutoff < 0 ? 12 : r.cutoff;
        auto lines = hypsurf::simple_torus_spectrum(*S.spec, cutoff);
        json body;
        body["kind"] = "simple_torus_spectrum";
        body["count"] = lines.size();
        json rows = hypsurf::torus_spectrum_to_json(lines);
        if (r.precision == "extended")
            for (auto& row : rows) {
                long double t = row["trace"].get<double>();
                row["length"] = static_cast<double>(2 * std::acosh(std::fabs(t) / 2));
            }
        body["lines"] = std::move(rows);
        std::string csv;
        if (r.format == "csv") {
            csv = "p,q,trace,length\n";
            for (const auto& s : lines) {
                std::snprintf(buf, sizeof buf, "%lld,%lld,%.17g,%.17g\n", s.p, s.q, s.trace,
                              s.length);
                csv += buf;
            }
        }
        config["cutoff"] = cutoff;
        double headline = lines.empty() ? 0 : lines.front().length;
        maybe_emit_figure(r, S.group);
        return finish(r, config, std::move(body), headline, "shortest_length", std::nullopt, csv);
    }
    double cutoff = r.cutoff < 0 ? 8 : r.cutoff;
    int depth = r.depth < 0 ? 6 : r.depth;
    double trace_bound = 2 * std::cosh(cutoff / 2);
    auto classes = hypsurf::conjugacy_classes(S.group, trace_bound, depth);
    json body;
    body["kind"] = "length_spectrum";
    body["count"] = classes.size();
    json rows = json::array();
    for (const auto& cls : classes) {
        json row = hypsurf::conj_class_to_json(cls);
        if (r.precision == "extended")
            row["length"] = class_length_extended(S.group, cls.rep);
        rows.push_back(std::move(row));
    }
    body["classes"] = std::move(rows);
    std::string csv;
    if (r.format == "csv") {
        csv = "rep,trace,length\n";
        for (const auto& cls : classes) {
            std::snprintf(buf, sizeof buf, "\"%s\",%.17g,%.17g\n",
                          hypsurf::to_string(cls.rep).c_str(), cls.trace, cls.length);
            csv += buf;
        }
    }
    config["cutoff"] = cutoff;
    config["depth"] = depth;
    config["trace_bound"] = trace_bound;
    double headline = classes.empty() ? 0 : classes.front().length;
    maybe_emit_figure(r, S.group);
    return finish(r, config, std::move(body), headline, "shortest_length", std::nullopt, csv);
}

int run_figure(const Run& r) {
    Loaded S = load_surface(r.surface);
    if (r.figure_path.empty())
        hypsurf::fail(hypsurf::errc::domain_error, "figure needs --figure <path.svg>");
    hypsurf::figure::Options opt;
    opt.depth = r.depth < 0 ? 3 : r.depth;
    auto w = parse_reals(r.window, 3, "--window");
    opt.x_min = w[0];
    opt.x_max = w[1];
    opt.y_max = w[2];
    hypsurf::figure::Counts counts;
    write_text(r.figure_path, hypsurf::figure::render(S.group, opt, counts));
    json body;
    body["svg"] = r.figure_path;
    body["depth"] = opt.depth;
    body["isometric_circles"] = counts.isometric_circles;
    body["axes"] = counts.axes;
    body["horodisks"] = counts.horodisks;
    json config = base_config("figure", r);
    config["depth"] = opt.depth;
    config["window"] = {w[0], w[1], w[2]};
    if (!std::isnan(r.assert_near))
        hypsurf::fail(hypsurf::errc::domain_error, "figure has no value to assert on");
    return finish(r, config, std::move(body), 0, "none", std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fuchsian group toolkit for the upper half-plane"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    Run r;

    auto add_common = [&r](CLI::App* cmd) {
        cmd->add_option("--surface", r.surface,
                        "sphere3 | torus1:x,y,z | pants:a,b,c | path to a JSON spec or group file")
            ->required();
        cmd->add_option("--out", r.out, "report path (stdout when omitted)");
        cmd->add_option("--format", r.format, "json, or csv to also write a term table")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--precision", r.precision,
                        "extended re-runs headline scalars in long double")
            ->check(CLI::IsMember({"double", "extended"}));
        cmd->add_option("--figure", r.figure_path, "also draw the surface as SVG");
        cmd->add_option("--assert-near", r.assert_near, "exit 2 unless the headline value is near");
        cmd->add_option("--tol", r.tol, "tolerance for --assert-near (default 1e-9)");
    };

    auto* systole = app.add_subcommand("systole", "shortest and shortest non-simple geodesic");
    add_common(systole);
    systole->add_option("--depth", r.depth, "word-ball depth (default 8)");
    systole->add_option("--cutoff", r.cutoff, "length cutoff for the class list (default 8)");

    auto* cusp_area = app.add_subcommand("cusp-area", "maximal embedded cusp region");
    add_common(cusp_area);
    cusp_area->add_option("--depth", r.depth, "word-ball depth (default 6)");

    auto* injrad = app.add_subcommand("injrad", "injectivity radius at a point");
    add_common(injrad);
    injrad->add_option("--depth", r.depth, "word-ball depth (default 8)");
    injrad->add_option("--point", r.point, "basepoint x,y (default 0,1)");

    auto* sup_injrad = app.add_subcommand("sup-injrad", "supremum of the injectivity radius");
    add_common(sup_injrad);
    sup_injrad->add_option("--depth", r.depth, "word-ball depth (default 8)");
    sup_injrad->add_option("--grid", r.grid, "sampling grid per side (default 60)");
    sup_injrad->add_option("--refine", r.refine, "simplex ascent restarts (default 3)");
    sup_injrad->add_option("--box", r.box, "sampling box x_min,x_max,y_min,y_max");

    auto* mcshane = app.add_subcommand("verify-mcshane", "McShane identity partial sums");
    add_common(mcshane);
    mcshane->add_option("--cutoff", r.cutoff, "simple-length cutoff (default 25)");
    mcshane->add_option("--assert-rel-residual", r.assert_rel,
                        "exit 2 unless |residual/target| is below");

    auto* bridgeman = app.add_subcommand("verify-bridgeman", "Bridgeman identity partial sums");
    add_common(bridgeman);
    bridgeman->add_option("--cutoff", r.cutoff, "orthogeodesic length cutoff (default 16)");
    bridgeman->add_option("--depth", r.depth, "conjugator depth (default 11)");
    bridgeman->add_option("--assert-rel-residual", r.assert_rel,
                          "exit 2 unless |residual/target| is below");

    auto* spectrum = app.add_subcommand(
        "spectrum", "simple spectrum by slope (torus1) or length spectrum (other surfaces)");
    add_common(spectrum);
    spectrum->add_option("--cutoff", r.cutoff, "length cutoff (default 12 torus, 8 generic)");
    spectrum->add_option("--depth", r.depth, "word-ball depth for the generic path (default 6)");

    auto* figure = app.add_subcommand("figure", "SVG of isometric circles, horodisks, and axes");
    add_common(figure);
    figure->add_option("--depth", r.depth, "word-ball depth (default 3)");
    figure->add_option("--window", r.window, "view window x_min,x_max,y_max");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*systole) return run_systole(r);
        if (*cusp_area) return run_cusp_area(r);
        if (*injrad) return run_injrad(r);
        if (*sup_injrad) return run_sup_injrad(r);
        if (*mcshane) return run_verify_mcshane(r);
        if (*bridgeman) return run_verify_bridgeman(r);
        if (*spectrum) return run_spectrum(r);
        if (*figure) return run_figure(r);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
