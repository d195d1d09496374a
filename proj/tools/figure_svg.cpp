#include "figure_svg.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <set>

#include "hypsurf/geometry.hpp"

namespace hypsurf::figure {

namespace {

void appendf(std::string& s, const char* fmt, ...) {
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    s += buf;
}

long long quantize(double v) { return std::llround(v * 1e9); }

}  // namespace

std::string render(const FuchsianGroup& G, const Options& opt, Counts& counts) {
    double width = (opt.x_max - opt.x_min) * opt.scale;
    double height = opt.y_max * opt.scale;
    auto px = [&](double x) { return (x - opt.x_min) * opt.scale; };
    auto py = [&](double y) { return (opt.y_max - y) * opt.scale; };
    auto visible = [&](double center, double radius) {
        return center + radius > opt.x_min && center - radius < opt.x_max;
    };

    auto entries = ball(G, opt.depth);
    double min_c = std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        double c = std::fabs(e.map.c);
        if (c > 1e-9) min_c = std::min(min_c, c);
    }
    bool cusped = G.cusp.has_value() && G.cusp->normalized && std::isfinite(min_c);
    double h = cusped ? 1 / min_c : 0;

    std::string svg;
    appendf(svg,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
            "width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
            width, height, width, height);
    appendf(svg, "<rect width=\"%.0f\" height=\"%.0f\" fill=\"#ffffff\"/>\n", width, height);

    if (cusped) {
        appendf(svg,
                "<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.3f\" "
                "fill=\"#dcebdc\"/>\n",
                width, py(h));
        ++counts.horodisks;
        std::set<std::pair<long long, long long>> seen;
        for (const auto& e : entries) {
            double c = e.map.c;
            if (std::fabs(c) < 1e-9) continue;
            double base = e.map.a / c;
            double diam = 1 / (c * c * h);
            if (diam * opt.scale < 1 || !visible(base, diam / 2)) continue;
            if (!seen.insert({quantize(base), quantize(diam)}).second) continue;
            appendf(svg,
                    "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"#9dbf9d\" "
                    "fill-opacity=\"0.5\"/>\n",
                    px(base), py(diam / 2), diam / 2 * opt.scale);
            ++counts.horodisks;
        }
        appendf(svg,
                "<line x1=\"0\" y1=\"%.3f\" x2=\"%.0f\" y2=\"%.3f\" stroke=\"#6b8f6b\" "
                "stroke-width=\"1\"/>\n",
                py(h), width, py(h));
    }

    std::set<std::pair<long long, long long>> circles;
    for (const auto& e : entries) {
        if (std::fabs(e.map.c) < 1e-9) continue;
        Circle ic = isometric_circle(e.map);
        if (!visible(ic.center, ic.radius)) continue;
        if (!circles.insert({quantize(ic.center), quantize(ic.radius)}).second) continue;
        appendf(svg,
                "<path d=\"M %.3f %.3f A %.3f %.3f 0 0 1 %.3f %.3f\" fill=\"none\" "
                "stroke=\"#46698c\" stroke-width=\"1.2\"/>\n",
                px(ic.center - ic.radius), py(0), ic.radius * opt.scale, ic.radius * opt.scale,
                px(ic.center + ic.radius), py(0));
        ++counts.isometric_circles;
    }

    std::set<std::pair<long long, long long>> drawn_axes;
    for (const auto& e : entries) {
        if (e.word.empty() || classify(e.map) != MapClass::Hyperbolic) continue;
        Geodesic ax = axis(e.map);
        if (ax.vertical) {
            if (!drawn_axes.insert({quantize(ax.foot), -1}).second) continue;
            if (ax.foot < opt.x_min || ax.foot > opt.x_max) continue;
            appendf(svg,
                    "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#b65c32\" "
                    "stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n",
                    px(ax.foot), py(0), px(ax.foot), py(opt.y_max));
        } else {
            if (!drawn_axes.insert({quantize(ax.center), quantize(ax.radius)}).second) continue;
            if (!visible(ax.center, ax.radius)) continue;
            appendf(svg,
                    "<path d=\"M %.3f %.3f A %.3f %.3f 0 0 1 %.3f %.3f\" fill=\"none\" "
                    "stroke=\"#b65c32\" stroke-width=\"1\" stroke-dasharray=\"5 4\"/>\n",
                    px(ax.center - ax.radius), py(0), ax.radius * opt.scale,
                    ax.radius * opt.scale, px(ax.center + ax.radius), py(0));
        }
        ++counts.axes;
    }

    appendf(svg,
            "<line x1=\"0\" y1=\"%.3f\" x2=\"%.0f\" y2=\"%.3f\" stroke=\"#222222\" "
            "stroke-width=\"1.5\"/>\n",
            py(0), width, py(0));
    svg += "</svg>\n";
    return svg;
}

}  // namespace hypsurf::figure
