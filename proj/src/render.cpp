#include "folia/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace folia {

namespace {

double to_double(const Rat& q) { return q.convert_to<double>(); }

double to_double(const AlgReal& a) { return std::stod(to_float(a, 12)); }

double eval_double(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<double> double_coeffs(const UniPoly& p) {
    std::vector<double> c;
    c.reserve(p.c.size());
    for (const auto& v : p.c) c.push_back(to_double(v));
    return c;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

constexpr const char* kPalette[] = {
    "#4363d8", "#e6194b", "#3cb44b", "#f58231", "#911eb4",
    "#008080", "#9a6324", "#800000", "#808000", "#000075",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

// One curve to draw: a leaf's level plus either a vertical position or a
// graph over an x-range.
struct DrawItem {
    enum class Kind { Vertical, Inner, Region };
    Kind kind = Kind::Region;
    double level = 0.0;
    double x = 0.0;                 // Vertical
    double x_lo = 0.0, x_hi = 0.0;  // Graph range before viewport clipping
};

}  // namespace

Viewport Viewport::standard() {
    Viewport vp;
    vp.x_min = Rat(-4);
    vp.x_max = Rat(4);
    vp.y_min = Rat(-4);
    vp.y_max = Rat(4);
    return vp;
}

std::string render_svg(const Configuration& conf, const Viewport& vp) {
    if (!(vp.x_min < vp.x_max) || !(vp.y_min < vp.y_max) || vp.width_px == 0 ||
        vp.height_px == 0)
        throw EmptyViewport("viewport window has no area");
    const unsigned samples = std::max(16u, vp.samples_per_curve);

    const double x0 = to_double(vp.x_min), x1 = to_double(vp.x_max);
    const double y0 = to_double(vp.y_min), y1 = to_double(vp.y_max);
    const double w = static_cast<double>(vp.width_px);
    const double h = static_cast<double>(vp.height_px);
    const double blow_up = 10.0 * (y1 - y0);
    auto px = [&](double x) { return (x - x0) / (x1 - x0) * w; };
    auto py = [&](double y) { return (y1 - y) / (y1 - y0) * h; };

    const int k = conf.root_count();
    std::vector<double> roots_d;
    for (const auto& z : conf.roots) roots_d.push_back(to_double(z));
    auto strip_range = [&](int strip) {
        DrawItem it;
        it.x_lo = strip > 0 ? roots_d[static_cast<size_t>(strip - 1)] : x0;
        it.x_hi = strip < k ? roots_d[static_cast<size_t>(strip)] : x1;
        return it;
    };

    std::vector<DrawItem> items;
    if (k == 0) {
        double base = to_double(conf.map.r.eval(Rat(0)));
        for (int off = -2; off <= 2; ++off) {
            DrawItem it = strip_range(0);
            it.kind = DrawItem::Kind::Region;
            it.level = base + off;
            items.push_back(it);
        }
    } else {
        for (int j = 0; j < k; ++j) {
            DrawItem it;
            it.kind = DrawItem::Kind::Vertical;
            it.x = roots_d[static_cast<size_t>(j)];
            it.level = to_double(conf.boundary_values[static_cast<size_t>(j)]);
            items.push_back(it);
        }
        for (const auto& si : separatrices(conf)) {
            if (si.id.kind != SeparatrixId::Kind::Inner) continue;
            DrawItem it = strip_range(si.id.index);
            it.kind = DrawItem::Kind::Inner;
            it.level = to_double(si.level);
            items.push_back(it);
        }
        for (const auto& reg : conf.regions) {
            DrawItem it = strip_range(reg.strip);
            it.kind = DrawItem::Kind::Region;
            bool lb = reg.lower.kind == LevelBound::Kind::Finite;
            bool ub = reg.upper.kind == LevelBound::Kind::Finite;
            double lo = lb ? to_double(*reg.lower.value) : 0.0;
            double hi = ub ? to_double(*reg.upper.value) : 0.0;
            if (lb && ub) it.level = (lo + hi) / 2.0;
            else if (ub) it.level = hi - 1.0;
            else if (lb) it.level = lo + 1.0;
            items.push_back(it);
        }
    }

    // Distinct levels, ascending, give the stroke classes.
    std::vector<double> levels;
    for (const auto& it : items) levels.push_back(it.level);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    auto level_class = [&](double lv) {
        size_t i = static_cast<size_t>(
            std::lower_bound(levels.begin(), levels.end(), lv) - levels.begin());
        return "level-" + std::to_string(i);
    };

    const std::vector<double> rc = double_coeffs(conf.map.r);
    const std::vector<double> sc = double_coeffs(conf.map.s);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(vp.width_px) + "\" height=\"" + std::to_string(vp.height_px) +
           "\" viewBox=\"0 0 " + std::to_string(vp.width_px) + " " +
           std::to_string(vp.height_px) + "\">\n";
    svg += "<style>\n";
    svg += ".separatrix-vertical { fill: none; stroke-width: 1.5; stroke-dasharray: 6 4; }\n";
    svg += ".separatrix-inner { fill: none; stroke-width: 2.5; }\n";
    svg += ".region { fill: none; stroke-width: 1; }\n";
    for (size_t i = 0; i < levels.size(); ++i)
        svg += ".level-" + std::to_string(i) + " { stroke: " + kPalette[i % kPaletteSize] +
               "; }\n";
    svg += "</style>\n";
    svg += "<clipPath id=\"vp\"><rect x=\"0\" y=\"0\" width=\"" +
           std::to_string(vp.width_px) + "\" height=\"" + std::to_string(vp.height_px) +
           "\"/></clipPath>\n";
    svg += "<g clip-path=\"url(#vp)\">\n";

    for (const auto& it : items) {
        if (it.kind == DrawItem::Kind::Vertical) {
            svg += "<line class=\"separatrix-vertical " + level_class(it.level) +
                   "\" x1=\"" + fmt(px(it.x)) + "\" y1=\"0\" x2=\"" + fmt(px(it.x)) +
                   "\" y2=\"" + fmt(h) + "\"/>\n";
            continue;
        }
        double lo = std::max(it.x_lo, x0);
        double hi = std::min(it.x_hi, x1);
        std::string d;
        bool in_chunk = false;
        if (lo < hi) {
            for (unsigned i = 0; i < samples; ++i) {
                double t = static_cast<double>(i) / static_cast<double>(samples - 1);
                double x = lo + (hi - lo) * t;
                double sv = eval_double(sc, x);
                double y = sv == 0.0 ? std::numeric_limits<double>::infinity()
                                     : (it.level - eval_double(rc, x)) / sv;
                if (!std::isfinite(y) || std::fabs(y) > blow_up) {
                    in_chunk = false;
                    continue;
                }
                d += in_chunk ? " L " : (d.empty() ? "M " : " M ");
                d += fmt(px(x)) + " " + fmt(py(y));
                in_chunk = true;
            }
        }
        const char* cls = it.kind == DrawItem::Kind::Inner ? "separatrix-inner" : "region";
        svg += "<path class=\"" + std::string(cls) + " " + level_class(it.level) +
               "\" d=\"" + d + "\"/>\n";
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace folia
