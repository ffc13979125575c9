#include "mvss/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace mvss {

namespace {

constexpr double size = 400, margin = 20;

struct XY {
    double x, y;
};

XY screen(double a, double b) { return {margin + a * size, margin + (1 - b) * size}; }
XY screen(const RPoint& p) { return screen(to_double(p[0]), to_double(p[1])); }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string polyline(const std::vector<XY>& pts, const char* tag, const std::string& style) {
    std::string s = std::string("<") + tag + " points=\"";
    for (const auto& p : pts) s += num(p.x) + "," + num(p.y) + " ";
    return s + "\" " + style + "/>\n";
}

std::string circle(XY c, double r, const std::string& style) {
    return "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) + "\" " + style + "/>\n";
}

// Unit direction in the plane; rational or symbolic.
std::optional<std::pair<double, double>> unit_direction(const DirectionVerdict& d) {
    double a, b;
    if (d.kind == DirectionVerdict::Kind::Rational) {
        a = to_double(d.u[0]);
        b = to_double(d.u[1]);
    } else if (d.kind == DirectionVerdict::Kind::Irrational) {
        a = d.symbolic[0].approx();
        b = d.symbolic[1].approx();
    } else {
        return std::nullopt;
    }
    double n = std::hypot(a, b);
    return std::make_pair(a / n, b / n);
}

}  // namespace

std::string render_svg(const ClosedSetDesc& x, const std::vector<TangentWitness>& report, const NotSssWitness* witness) {
    if (x.arity() != 2) throw ArityError("SVG output needs a set in two variables");
    const double full = size + 2 * margin;
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(full) + "\" height=\"" + num(full) +
                    "\" viewBox=\"0 0 " + num(full) + " " + num(full) + "\">\n";
    s += polyline({screen(0, 0), screen(1, 0), screen(1, 1), screen(0, 1)}, "polygon", "fill=\"none\" stroke=\"#888\"");
    for (const auto& p : x.polytopes()) {
        const auto& v = p.vertices();
        if (v.size() == 1) {
            s += circle(screen(v[0]), 3, "fill=\"#4a7\"");
            continue;
        }
        // order the vertices around their centroid
        double cx = 0, cy = 0;
        for (const auto& q : v) {
            cx += to_double(q[0]) / v.size();
            cy += to_double(q[1]) / v.size();
        }
        std::vector<RPoint> ord = v;
        std::sort(ord.begin(), ord.end(), [&](const RPoint& a, const RPoint& b) {
            return std::atan2(to_double(a[1]) - cy, to_double(a[0]) - cx) < std::atan2(to_double(b[1]) - cy, to_double(b[0]) - cx);
        });
        std::vector<XY> pts;
        for (const auto& q : ord) pts.push_back(screen(q));
        s += polyline(pts, "polygon", "fill=\"#bde5c8\" stroke=\"#4a7\" stroke-width=\"2\"");
    }
    for (const auto& q : x.sequences()) {
        for (const auto& d : q.differences(q.start(), 50)) s += circle(screen(add(q.limit(), d)), 2, "fill=\"#226\"");
        s += circle(screen(q.limit()), 3.5, "fill=\"none\" stroke=\"#226\"");
    }
    for (const auto& t : report) {
        auto u = unit_direction(t.direction);
        if (!u) continue;
        XY a = screen(t.x);
        const double len = 0.5, eps = 0.25, c = 0.9, sn = std::sqrt(1 - c * c);
        XY b = screen(to_double(t.x[0]) + len * u->first, to_double(t.x[1]) + len * u->second);
        s += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
             "\" stroke=\"#c60\" stroke-dasharray=\"4 3\"/>\n";
        // isosceles triangle conv(x, p, q) of height eps and half-angle acos(c)
        const double h = eps, w = eps * sn / c;
        auto corner = [&](double side) {
            return screen(to_double(t.x[0]) + h * u->first - side * w * u->second,
                          to_double(t.x[1]) + h * u->second + side * w * u->first);
        };
        s += polyline({a, corner(1), corner(-1)}, "polygon", "fill=\"#c60\" fill-opacity=\"0.15\" stroke=\"#c60\"");
    }
    if (witness) {
        XY a = screen(witness->x), b = screen(axpy(witness->x, witness->lambda, witness->u));
        s += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) +
             "\" stroke=\"#d22\" stroke-width=\"3\"/>\n";
    }
    return s + "</svg>\n";
}

}  // namespace mvss
