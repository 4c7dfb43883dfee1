#include "shi/plot.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "shi/errors.hpp"
#include "shi/records.hpp"

namespace shi {

namespace {

using Vec2 = std::array<double, 2>;
using Polygon = std::vector<Vec2>;

constexpr double kCanvas = 640.0;
constexpr double kMargin = 20.0;
// cells below this many square pixels are labeled by sequence only
constexpr double kSmallCell = 2500.0;

struct View {
    std::vector<std::vector<double>> basis;  // basis[axis][coordinate]
    double radius = 1.5;
};

View view_for(ArrangementFamily family, int n) {
    if (n == 2) {
        return {{{1.0, 0.0}, {0.0, 1.0}}, family == ArrangementFamily::ShiA ? 1.5 : 2.25};
    }
    const double a = 1.0 / std::sqrt(2.0);
    const double b = 1.0 / std::sqrt(6.0);
    return {{{a, -a, 0.0}, {b, b, -2.0 * b}}, 1.8};
}

// The half-plane {p : a·p >= b} seen through the view.
struct HalfPlane {
    Vec2 a;
    double b;
};

HalfPlane project(const Hyperplane& h, const View& view, char sign) {
    Vec2 a{0.0, 0.0};
    for (std::size_t axis = 0; axis < 2; ++axis) {
        for (std::size_t k = 0; k < h.normal.size(); ++k) {
            a[axis] += h.normal[k] * view.basis[axis][k];
        }
    }
    double b = h.offset.get_d();
    if (sign == '-') {
        a = {-a[0], -a[1]};
        b = -b;
    }
    return {a, b};
}

double eval(const HalfPlane& h, const Vec2& p) { return h.a[0] * p[0] + h.a[1] * p[1] - h.b; }

// Sutherland-Hodgman against one half-plane.
Polygon clip(const Polygon& poly, const HalfPlane& h) {
    Polygon out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Vec2& p = poly[k];
        const Vec2& q = poly[(k + 1) % poly.size()];
        const double fp = eval(h, p);
        const double fq = eval(h, q);
        if (fp >= 0) {
            out.push_back(p);
        }
        if ((fp >= 0) != (fq >= 0)) {
            const double t = fp / (fp - fq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

double signed_area(const Polygon& poly) {
    double area = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Vec2& p = poly[k];
        const Vec2& q = poly[(k + 1) % poly.size()];
        area += p[0] * q[1] - q[0] * p[1];
    }
    return area / 2;
}

Vec2 centroid(const Polygon& poly) {
    const double area = signed_area(poly);
    double cx = 0;
    double cy = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Vec2& p = poly[k];
        const Vec2& q = poly[(k + 1) % poly.size()];
        const double cross = p[0] * q[1] - q[0] * p[1];
        cx += (p[0] + q[0]) * cross;
        cy += (p[1] + q[1]) * cross;
    }
    return {cx / (6 * area), cy / (6 * area)};
}

std::string num(double v) {
    if (std::fabs(v) < 0.005) {
        v = 0;
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", v);
    return buffer;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

const std::array<const char*, 5> kShades{"#f7f7f7", "#d9e8f5", "#a9cbe6", "#7aaed6", "#4c8fc3"};

}  // namespace

bool plot_supported(ArrangementFamily family, int n) {
    return (family == ArrangementFamily::ShiA && (n == 2 || n == 3)) || (family == ArrangementFamily::ShiC && n == 2);
}

std::string plot_svg(ArrangementFamily family, int n) {
    require(plot_supported(family, n), "plot supports shi-a with n = 2 or 3 and shi-c with n = 2");
    const View view = view_for(family, n);
    const double r = view.radius;
    const double scale = (kCanvas - 2 * kMargin) / (2 * r);
    auto sx = [&](double x) { return num(kMargin + (x + r) * scale); };
    auto sy = [&](double y) { return num(kMargin + (r - y) * scale); };

    const auto arrangement = build_arrangement(family, n);
    const auto records = region_records(family, n);
    const Polygon frame{{-r, -r}, {r, -r}, {r, r}, {-r, r}};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
        << "\" viewBox=\"0 0 " << num(kCanvas) << " " << num(kCanvas) << "\">\n";
    svg << "<title>" << to_string(family) << " n=" << n << ": " << records.size() << " regions</title>\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << num(kCanvas) << "\" height=\"" << num(kCanvas)
        << "\" fill=\"white\"/>\n";

    std::ostringstream labels;
    for (const auto& record : records) {
        Polygon poly = frame;
        for (const auto& h : arrangement.hyperplanes) {
            poly = clip(poly, project(h, view, (*record.sign_vector)[static_cast<std::size_t>(h.id)]));
            if (poly.empty()) {
                break;
            }
        }
        if (poly.size() < 3 || std::fabs(signed_area(poly)) < 1e-6) {
            throw ConsistencyError("region " + *record.sign_vector + " misses the plot window");
        }
        svg << "<polygon class=\"cell\" data-sequence=\"" << join_ints(record.sequence) << "\" points=\"";
        for (std::size_t k = 0; k < poly.size(); ++k) {
            svg << (k ? " " : "") << sx(poly[k][0]) << "," << sy(poly[k][1]);
        }
        svg << "\" fill=\"" << kShades[static_cast<std::size_t>(record.ceilings) % kShades.size()]
            << "\" stroke=\"none\"><title>" << escape(record.partition) << "</title></polygon>\n";
        const Vec2 c = centroid(poly);
        const double pixels = std::fabs(signed_area(poly)) * scale * scale;
        labels << "<text x=\"" << sx(c[0]) << "\" y=\"" << sy(c[1]) << "\" text-anchor=\"middle\"";
        if (pixels < kSmallCell) {
            labels << " font-size=\"7\" dy=\"3\">" << join_ints(record.sequence) << "</text>\n";
        } else {
            labels << " font-size=\"9\"><tspan x=\"" << sx(c[0]) << "\" dy=\"-2\">" << escape(record.partition)
                   << "</tspan><tspan x=\"" << sx(c[0]) << "\" dy=\"10\">" << join_ints(record.sequence)
                   << "</tspan></text>\n";
        }
    }

    for (const auto& h : arrangement.hyperplanes) {
        const HalfPlane line = project(h, view, '+');
        // points of the frame boundary where the line crosses
        std::vector<Vec2> hits;
        for (std::size_t k = 0; k < frame.size(); ++k) {
            const Vec2& p = frame[k];
            const Vec2& q = frame[(k + 1) % frame.size()];
            const double fp = eval(line, p);
            const double fq = eval(line, q);
            if (fp == fq || (fp > 0) == (fq > 0)) {
                continue;
            }
            const double t = fp / (fp - fq);
            hits.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
        if (hits.size() < 2) {
            continue;
        }
        svg << "<line class=\"hyperplane\" data-equation=\"" << h.to_string() << "\" x1=\"" << sx(hits[0][0])
            << "\" y1=\"" << sy(hits[0][1]) << "\" x2=\"" << sx(hits[1][0]) << "\" y2=\"" << sy(hits[1][1])
            << "\" stroke=\"" << (h.through_origin() ? "#222222" : "#c0392b") << "\" stroke-width=\"1.2\"/>\n";
    }
    svg << "<circle cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"2.5\" fill=\"black\"/>\n";
    svg << labels.str();
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace shi
