#include "billiards/svg_render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace billiards {

namespace {

// SVG y grows downward; flip once at the emission boundary.
struct Canvas {
    std::ostringstream body;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool touched = false;
    int digits;

    explicit Canvas(int d) : digits(d) {}

    void cover(const Point& p) {
        double x = to_double(p.x), y = -to_double(p.y);
        if (!touched) {
            min_x = max_x = x;
            min_y = max_y = y;
            touched = true;
        } else {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
    }

    std::string coords(const Point& p) {
        return to_decimal(p.x, digits) + "," + to_decimal(-p.y, digits);
    }

    void path(const std::vector<Point>& pts, const char* style) {
        body << "<path d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            body << (i == 0 ? "M" : " L") << coords(pts[i]);
            cover(pts[i]);
        }
        body << " Z\" " << style << "/>\n";
    }

    void polyline(const std::vector<Point>& pts, const char* style) {
        body << "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body << ' ';
            body << coords(pts[i]);
            cover(pts[i]);
        }
        body << "\" " << style << "/>\n";
    }

    void dot(const Point& p, const char* fill, double r) {
        body << "<circle cx=\"" << to_decimal(p.x, digits) << "\" cy=\""
             << to_decimal(-p.y, digits) << "\" r=\"" << r << "\" fill=\"" << fill
             << "\"/>\n";
        cover(p);
    }

    std::string finish() const {
        double w = max_x - min_x, h = max_y - min_y;
        double margin = 0.06 * std::max({w, h, 1.0});
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - margin)
            << ' ' << (min_y - margin) << ' ' << (w + 2 * margin) << ' ' << (h + 2 * margin)
            << "\">\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

constexpr const char* kWallStyle =
    "fill=\"none\" stroke=\"#30363d\" stroke-width=\"0.025\"";
constexpr const char* kCopyStyle =
    "fill=\"none\" stroke=\"#8b949e\" stroke-width=\"0.02\"";
constexpr const char* kPathStyle =
    "fill=\"none\" stroke=\"#cf222e\" stroke-width=\"0.02\"";
constexpr const char* kChordStyle =
    "fill=\"none\" stroke=\"#0969da\" stroke-width=\"0.02\"";

void draw_marks(Canvas& canvas, const Table& table) {
    canvas.dot(table.origin, "#1a7f37", 0.06);
    canvas.dot(table.target, "#cf222e", 0.06);
}

}  // namespace

std::string render_table_svg(const Table& table, int digits) {
    Canvas canvas(digits);
    canvas.path(table.polygon.vertices(), kWallStyle);
    draw_marks(canvas, table);
    return canvas.finish();
}

std::string render_gamma_svg(const Table& table, const Trajectory& traj, int digits) {
    Canvas canvas(digits);
    canvas.path(table.polygon.vertices(), kWallStyle);
    canvas.polyline(chain(traj), kPathStyle);
    draw_marks(canvas, table);
    return canvas.finish();
}

std::string render_unfolded_svg(const Table& table, const Trajectory& traj, int digits) {
    UnfoldedLine line = unfold(traj);
    Canvas canvas(digits);
    canvas.path(table.polygon.vertices(), kCopyStyle);
    for (const Isometry& iso : line.copies) {
        std::vector<Point> copy;
        copy.reserve(table.polygon.size());
        for (const Point& v : table.polygon.vertices()) copy.push_back(iso.apply(v));
        canvas.path(copy, kCopyStyle);
    }
    canvas.polyline({line.origin, line.terminal}, kChordStyle);
    canvas.dot(line.origin, "#1a7f37", 0.06);
    canvas.dot(line.terminal, "#cf222e", 0.06);
    return canvas.finish();
}

}  // namespace billiards
