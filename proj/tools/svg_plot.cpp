#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace swarmsim::cli {

namespace {

constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
};

const char* color_for(std::size_t i) { return kPalette[i % 12]; }

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    if (v == 0.0) v = 0.0;  // normalize -0
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string px(double v) { return fmt(v, "%.2f"); }

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Round tick spacing: 1/2/5 times a power of ten, aiming for ~5 intervals.
double nice_step(double range) {
    if (!(range > 0.0)) return 1.0;
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double mult = 10.0;
    if (norm < 1.5) mult = 1.0;
    else if (norm < 3.5) mult = 2.0;
    else if (norm < 7.5) mult = 5.0;
    return mult * mag;
}

/// Linear world-to-pixel map for one axis.
struct LinMap {
    double w0 = 0.0, w1 = 1.0;  ///< world range
    double p0 = 0.0, p1 = 1.0;  ///< pixel range (p1 < p0 flips the axis)
    double operator()(double w) const { return p0 + (w - w0) / (w1 - w0) * (p1 - p0); }
};

struct Frame {
    double width, height;          ///< full canvas
    double left, right, top, bottom;  ///< margins
    double plot_x0() const { return left; }
    double plot_x1() const { return width - right; }
    double plot_y0() const { return top; }
    double plot_y1() const { return height - bottom; }
};

void open_svg(std::ostringstream& svg, const Frame& f, const std::string& title) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(f.width)
        << "\" height=\"" << fmt(f.height) << "\" viewBox=\"0 0 " << fmt(f.width) << ' '
        << fmt(f.height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << px(f.width / 2)
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\" "
           "fill=\"#222\">"
        << escape_xml(title) << "</text>\n";
}

void draw_axes(std::ostringstream& svg, const Frame& f, const LinMap& mx, const LinMap& my,
               const std::string& x_label, const std::string& y_label) {
    // Grid + tick labels, then the plot border on top.
    const double x_step = nice_step(mx.w1 - mx.w0);
    for (double v = std::ceil(mx.w0 / x_step) * x_step; v <= mx.w1 + x_step * 1e-9; v += x_step) {
        const double x = mx(v);
        svg << "<line x1=\"" << px(x) << "\" y1=\"" << px(f.plot_y0()) << "\" x2=\"" << px(x)
            << "\" y2=\"" << px(f.plot_y1()) << "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << px(x) << "\" y=\"" << px(f.plot_y1() + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"#444\">"
            << fmt(v) << "</text>\n";
    }
    const double y_step = nice_step(my.w1 - my.w0);
    for (double v = std::ceil(my.w0 / y_step) * y_step; v <= my.w1 + y_step * 1e-9; v += y_step) {
        const double y = my(v);
        svg << "<line x1=\"" << px(f.plot_x0()) << "\" y1=\"" << px(y) << "\" x2=\""
            << px(f.plot_x1()) << "\" y2=\"" << px(y)
            << "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << px(f.plot_x0() - 6) << "\" y=\"" << px(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
               "fill=\"#444\">"
            << fmt(v) << "</text>\n";
    }
    svg << "<rect x=\"" << px(f.plot_x0()) << "\" y=\"" << px(f.plot_y0()) << "\" width=\""
        << px(f.plot_x1() - f.plot_x0()) << "\" height=\"" << px(f.plot_y1() - f.plot_y0())
        << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << px((f.plot_x0() + f.plot_x1()) / 2) << "\" y=\""
        << px(f.height - 10)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#222\">"
        << escape_xml(x_label) << "</text>\n";
    svg << "<text x=\"14\" y=\"" << px((f.plot_y0() + f.plot_y1()) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"#222\" transform=\"rotate(-90 14 "
        << px((f.plot_y0() + f.plot_y1()) / 2) << ")\">" << escape_xml(y_label) << "</text>\n";
}

void polyline(std::ostringstream& svg, const std::vector<std::pair<double, double>>& pts,
              const char* color, double width, const char* dash = nullptr) {
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
        << '"';
    if (dash) svg << " stroke-dasharray=\"" << dash << '"';
    svg << " points=\"";
    for (const auto& [x, y] : pts) svg << px(x) << ',' << px(y) << ' ';
    svg << "\"/>\n";
}

struct Bounds {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
    bool empty = true;
    void add(double x, double y) {
        if (empty) {
            x0 = x1 = x;
            y0 = y1 = y;
            empty = false;
        } else {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    void pad_fraction(double frac) {
        const double dx = std::max(x1 - x0, 1e-9) * frac;
        const double dy = std::max(y1 - y0, 1e-9) * frac;
        x0 -= dx;
        x1 += dx;
        y0 -= dy;
        y1 += dy;
        if (x1 - x0 < 1e-9) {
            x0 -= 0.5;
            x1 += 0.5;
        }
        if (y1 - y0 < 1e-9) {
            y0 -= 0.5;
            y1 += 0.5;
        }
    }
};

}  // namespace

std::string plan_view_svg(const TrajectoryLog& log, const ScenarioSpec& spec) {
    const Frame f{820, 620, 60, 20, 46, 46};

    Bounds b;
    for (const TickRecord& rec : log.records)
        for (const AgentRecord& a : rec.agents) b.add(a.position.x, a.position.y);
    for (const Building& bd : spec.buildings) {
        b.add(bd.lo.x, bd.lo.y);
        b.add(bd.hi.x, bd.hi.y);
    }
    const double t_end = log.records.empty() ? 0.0 : log.records.back().time;
    for (const ObstacleSpec& o : spec.obstacles) {
        b.add(o.center.x - o.r_ok, o.center.y - o.r_ok);
        b.add(o.center.x + o.r_ok, o.center.y + o.r_ok);
        const double travel = std::max(0.0, t_end - o.activation_time);
        const Vector3 end = o.center + travel * o.velocity;
        b.add(end.x - o.r_ok, end.y - o.r_ok);
        b.add(end.x + o.r_ok, end.y + o.r_ok);
    }
    if (b.empty) b.add(0.0, 0.0);
    b.pad_fraction(0.05);

    // Equal metric scale on both axes: shrink to the tighter direction, then
    // re-derive the world window actually visible through the plot rectangle.
    const double pw = f.plot_x1() - f.plot_x0();
    const double ph = f.plot_y1() - f.plot_y0();
    const double scale = std::min(pw / (b.x1 - b.x0), ph / (b.y1 - b.y0));
    const double cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2;
    const LinMap mx{cx - pw / (2 * scale), cx + pw / (2 * scale), f.plot_x0(), f.plot_x1()};
    const LinMap my{cy - ph / (2 * scale), cy + ph / (2 * scale), f.plot_y1(), f.plot_y0()};

    std::ostringstream svg;
    open_svg(svg, f, spec.name + " - plan view");
    draw_axes(svg, f, mx, my, "x [m]", "y [m]");

    for (const Building& bd : spec.buildings) {
        svg << "<rect x=\"" << px(mx(bd.lo.x)) << "\" y=\"" << px(my(bd.hi.y)) << "\" width=\""
            << px(mx(bd.hi.x) - mx(bd.lo.x)) << "\" height=\"" << px(my(bd.lo.y) - my(bd.hi.y))
            << "\" fill=\"#c9c9c9\" stroke=\"#777\" stroke-width=\"1\"/>\n";
    }
    for (const ObstacleSpec& o : spec.obstacles) {
        const double rpix = o.r_ok * scale;
        svg << "<circle cx=\"" << px(mx(o.center.x)) << "\" cy=\"" << px(my(o.center.y))
            << "\" r=\"" << px(rpix)
            << "\" fill=\"#ffad66\" fill-opacity=\"0.45\" stroke=\"#d9822b\" "
               "stroke-width=\"1.2\"/>\n";
        const double travel = std::max(0.0, t_end - o.activation_time);
        const Vector3 end = o.center + travel * o.velocity;
        if (norm(end - o.center) > 1e-12) {
            svg << "<line x1=\"" << px(mx(o.center.x)) << "\" y1=\"" << px(my(o.center.y))
                << "\" x2=\"" << px(mx(end.x)) << "\" y2=\"" << px(my(end.y))
                << "\" stroke=\"#d9822b\" stroke-width=\"1\" stroke-dasharray=\"3 3\"/>\n";
            svg << "<circle cx=\"" << px(mx(end.x)) << "\" cy=\"" << px(my(end.y)) << "\" r=\""
                << px(rpix)
                << "\" fill=\"none\" stroke=\"#d9822b\" stroke-width=\"1.2\" "
                   "stroke-dasharray=\"4 3\"/>\n";
        }
    }

    for (std::size_t i = 0; i < log.agent_count; ++i) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(log.records.size());
        for (const TickRecord& rec : log.records)
            pts.emplace_back(mx(rec.agents[i].position.x), my(rec.agents[i].position.y));
        polyline(svg, pts, color_for(i), 1.6);
        if (!pts.empty()) {
            svg << "<circle cx=\"" << px(pts.front().first) << "\" cy=\""
                << px(pts.front().second) << "\" r=\"3\" fill=\"#ffffff\" stroke=\""
                << color_for(i) << "\" stroke-width=\"1.5\"/>\n";
            svg << "<circle cx=\"" << px(pts.back().first) << "\" cy=\"" << px(pts.back().second)
                << "\" r=\"3.2\" fill=\"" << color_for(i) << "\"/>\n";
        }
    }

    svg << "<text x=\"" << px(f.plot_x1()) << "\" y=\"38\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"11\" fill=\"#666\">"
        << "rings mark start positions, dots mark final positions</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string distance_svg(const MinDistanceSeries& series, std::size_t ref,
                         const std::string& name) {
    const Frame f{820, 520, 64, 20, 46, 50};
    const std::size_t n = series.distance.empty() ? 0 : series.distance.front().size();

    double d_max = 2.5;
    for (const auto& row : series.distance)
        for (std::size_t i = 0; i < row.size(); ++i)
            if (i != ref) d_max = std::max(d_max, row[i]);
    const double t0 = series.time.empty() ? 0.0 : series.time.front();
    const double t1 = series.time.empty() ? 1.0 : std::max(series.time.back(), t0 + 1e-9);
    const LinMap mx{t0, t1, f.plot_x0(), f.plot_x1()};
    const LinMap my{0.0, d_max * 1.05, f.plot_y1(), f.plot_y0()};

    std::ostringstream svg;
    open_svg(svg, f, name + " - distance to agent " + std::to_string(ref));
    draw_axes(svg, f, mx, my, "time [s]", "distance [m]");

    for (std::size_t i = 0; i < n; ++i) {
        if (i == ref) continue;
        std::vector<std::pair<double, double>> pts;
        pts.reserve(series.time.size());
        for (std::size_t k = 0; k < series.time.size(); ++k)
            pts.emplace_back(mx(series.time[k]), my(series.distance[k][i]));
        polyline(svg, pts, color_for(i), 1.4);
    }

    // Safety guide at 2 m.
    svg << "<line x1=\"" << px(f.plot_x0()) << "\" y1=\"" << px(my(2.0)) << "\" x2=\""
        << px(f.plot_x1()) << "\" y2=\"" << px(my(2.0))
        << "\" stroke=\"#d62728\" stroke-width=\"1.3\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<text x=\"" << px(f.plot_x1() - 4) << "\" y=\"" << px(my(2.0) - 5)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#d62728\">2 m</text>\n";

    svg << "<text x=\"" << px(f.plot_x1()) << "\" y=\"38\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"11\" fill=\"#666\">min "
        << fmt(series.global_min) << " m at t = " << fmt(series.global_min_time)
        << " s</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string altitude_svg(const TrajectoryLog& log, double nominal_altitude,
                         const std::string& name) {
    const Frame f{820, 520, 64, 20, 46, 50};

    double z_lo = nominal_altitude, z_hi = nominal_altitude;
    for (const TickRecord& rec : log.records)
        for (const AgentRecord& a : rec.agents) {
            z_lo = std::min(z_lo, a.position.z);
            z_hi = std::max(z_hi, a.position.z);
        }
    const double z_pad = std::max((z_hi - z_lo) * 0.08, 0.2);
    const double t0 = log.records.empty() ? 0.0 : log.records.front().time;
    const double t1 = log.records.empty() ? 1.0 : std::max(log.records.back().time, t0 + 1e-9);
    const LinMap mx{t0, t1, f.plot_x0(), f.plot_x1()};
    const LinMap my{z_lo - z_pad, z_hi + z_pad, f.plot_y1(), f.plot_y0()};

    std::ostringstream svg;
    open_svg(svg, f, name + " - altitude");
    draw_axes(svg, f, mx, my, "time [s]", "altitude [m]");

    svg << "<line x1=\"" << px(f.plot_x0()) << "\" y1=\"" << px(my(nominal_altitude))
        << "\" x2=\"" << px(f.plot_x1()) << "\" y2=\"" << px(my(nominal_altitude))
        << "\" stroke=\"#555\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>\n";
    svg << "<text x=\"" << px(f.plot_x1() - 4) << "\" y=\"" << px(my(nominal_altitude) - 5)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
           "fill=\"#555\">nominal altitude</text>\n";

    for (std::size_t i = 0; i < log.agent_count; ++i) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(log.records.size());
        for (const TickRecord& rec : log.records)
            pts.emplace_back(mx(rec.time), my(rec.agents[i].position.z));
        polyline(svg, pts, color_for(i), 1.4);
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace swarmsim::cli
