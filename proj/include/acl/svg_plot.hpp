#pragma once

// SVG charts from campaign CSVs. Output bytes depend only on the input table.

#include "acl/carrier.hpp"
#include "acl/common.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace acl {

/// Column-oriented CSV: numeric cells parse to double, others are kept as text.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw MissingData("CSV lacks column '" + name + "'");
    }
    void require(const std::vector<std::string>& names) const {
        for (const auto& n : names) column(n);
    }
    double number(std::size_t row, std::size_t col) const {
        const std::string& s = rows.at(row).at(col);
        if (s.empty() || s == "nan") return std::numeric_limits<double>::quiet_NaN();
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            return used == s.size() ? v : std::numeric_limits<double>::quiet_NaN();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    const std::string& text(std::size_t row, std::size_t col) const { return rows.at(row).at(col); }
};

inline CsvTable read_csv(std::istream& in, const std::string& name = "csv") {
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw MissingData(name + ": empty file, no header");
    t.header = deck_detail::split_csv(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = deck_detail::split_csv(line);
        if (cells.size() != t.header.size())
            throw FormatError(name + ": row " + std::to_string(t.rows.size() + 1) + " has " +
                              std::to_string(cells.size()) + " cells, header has " + std::to_string(t.header.size()));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

inline CsvTable load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_csv(in, path);
}

namespace svg_detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 5e-3 ? 0.0 : v);
    return buf;
}

/// Linear map from a data interval onto a pixel interval.
struct Axis {
    double lo, hi, p0, p1;
    double operator()(double v) const { return p0 + (v - lo) / (hi - lo) * (p1 - p0); }
};

/// Round-number tick positions covering [lo, hi].
inline std::vector<double> ticks(double lo, double hi, int target = 6) {
    const double span = hi - lo;
    if (!(span > 0.0)) return {lo};
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    std::vector<double> out;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) out.push_back(v);
    return out;
}

class Canvas {
public:
    Canvas(int width, int height, const std::string& title) : w_(width), h_(height) {
        os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
            << "\" viewBox=\"0 0 " << w_ << ' ' << h_ << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
        os_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        text(w_ / 2.0, 20, title, "middle", 14);
    }
    void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width = 1.0,
              const std::string& dash = "") {
        os_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << '"';
        if (!dash.empty()) os_ << " stroke-dasharray=\"" << dash << '"';
        os_ << "/>\n";
    }
    void circle(double x, double y, double r, const std::string& fill) {
        os_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r) << "\" fill=\"" << fill
            << "\"/>\n";
    }
    void cross(double x, double y, double r, const std::string& stroke) {
        line(x - r, y - r, x + r, y + r, stroke, 1.5);
        line(x - r, y + r, x + r, y - r, stroke, 1.5);
    }
    void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke = "none") {
        os_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
            << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill, const std::string& stroke) {
        os_ << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << fmt(pts[i].first) << ',' << fmt(pts[i].second);
        os_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        os_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << fmt(pts[i].first) << ',' << fmt(pts[i].second);
        os_ << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, const std::string& anchor = "start", int size = 12,
              double rotate = 0.0) {
        os_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor << "\" font-size=\""
            << size << '"';
        if (rotate != 0.0) os_ << " transform=\"rotate(" << fmt(rotate) << ' ' << fmt(x) << ' ' << fmt(y) << ")\"";
        os_ << '>' << escape(s) << "</text>\n";
    }

    /// Frame, ticks and labels for a plot area.
    void axes(const Axis& ax, const Axis& ay, const std::string& xlabel, const std::string& ylabel) {
        rect(ax.p0, ay.p1, ax.p1 - ax.p0, ay.p0 - ay.p1, "none", "black");
        for (double v : ticks(ax.lo, ax.hi)) {
            line(ax(v), ay.p0, ax(v), ay.p0 + 5, "black");
            text(ax(v), ay.p0 + 18, fmt_tick(v), "middle");
        }
        for (double v : ticks(ay.lo, ay.hi)) {
            line(ax.p0 - 5, ay(v), ax.p0, ay(v), "black");
            text(ax.p0 - 8, ay(v) + 4, fmt_tick(v), "end");
        }
        text((ax.p0 + ax.p1) / 2.0, ay.p0 + 38, xlabel, "middle");
        text(ax.p0 - 45, (ay.p0 + ay.p1) / 2.0, ylabel, "middle", 12, -90.0);
    }

    std::string str() const { return os_.str() + "</svg>\n"; }

private:
    static std::string fmt_tick(double v) {
        std::ostringstream os;
        os << (std::abs(v) < 1e-9 ? 0.0 : v);
        return os.str();
    }
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                default: out += c;
            }
        }
        return out;
    }

    int w_, h_;
    std::ostringstream os_;
};

inline std::pair<double, double> padded_range(std::vector<double> v, double lo, double hi) {
    for (double x : v)
        if (std::isfinite(x)) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    const double pad = 0.05 * (hi - lo > 0.0 ? hi - lo : 1.0);
    return {lo - pad, hi + pad};
}

}  // namespace svg_detail

/// Landing dispersion over the deck: traps as dots, other touchdowns as crosses.
/// Needs columns outcome, x, y.
inline std::string dispersion_svg(const CsvTable& t, const DeckGeometry& geo, const std::string& title = "Landing dispersion") {
    using namespace svg_detail;
    t.require({"outcome", "x", "y"});
    const std::size_t co = t.column("outcome"), cx = t.column("x"), cy = t.column("y");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        xs.push_back(t.number(i, cx));
        ys.push_back(t.number(i, cy));
    }
    double xlo = geo.ramp, xhi = geo.wires.back() + 60.0, ylo = -50.0, yhi = 50.0;
    std::tie(xlo, xhi) = padded_range(xs, xlo, xhi);
    std::tie(ylo, yhi) = padded_range(ys, ylo, yhi);
    Canvas c(760, 420, title);
    const Axis ax{xlo, xhi, 70.0, 730.0};
    const Axis ay{ylo, yhi, 370.0, 40.0};
    std::vector<std::pair<double, double>> poly;
    for (const auto& p : geo.landing_area) poly.emplace_back(ax(std::clamp(p.x(), xlo, xhi)), ay(std::clamp(p.y(), ylo, yhi)));
    c.polygon(poly, "#eef2f7", "#8899aa");
    c.line(ax(geo.ramp), ay.p0, ax(geo.ramp), ay.p1, "#aa4444", 1.5, "6,3");
    for (std::size_t k = 0; k < geo.wires.size(); ++k) {
        c.line(ax(geo.wires[k]), ay.p0, ax(geo.wires[k]), ay.p1, "#555555", 1.0);
        c.text(ax(geo.wires[k]), ay.p1 + 12, "wire " + std::to_string(k + 1), "middle", 10);
    }
    c.line(ax.p0, ay(0.0), ax.p1, ay(0.0), "#999999", 0.8, "3,3");
    c.axes(ax, ay, "x along the centerline from the target wire (ft)", "y (ft)");
    std::size_t traps = 0, others = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
        if (t.text(i, co) == "trap") {
            c.circle(ax(xs[i]), ay(ys[i]), 3.5, "#1f77b4");
            ++traps;
        } else {
            c.cross(ax(xs[i]), ay(ys[i]), 4.0, "#d62728");
            ++others;
        }
    }
    c.text(ax.p1, ay.p0 - 8, "traps " + std::to_string(traps) + ", other touchdowns " + std::to_string(others), "end", 11);
    return c.str();
}

/// Ramp clearance per episode with the success band. Needs outcome, altitude_error.
inline std::string altitude_error_svg(const CsvTable& t, double max_error = 15.0,
                                      const std::string& title = "Final altitude error") {
    using namespace svg_detail;
    t.require({"outcome", "altitude_error"});
    const std::size_t co = t.column("outcome"), ca = t.column("altitude_error");
    std::vector<double> a;
    for (std::size_t i = 0; i < t.rows.size(); ++i) a.push_back(t.number(i, ca));
    auto [lo, hi] = padded_range(a, -5.0, max_error + 5.0);
    Canvas c(760, 380, title);
    const double n = static_cast<double>(std::max<std::size_t>(t.rows.size(), 1));
    const Axis ax{0.0, n + 1.0, 70.0, 730.0};
    const Axis ay{lo, hi, 330.0, 40.0};
    c.rect(ax.p0, ay(max_error), ax.p1 - ax.p0, ay(0.0) - ay(max_error), "#eaf5ea");
    c.line(ax.p0, ay(max_error), ax.p1, ay(max_error), "#2ca02c", 1.0, "6,3");
    c.line(ax.p0, ay(0.0), ax.p1, ay(0.0), "#aa4444", 1.0, "6,3");
    c.axes(ax, ay, "episode", "altitude error (ft)");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!std::isfinite(a[i])) continue;
        const double x = ax(static_cast<double>(i + 1));
        if (t.text(i, co) == "trap") c.circle(x, ay(a[i]), 3.5, "#1f77b4");
        else c.cross(x, ay(a[i]), 4.0, "#d62728");
    }
    return c.str();
}

/// Success rate against approach speed. Needs speed, success_rate.
inline std::string sweep_svg(const CsvTable& t, const std::string& title = "Success rate against approach speed") {
    using namespace svg_detail;
    t.require({"speed", "success_rate"});
    const std::size_t cs = t.column("speed"), cr = t.column("success_rate");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double v = t.number(i, cs), r = t.number(i, cr);
        if (std::isfinite(v) && std::isfinite(r)) pts.emplace_back(v, 100.0 * r);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> speeds;
    for (const auto& p : pts) speeds.push_back(p.first);
    auto [lo, hi] = padded_range(speeds, 140.0, 230.0);
    Canvas c(760, 380, title);
    const Axis ax{lo, hi, 70.0, 730.0};
    const Axis ay{0.0, 105.0, 330.0, 40.0};
    c.axes(ax, ay, "approach speed (ft/s)", "success rate (%)");
    std::vector<std::pair<double, double>> px;
    for (const auto& p : pts) px.emplace_back(ax(p.first), ay(p.second));
    if (px.size() > 1) c.polyline(px, "#1f77b4");
    for (const auto& p : px) c.circle(p.first, p.second, 4.0, "#1f77b4");
    return c.str();
}

}  // namespace acl
