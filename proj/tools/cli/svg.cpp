#include "svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace layerstab::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 30.0, kBottom = 50.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame {
    Axes a;
    double y0;  // top of the panel in document coordinates
    double px(double x) const { return kLeft + (x - a.x_min) / (a.x_max - a.x_min) * (kWidth - kLeft - kRight); }
    double py(double y) const {
        return y0 + kTop + (a.y_max - y) / (a.y_max - a.y_min) * (kHeight - kTop - kBottom);
    }
};

void draw_axes(std::ostringstream& os, const Frame& f) {
    const double x0 = f.px(f.a.x_min), x1 = f.px(f.a.x_max);
    const double yb = f.py(f.a.y_min), yt = f.py(f.a.y_max);
    os << "<rect x=\"" << num(x0) << "\" y=\"" << num(yt) << "\" width=\"" << num(x1 - x0) << "\" height=\""
       << num(yb - yt) << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = f.a.x_min + (f.a.x_max - f.a.x_min) * t / 4.0;
        const double yv = f.a.y_min + (f.a.y_max - f.a.y_min) * t / 4.0;
        os << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << num(yb + 16) << "\" font-size=\"11\" text-anchor=\"middle\">"
           << num(xv) << "</text>\n";
        os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(f.py(yv) + 4) << "\" font-size=\"11\" text-anchor=\"end\">"
           << num(yv) << "</text>\n";
    }
    os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(yb + 36) << "\" font-size=\"13\" text-anchor=\"middle\">"
       << escape(f.a.x_label) << "</text>\n";
    os << "<text x=\"18\" y=\"" << num((yb + yt) / 2) << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << num((yb + yt) / 2) << ")\">" << escape(f.a.y_label) << "</text>\n";
    if (!f.a.title.empty()) {
        os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(f.y0 + 18) << "\" font-size=\"14\" text-anchor=\"middle\">"
           << escape(f.a.title) << "</text>\n";
    }
}

void draw_lines(std::ostringstream& os, const Frame& f, const std::vector<Polyline>& lines) {
    os << "<g clip-path=\"url(#plot" << num(f.y0) << ")\">\n";
    for (const auto& l : lines) {
        std::ostringstream pts;
        bool open = false;
        for (size_t k = 0; k < l.x.size() && k < l.y.size(); ++k) {
            if (!std::isfinite(l.y[k])) {
                if (open) {
                    os << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"" << num(l.width) << "\""
                       << (l.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"" << pts.str() << "\"/>\n";
                    pts.str("");
                    open = false;
                }
                continue;
            }
            pts << num(f.px(l.x[k])) << ',' << num(f.py(l.y[k])) << ' ';
            open = true;
        }
        if (open) {
            os << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"" << num(l.width) << "\""
               << (l.dashed ? " stroke-dasharray=\"5,4\"" : "") << " points=\"" << pts.str() << "\"/>\n";
        }
    }
    os << "</g>\n";
}

void clip(std::ostringstream& os, const Frame& f) {
    os << "<defs><clipPath id=\"plot" << num(f.y0) << "\"><rect x=\"" << num(f.px(f.a.x_min)) << "\" y=\""
       << num(f.py(f.a.y_max)) << "\" width=\"" << num(f.px(f.a.x_max) - f.px(f.a.x_min)) << "\" height=\""
       << num(f.py(f.a.y_min) - f.py(f.a.y_max)) << "\"/></clipPath></defs>\n";
}

std::string header(double height) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(height) << "\" font-family=\"sans-serif\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return os.str();
}

}  // namespace

std::string svg_heatmap(const Axes& axes, int nx, int ny, const std::vector<bool>& cells, const std::string& on,
                        const std::string& off, const std::vector<Polyline>& overlay) {
    std::ostringstream os;
    os << header(kHeight);
    Frame f{axes, 0.0};
    clip(os, f);
    const double cw = (f.px(axes.x_max) - f.px(axes.x_min)) / nx;
    const double ch = (f.py(axes.y_min) - f.py(axes.y_max)) / ny;
    os << "<g shape-rendering=\"crispEdges\">\n";
    for (int i = 0; i < nx; ++i) {
        for (int k = 0; k < ny; ++k) {
            const bool v = cells[static_cast<size_t>(i) * ny + k];
            os << "<rect x=\"" << num(f.px(axes.x_min) + i * cw) << "\" y=\"" << num(f.py(axes.y_min) - (k + 1) * ch)
               << "\" width=\"" << num(cw) << "\" height=\"" << num(ch) << "\" fill=\"" << (v ? on : off) << "\"/>\n";
        }
    }
    os << "</g>\n";
    draw_lines(os, f, overlay);
    draw_axes(os, f);
    os << "</svg>\n";
    return os.str();
}

std::string svg_lines(const Axes& axes, const std::vector<Polyline>& lines) {
    return svg_panels({axes}, {lines});
}

std::string svg_panels(const std::vector<Axes>& axes, const std::vector<std::vector<Polyline>>& lines) {
    std::ostringstream os;
    os << header(kHeight * static_cast<double>(axes.size()));
    for (size_t p = 0; p < axes.size(); ++p) {
        Frame f{axes[p], kHeight * static_cast<double>(p)};
        clip(os, f);
        if (p < lines.size()) draw_lines(os, f, lines[p]);
        draw_axes(os, f);
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace layerstab::cli
