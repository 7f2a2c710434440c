#include "waring/plot.hpp"

#include <sstream>
#include <thread>

namespace waring {

namespace {

struct Segment {
    double x0, y0, x1, y1;
};

/// zero-contour segments of f on the grid, by the 16-case marching squares
std::vector<Segment> contour(const std::vector<double>& vals, int N, double lo,
                             double hi) {
    std::vector<Segment> segs;
    double h = (hi - lo) / (N - 1);
    auto at = [&](int i, int j) { return vals[j * N + i]; };
    auto lerp = [&](double a, double b) { return a / (a - b); };
    for (int j = 0; j + 1 < N; ++j) {
        for (int i = 0; i + 1 < N; ++i) {
            double v00 = at(i, j), v10 = at(i + 1, j);
            double v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
                !std::isfinite(v11))
                continue;
            int mask = (v00 > 0) | ((v10 > 0) << 1) | ((v11 > 0) << 2) | ((v01 > 0) << 3);
            if (mask == 0 || mask == 15) continue;
            double x = lo + i * h, y = lo + j * h;
            // edge crossing points
            double bx = x + h * lerp(v00, v10), by = y;            // bottom
            double tx = x + h * lerp(v01, v11), ty = y + h;        // top
            double lx = x, ly = y + h * lerp(v00, v01);            // left
            double rx = x + h, ry = y + h * lerp(v10, v11);        // right
            auto add = [&](double ax, double ay, double cx, double cy) {
                segs.push_back({ax, ay, cx, cy});
            };
            switch (mask) {
                case 1: case 14: add(bx, by, lx, ly); break;
                case 2: case 13: add(bx, by, rx, ry); break;
                case 3: case 12: add(lx, ly, rx, ry); break;
                case 4: case 11: add(tx, ty, rx, ry); break;
                case 5: case 10: add(bx, by, rx, ry); add(tx, ty, lx, ly); break;
                case 6: case 9: add(bx, by, tx, ty); break;
                case 7: case 8: add(lx, ly, tx, ty); break;
            }
        }
    }
    return segs;
}

}  // namespace

std::string render_locus_svg(const PlotSpec& spec) {
    const int N = std::max(2, spec.grid);
    const double w = spec.window;
    const double size = 600.0;
    auto sx = [&](double x) { return (x + w) / (2 * w) * size; };
    auto sy = [&](double y) { return size - (y + w) / (2 * w) * size; };

    // the two axis variables, in increasing index order
    std::vector<int> axes;
    for (int v = 0; v < 3; ++v)
        if (v != spec.chart_var) axes.push_back(v);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\""
        << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\"/>\n";

    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                            "#ff7f0e", "#8c564b"};
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
        const Poly& factor = spec.factors[f];
        std::string cls = "factor-" + std::to_string(f);
        const char* color = colors[f % 6];

        // a factor proportional to the chart variable is the line at infinity
        // of this chart: draw it as the window frame
        ExpVec chart_exp(3, 0);
        chart_exp[spec.chart_var] = factor.degree();
        bool is_infinity_line =
            factor.degree() >= 1 && factor.term_count() == 1 &&
            !factor.coeff(chart_exp).is_zero();
        svg << "  <g class=\"" << cls << "\" stroke=\"" << color
            << "\" fill=\"none\" stroke-width=\"1.5\">\n";
        if (is_infinity_line) {
            svg << "    <rect x=\"1\" y=\"1\" width=\"" << size - 2 << "\" height=\""
                << size - 2 << "\" class=\"at-infinity\"/>\n";
            svg << "  </g>\n";
            continue;
        }

        CPoly fc = poly_to<std::complex<double>>(factor);
        std::vector<double> vals(N * N);
        int hw = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        int chunk = (N + hw - 1) / hw;
        for (int t = 0; t < hw; ++t) {
            int j0 = t * chunk, j1 = std::min(N, j0 + chunk);
            if (j0 >= j1) break;
            pool.emplace_back([&, j0, j1] {
                std::vector<std::complex<double>> pt(3);
                pt[spec.chart_var] = 1.0;
                for (int j = j0; j < j1; ++j) {
                    double y = -w + 2 * w * j / (N - 1);
                    for (int i = 0; i < N; ++i) {
                        double x = -w + 2 * w * i / (N - 1);
                        pt[axes[0]] = x;
                        pt[axes[1]] = y;
                        vals[j * N + i] = fc.eval(pt).real();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();

        auto segs = contour(vals, N, -w, w);
        if (!segs.empty()) {
            svg << "    <path d=\"";
            for (const auto& s : segs)
                svg << "M" << sx(s.x0) << " " << sy(s.y0) << "L" << sx(s.x1) << " "
                    << sy(s.y1);
            svg << "\"/>\n";
        }
        svg << "  </g>\n";
    }
    if (spec.axis_labels.size() == 2) {
        svg << "  <text x=\"" << size - 30 << "\" y=\"" << size / 2 - 8
            << "\" font-size=\"14\">" << spec.axis_labels[0] << "</text>\n";
        svg << "  <text x=\"" << size / 2 + 8 << "\" y=\"20\" font-size=\"14\">"
            << spec.axis_labels[1] << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace waring
