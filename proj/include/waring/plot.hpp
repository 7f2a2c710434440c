#ifndef WARING_PLOT_HPP
#define WARING_PLOT_HPP

#include <string>
#include <vector>

#include "waring/mpoly.hpp"

namespace waring {

/// Marching-squares rendering of a locus in an affine chart of the dual
/// plane.  Each factor is drawn in its own stroke class; a factor equal to
/// the chart variable is the chart's line at infinity and is drawn as the
/// window frame.
struct PlotSpec {
    std::vector<Poly> factors;  // ternary dual polynomials
    int chart_var = 2;          // coordinate set to 1
    double window = 5.0;        // plot [-window, window]^2
    int grid = 400;
    std::vector<std::string> axis_labels;  // optional, two labels
};

std::string render_locus_svg(const PlotSpec& spec);

}  // namespace waring

#endif
