#pragma once

#include <span>
#include <string>

#include "splotsel/dataset.hpp"
#include "splotsel/geometry.hpp"
#include "splotsel/metrics.hpp"

namespace splotsel {

/// Geometry and palette of the output grid. Class colors are assigned by
/// class enumeration order, cycling through an 8-color palette whose first
/// two entries are blue and red.
struct PlotStyle {
    double plot_size = 220.0;    // inner plot viewport, square
    double margin = 34.0;        // space around each viewport for labels
    double point_radius = 2.0;
    int grid_columns = 4;
};

/// Color (hex) for a class index.
const char* class_color(int class_index);

/// One sub-plot per selected scatterplot, row-major in selection-rank order.
/// Each sub-plot draws all n normalized points, the dimension names below
/// and left of the frame, and an s1/s2/s3/s4 caption. Output is a
/// self-contained SVG document, byte-identical across runs.
/// Throws on an empty selection.
std::string render_grid(const Dataset& d, std::span<const ScatterplotSpec> specs,
                        std::span<const ScoreVector> scores,
                        std::span<const int> selected, const PlotStyle& style = {});

/// Grouped bar chart of the four scores per selected scatterplot, y axis
/// fixed to [0,1].
std::string render_score_chart(std::span<const ScoreVector> scores,
                               std::span<const int> selected);

/// Debug dump of a pruned mesh: kept edges as lines, boundary edges
/// emphasized, vertices as dots.
std::string render_mesh(const TriMesh& mesh);

}  // namespace splotsel
