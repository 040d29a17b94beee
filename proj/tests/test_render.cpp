#include <doctest.h>

#include <string>

#include "splotsel/render.hpp"
#include "testutil.hpp"

using namespace splotsel;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

struct Fixture {
    Dataset data;
    std::vector<ScatterplotSpec> specs;
    std::vector<ScoreVector> scores;
};

Fixture make_fixture(std::size_t n_rows, std::size_t n_dims, int classes, std::uint64_t seed) {
    testutil::Rng rng(seed);
    Fixture f;
    f.data = normalize(testutil::random_dataset(rng, n_rows, n_dims, classes));
    f.specs = enumerate_all_pairs(f.data);
    const auto result = score_all(f.data, f.specs, 3);
    f.scores = result.scores;
    return f;
}

}  // namespace

TEST_CASE("render_grid lays out rows of grid_columns") {
    const Fixture f = make_fixture(20, 7, 2, 9);  // 21 specs
    REQUIRE(f.specs.size() == 21);
    std::vector<int> selected;
    for (int i = 0; i < 16; ++i) selected.push_back(i);

    PlotStyle style;
    const std::string svg = render_grid(f.data, f.specs, f.scores, selected, style);
    const double cell = style.plot_size + 2 * style.margin;

    // 16 plots in 4 columns -> a 4x4 sheet of 288x288 cells
    CHECK(cell == doctest::Approx(288.0));
    CHECK(svg.find("viewBox=\"0 0 1152.00 1152.00\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<g>") == 16);
    // every sub-plot draws all n points
    CHECK(count_occurrences(svg, "<circle") == 16 * f.data.n_rows());
}

TEST_CASE("render_grid row-major fill for a partial last row") {
    const Fixture f = make_fixture(10, 5, 2, 10);
    const std::vector<int> selected{0, 1, 2, 3, 4};  // 5 plots, 4 columns
    const std::string svg = render_grid(f.data, f.specs, f.scores, selected);
    CHECK(svg.find("viewBox=\"0 0 1152.00 576.00\"") != std::string::npos);  // 4 x 2 cells
    CHECK(count_occurrences(svg, "<g>") == 5);
}

TEST_CASE("render_grid single selection") {
    const Fixture f = make_fixture(8, 3, 1, 11);
    const std::string svg = render_grid(f.data, f.specs, f.scores, std::vector<int>{1});
    CHECK(count_occurrences(svg, "<g>") == 1);
    CHECK(count_occurrences(svg, "<circle") == 8);
}

TEST_CASE("render_grid rejects an empty selection") {
    const Fixture f = make_fixture(5, 3, 1, 12);
    CHECK_THROWS_AS(render_grid(f.data, f.specs, f.scores, std::vector<int>{}),
                    std::runtime_error);
}

TEST_CASE("rendered positions are the affine map of normalized coordinates") {
    // two corner points in a single plot: (0,0) and (1,1)
    Dataset d;
    d.dim_names = {"a", "b"};
    d.columns = {{0.0, 1.0}, {0.0, 1.0}};
    d.labels = {0, 1};
    d.class_names = {"u", "v"};
    const std::vector<ScatterplotSpec> specs{{0, 1, 0}};
    const std::vector<ScoreVector> scores{{0.5, 0.5, 0.5, 0.5, 1.0}};
    PlotStyle style;
    const std::string svg = render_grid(d, specs, scores, std::vector<int>{0}, style);
    // (0,0) -> left-bottom of the viewport, (1,1) -> right-top (SVG y is flipped)
    CHECK(svg.find("<circle cx=\"34.00\" cy=\"254.00\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"254.00\" cy=\"34.00\"") != std::string::npos);
    // class colors: class 0 blue, class 1 red
    CHECK(svg.find("fill=\"#1f4e9c\"") != std::string::npos);
    CHECK(svg.find("fill=\"#d62728\"") != std::string::npos);
}

TEST_CASE("render output is byte-identical across runs") {
    const Fixture f = make_fixture(15, 4, 3, 13);
    const std::vector<int> selected{0, 2, 4};
    CHECK(render_grid(f.data, f.specs, f.scores, selected) ==
          render_grid(f.data, f.specs, f.scores, selected));
    CHECK(render_score_chart(f.scores, selected) == render_score_chart(f.scores, selected));
}

TEST_CASE("render_score_chart bar structure") {
    std::vector<ScoreVector> scores;
    std::vector<int> selected;
    for (int i = 0; i < 16; ++i) {
        scores.push_back({0.5, 0.25, 0.75, 1.0, 1.0});
        selected.push_back(i);
    }
    const std::string svg = render_score_chart(scores, selected);
    // 16 groups x 4 bars + 4 legend swatches + 1 background rect
    CHECK(count_occurrences(svg, "<rect") == 16 * 4 + 4 + 1);

    SUBCASE("all-zero scores sit on the baseline") {
        const std::vector<ScoreVector> zeros{{0, 0, 0, 0, 0}};
        const std::string chart = render_score_chart(zeros, std::vector<int>{0});
        CHECK(count_occurrences(chart, "height=\"0.00\"") == 4);
    }
    SUBCASE("full scores reach full chart height") {
        const std::vector<ScoreVector> full{{1, 1, 1, 1, 2}};
        const std::string chart = render_score_chart(full, std::vector<int>{0});
        CHECK(count_occurrences(chart, "height=\"180.00\"") == 4);
    }
}

TEST_CASE("render_mesh draws kept and boundary edges") {
    const std::vector<Vec2> pts{{0, 0}, {1, 0}, {0.5, 1}, {0.5, 0.4}};
    const TriMesh mesh = build_mesh(pts, 2.0);
    const std::string svg = render_mesh(mesh);
    CHECK(count_occurrences(svg, "<line") ==
          mesh.kept_edges.size() + mesh.boundary_edges.size());
    CHECK(count_occurrences(svg, "<circle") == mesh.points.size());
}
