#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splotsel {

/// A labeled multidimensional dataset: n rows, m named numeric dimensions,
/// one categorical label per row. Immutable after construction; safe to
/// share read-only across concurrent metric workers.
struct Dataset {
    std::vector<std::string> dim_names;           // m names
    std::vector<std::vector<double>> columns;     // m columns of n values each
    std::vector<int> labels;                      // n class ids in [0, n_classes)
    std::vector<std::string> class_names;         // distinct labels in file order

    std::size_t n_rows() const { return labels.size(); }
    std::size_t n_dims() const { return columns.size(); }
    int n_classes() const { return static_cast<int>(class_names.size()); }

    int dim_index(const std::string& name) const;  // -1 if unknown
};

/// One candidate scatterplot: an (x, y) dimension pair plus its stable id
/// in enumeration order.
struct ScatterplotSpec {
    int x_dim = 0;
    int y_dim = 0;
    int id = 0;
};

/// Parses delimited text with a header row. Every column except
/// `label_column` is parsed as a numeric dimension. Throws std::runtime_error
/// with a diagnostic naming the offending row/column on malformed input.
Dataset load_dataset(std::istream& source, const std::string& label_column,
                     char delimiter = ',');

/// Convenience wrapper opening `path`.
Dataset load_dataset_file(const std::string& path, const std::string& label_column,
                          char delimiter = ',');

/// Min-max maps every dimension to [0,1]; a constant dimension maps to
/// all-0.5. Labels and row order are unchanged. Idempotent.
Dataset normalize(const Dataset& d);

/// All unordered dimension pairs, x_dim < y_dim, ids 0..N-1 in lexicographic
/// index order. N = m(m-1)/2.
std::vector<ScatterplotSpec> enumerate_all_pairs(const Dataset& d);

/// Bipartite enumeration: (x, y) over x_names x y_names, lexicographic by
/// resolved indices. The two sets must be disjoint, nonempty, and name known
/// dimensions. N = |X| * |Y|.
std::vector<ScatterplotSpec> enumerate_bipartite(const Dataset& d,
                                                 const std::vector<std::string>& x_names,
                                                 const std::vector<std::string>& y_names);

}  // namespace splotsel
