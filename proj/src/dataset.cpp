#include "splotsel/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace splotsel {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

// Parses a full token as a decimal or scientific-notation number.
bool parse_number(const std::string& token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

int Dataset::dim_index(const std::string& name) const {
    for (std::size_t i = 0; i < dim_names.size(); ++i)
        if (dim_names[i] == name) return static_cast<int>(i);
    return -1;
}

Dataset load_dataset(std::istream& source, const std::string& label_column,
                     char delimiter) {
    std::string line;
    if (!std::getline(source, line))
        throw std::runtime_error("empty input: no header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::vector<std::string> header = split_line(line, delimiter);
    int label_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == label_column) {
            label_idx = static_cast<int>(i);
            break;
        }
    }
    if (label_idx < 0)
        throw std::runtime_error("label column '" + label_column + "' not found in header");

    Dataset d;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (static_cast<int>(i) != label_idx) d.dim_names.push_back(header[i]);
    if (d.dim_names.size() < 2)
        throw std::runtime_error("need at least 2 numeric dimensions, got " +
                                 std::to_string(d.dim_names.size()));
    d.columns.resize(d.dim_names.size());

    std::unordered_map<std::string, int> class_ids;
    std::size_t row = 0;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++row;
        const std::vector<std::string> fields = split_line(line, delimiter);
        if (fields.size() != header.size())
            throw std::runtime_error("row " + std::to_string(row) + ": expected " +
                                     std::to_string(header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        std::size_t dim = 0;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (static_cast<int>(i) == label_idx) continue;
            const std::string& cell = fields[i];
            if (cell.empty())
                throw std::runtime_error("row " + std::to_string(row) + ", column " +
                                         header[i] + ": missing value");
            double v = 0.0;
            if (!parse_number(cell, v))
                throw std::runtime_error("row " + std::to_string(row) + ", column " +
                                         header[i] + ": non-numeric value '" + cell + "'");
            if (!std::isfinite(v))
                throw std::runtime_error("row " + std::to_string(row) + ", column " +
                                         header[i] + ": non-finite value '" + cell + "'");
            d.columns[dim++].push_back(v);
        }
        const std::string& label = fields[label_idx];
        auto [it, inserted] = class_ids.try_emplace(label, d.n_classes());
        if (inserted) d.class_names.push_back(label);
        d.labels.push_back(it->second);
    }
    if (d.labels.empty()) throw std::runtime_error("no data rows");
    return d;
}

Dataset load_dataset_file(const std::string& path, const std::string& label_column,
                          char delimiter) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_dataset(in, label_column, delimiter);
}

Dataset normalize(const Dataset& d) {
    Dataset out = d;
    for (auto& col : out.columns) {
        auto [mn_it, mx_it] = std::minmax_element(col.begin(), col.end());
        const double mn = *mn_it, mx = *mx_it;
        if (mx == mn) {
            std::fill(col.begin(), col.end(), 0.5);
        } else {
            const double span = mx - mn;
            for (double& v : col) v = (v - mn) / span;
        }
    }
    return out;
}

std::vector<ScatterplotSpec> enumerate_all_pairs(const Dataset& d) {
    std::vector<ScatterplotSpec> specs;
    const int m = static_cast<int>(d.n_dims());
    specs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    int id = 0;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) specs.push_back({x, y, id++});
    return specs;
}

std::vector<ScatterplotSpec> enumerate_bipartite(const Dataset& d,
                                                 const std::vector<std::string>& x_names,
                                                 const std::vector<std::string>& y_names) {
    if (x_names.empty() || y_names.empty())
        throw std::runtime_error("bipartite mode needs nonempty x and y dimension sets");
    auto resolve = [&](const std::vector<std::string>& names, const char* side) {
        std::vector<int> idx;
        for (const auto& name : names) {
            int i = d.dim_index(name);
            if (i < 0)
                throw std::runtime_error(std::string("unknown dimension in ") + side +
                                         "-set: '" + name + "'");
            idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        return idx;
    };
    std::vector<int> xs = resolve(x_names, "x");
    std::vector<int> ys = resolve(y_names, "y");
    for (int x : xs)
        for (int y : ys)
            if (x == y)
                throw std::runtime_error("x and y dimension sets overlap: '" +
                                         d.dim_names[x] + "'");
    std::vector<ScatterplotSpec> specs;
    specs.reserve(xs.size() * ys.size());
    int id = 0;
    for (int x : xs)
        for (int y : ys) specs.push_back({x, y, id++});
    return specs;
}

}  // namespace splotsel
