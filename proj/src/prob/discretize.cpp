#include "imflow/prob/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "imflow/errors.hpp"

namespace imflow::prob {

namespace {

std::vector<std::pair<double, double>> derive_ranges(const Matrix& raw) {
    std::vector<std::pair<double, double>> ranges(raw.cols);
    for (std::size_t j = 0; j < raw.cols; ++j) {
        double lo = raw.at(0, j), hi = raw.at(0, j);
        for (std::size_t i = 1; i < raw.rows; ++i) {
            lo = std::min(lo, raw.at(i, j));
            hi = std::max(hi, raw.at(i, j));
        }
        ranges[j] = {lo, hi};
    }
    return ranges;
}

// Interior quantile cut points; duplicates collapse neighbouring bins.
std::vector<std::vector<double>> quantile_edges(const Matrix& raw, int bins) {
    std::vector<std::vector<double>> edges(raw.cols);
    std::vector<double> col(raw.rows);
    for (std::size_t j = 0; j < raw.cols; ++j) {
        for (std::size_t i = 0; i < raw.rows; ++i) col[i] = raw.at(i, j);
        std::sort(col.begin(), col.end());
        for (int k = 1; k < bins; ++k) {
            std::size_t idx = (static_cast<std::size_t>(k) * raw.rows) / bins;
            if (idx >= raw.rows) idx = raw.rows - 1;
            edges[j].push_back(col[idx]);
        }
    }
    return edges;
}

SymbolColumn encode_tuples(const std::vector<std::vector<SymbolId>>& bin_rows) {
    SymbolColumn out;
    out.ids.reserve(bin_rows.size());
    std::map<std::vector<SymbolId>, SymbolId> dict;
    for (const auto& tuple : bin_rows) {
        auto [it, inserted] = dict.emplace(tuple, static_cast<SymbolId>(dict.size()));
        out.ids.push_back(it->second);
    }
    out.alphabet = static_cast<SymbolId>(dict.size());
    return out;
}

}  // namespace

SymbolColumn discretize(const Matrix& raw, const Discretizer& d) {
    if (raw.rows == 0 || raw.cols == 0) throw input_error("discretize: empty input matrix");
    if (d.bins < 2) throw input_error("discretize: bins_per_dimension must be >= 2");
    if (d.ranges && d.ranges->size() != raw.cols) {
        throw input_error("discretize: range list does not match input dimension");
    }

    for (std::size_t i = 0; i < raw.rows; ++i) {
        for (std::size_t j = 0; j < raw.cols; ++j) {
            if (!std::isfinite(raw.at(i, j))) {
                throw input_error("discretize: non-finite value at row " + std::to_string(i) +
                                  ", dimension " + std::to_string(j));
            }
        }
    }

    const auto ranges = d.ranges ? *d.ranges : derive_ranges(raw);
    for (const auto& [lo, hi] : ranges) {
        if (!(lo <= hi)) throw input_error("discretize: range lower bound exceeds upper bound");
    }

    std::vector<std::vector<double>> qedges;
    if (d.strategy == BinStrategy::quantile) qedges = quantile_edges(raw, d.bins);

    std::vector<std::vector<SymbolId>> bin_rows(raw.rows, std::vector<SymbolId>(raw.cols));
    for (std::size_t i = 0; i < raw.rows; ++i) {
        for (std::size_t j = 0; j < raw.cols; ++j) {
            const double v = raw.at(i, j);
            SymbolId bin = 0;
            if (d.strategy == BinStrategy::uniform) {
                const auto [lo, hi] = ranges[j];
                if (hi > lo) {
                    double t = (v - lo) / (hi - lo) * d.bins;
                    long b = static_cast<long>(std::floor(t));
                    b = std::clamp(b, 0L, static_cast<long>(d.bins - 1));
                    bin = static_cast<SymbolId>(b);
                }
                // constant dimension: single bin 0
            } else {
                const auto& e = qedges[j];
                bin = static_cast<SymbolId>(std::upper_bound(e.begin(), e.end(), v) - e.begin());
            }
            bin_rows[i][j] = bin;
        }
    }
    return encode_tuples(bin_rows);
}

SymbolColumn encode_rows_exact(const Matrix& raw) {
    if (raw.rows == 0) throw input_error("encode_rows_exact: empty input");
    SymbolColumn out;
    out.ids.reserve(raw.rows);
    std::map<std::vector<double>, SymbolId> dict;
    std::vector<double> row(raw.cols);
    for (std::size_t i = 0; i < raw.rows; ++i) {
        row.assign(raw.row(i), raw.row(i) + raw.cols);
        auto [it, inserted] = dict.emplace(row, static_cast<SymbolId>(dict.size()));
        out.ids.push_back(it->second);
    }
    out.alphabet = static_cast<SymbolId>(dict.size());
    return out;
}

SymbolColumn encode_labels(const std::vector<std::string>& values) {
    if (values.empty()) throw input_error("encode_labels: empty input");
    std::set<std::string> distinct(values.begin(), values.end());
    std::map<std::string, SymbolId> dict;
    for (const auto& v : distinct) dict.emplace(v, static_cast<SymbolId>(dict.size()));
    SymbolColumn out;
    out.ids.reserve(values.size());
    for (const auto& v : values) out.ids.push_back(dict.at(v));
    out.alphabet = static_cast<SymbolId>(dict.size());
    return out;
}

}  // namespace imflow::prob
