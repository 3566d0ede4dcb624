#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imflow/matrix.hpp"

namespace imflow::prob {

using SymbolId = std::uint32_t;

// One dictionary-encoded discrete column. Ids are dense: 0 <= id < alphabet.
struct SymbolColumn {
    std::vector<SymbolId> ids;
    SymbolId alphabet = 0;
};

enum class BinStrategy { uniform, quantile };

struct Discretizer {
    BinStrategy strategy = BinStrategy::uniform;
    int bins = 16;  // per dimension, >= 2
    // Per-dimension (lower, upper); derived from the data when unset.
    std::optional<std::vector<std::pair<double, double>>> ranges;
};

// Maps each row of `raw` to one symbol. Per-dimension bin indices are
// combined by exact tuple dictionary encoding (first-seen order), never by
// hashing, so identical rows always share a symbol and distinct bin tuples
// never collide. A constant dimension collapses to a single bin. Values
// outside an explicit range are clamped into the edge bins.
// Throws input_error on non-finite values (diagnostic names row and column)
// or an invalid discretizer.
SymbolColumn discretize(const Matrix& raw, const Discretizer& d);

// Dictionary-encodes rows by exact content: two rows get the same symbol iff
// they are bitwise-identical tuples. Used where lossy binning of the source
// would break exactness guarantees.
SymbolColumn encode_rows_exact(const Matrix& raw);

// Dictionary-encodes an already-discrete column (class labels). Distinct
// values are ranked in sorted order so the encoding does not depend on row
// order.
SymbolColumn encode_labels(const std::vector<std::string>& values);

}  // namespace imflow::prob
