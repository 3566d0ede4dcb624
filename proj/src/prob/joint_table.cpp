#include "imflow/prob/joint_table.hpp"

#include <algorithm>
#include <cmath>

#include "imflow/errors.hpp"
#include "imflow/kernels/kernels.hpp"

namespace imflow::prob {

namespace {

constexpr double kClampTol = 1e-9;  // plug-in values this close to 0 are noise

double clamp_nonneg(double v, const char* what) {
    if (v >= 0.0) return v;
    if (v >= -kClampTol) return 0.0;
    throw internal_error(std::string(what) + " is negative beyond tolerance: " +
                         std::to_string(v));
}

std::vector<Axis> checked_union(std::span<const Axis> a, std::span<const Axis> b,
                                const char* what) {
    for (Axis ax : a) {
        if (std::find(b.begin(), b.end(), ax) != b.end()) {
            throw input_error(std::string(what) + ": axis sets overlap on " + axis_name(ax));
        }
    }
    std::vector<Axis> u(a.begin(), a.end());
    u.insert(u.end(), b.begin(), b.end());
    return u;
}

}  // namespace

const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "X";
        case Axis::T: return "T";
        case Axis::Y: return "Y";
    }
    return "?";
}

void JointTable::validate() const {
    if (axes_.empty() || axes_.size() > 3) throw input_error("joint table: need 1..3 axes");
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        for (std::size_t j = i + 1; j < axes_.size(); ++j) {
            if (axes_[i] == axes_[j]) throw input_error("joint table: duplicate axis");
        }
    }
    if (cells_.empty()) throw input_error("joint table: no cells");
    double sum = 0.0;
    for (const auto& [k, m] : cells_) {
        if (!(m >= 0.0) || !std::isfinite(m)) throw input_error("joint table: bad cell mass");
        sum += m;
    }
    if (!(total_mass_ > 0.0)) throw input_error("joint table: total mass must be positive");
    if (std::abs(sum - total_mass_) > 1e-12 * std::max(1.0, total_mass_)) {
        throw internal_error("joint table: cell masses do not sum to total mass");
    }
}

JointTable JointTable::from_samples(const std::vector<Axis>& axes,
                                    const std::vector<std::span<const SymbolId>>& columns) {
    if (axes.size() != columns.size()) {
        throw input_error("from_samples: one column required per axis");
    }
    if (columns.empty() || columns[0].empty()) throw input_error("from_samples: empty input");
    const std::size_t n = columns[0].size();
    for (const auto& c : columns) {
        if (c.size() != n) throw input_error("from_samples: column length mismatch");
    }

    JointTable t;
    t.axes_ = axes;
    Key key{0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < columns.size(); ++a) key[a] = columns[a][i];
        t.cells_[key] += 1.0;
    }
    t.total_mass_ = static_cast<double>(n);
    t.validate();
    return t;
}

JointTable JointTable::from_cells(const std::vector<Axis>& axes,
                                  const std::vector<std::pair<Key, double>>& cells) {
    JointTable t;
    t.axes_ = axes;
    double sum = 0.0;
    for (const auto& [key, mass] : cells) {
        if (!(mass >= 0.0) || !std::isfinite(mass)) {
            throw input_error("from_cells: cell mass must be non-negative and finite");
        }
        if (mass == 0.0) continue;
        t.cells_[key] += mass;
        sum += mass;
    }
    t.total_mass_ = sum;
    t.validate();
    return t;
}

bool JointTable::has_axis(Axis a) const {
    return std::find(axes_.begin(), axes_.end(), a) != axes_.end();
}

SymbolId JointTable::alphabet_size(Axis a) const {
    auto it = std::find(axes_.begin(), axes_.end(), a);
    if (it == axes_.end()) throw input_error("alphabet_size: axis not in table");
    const std::size_t pos = static_cast<std::size_t>(it - axes_.begin());
    SymbolId mx = 0;
    for (const auto& [k, m] : cells_) mx = std::max(mx, k[pos]);
    return mx + 1;
}

JointTable JointTable::marginal(std::span<const Axis> keep) const {
    if (keep.empty()) throw input_error("marginal: need at least one axis");
    std::vector<std::size_t> positions;
    std::vector<Axis> kept_axes;
    for (Axis a : keep) {
        auto it = std::find(axes_.begin(), axes_.end(), a);
        if (it == axes_.end()) {
            throw input_error(std::string("marginal: axis ") + axis_name(a) + " not in table");
        }
        positions.push_back(static_cast<std::size_t>(it - axes_.begin()));
        kept_axes.push_back(a);
    }
    JointTable out;
    out.axes_ = kept_axes;
    out.total_mass_ = total_mass_;
    for (const auto& [k, m] : cells_) {
        Key reduced{0, 0, 0};
        for (std::size_t i = 0; i < positions.size(); ++i) reduced[i] = k[positions[i]];
        out.cells_[reduced] += m;
    }
    return out;
}

double entropy_bits(const JointTable& t, std::span<const Axis> axes) {
    if (axes.empty()) throw input_error("entropy: empty axis set");
    const JointTable marg = t.marginal(axes);

    std::vector<double> masses;
    masses.reserve(marg.cell_count());
    for (const auto& [k, m] : marg.cells()) masses.push_back(m);

    // H = log2(M) - (1/M) * sum m*log2(m); exact on dyadic masses
    const double total = marg.total_mass();
    const double h = std::log2(total) - kernels::plogp_sum(masses) / total;
    return clamp_nonneg(h, "entropy");
}

double conditional_entropy_bits(const JointTable& t, std::span<const Axis> target,
                                std::span<const Axis> given) {
    const auto joint = checked_union(target, given, "conditional_entropy");
    const double h = entropy_bits(t, joint) - entropy_bits(t, given);
    return clamp_nonneg(h, "conditional entropy");
}

double mutual_information_bits(const JointTable& t, std::span<const Axis> a,
                               std::span<const Axis> b) {
    const double i = entropy_bits(t, a) - conditional_entropy_bits(t, a, b);
    return clamp_nonneg(i, "mutual information");
}

double entropy_bits(const JointTable& t, std::initializer_list<Axis> axes) {
    return entropy_bits(t, std::span<const Axis>(axes.begin(), axes.size()));
}

double conditional_entropy_bits(const JointTable& t, std::initializer_list<Axis> target,
                                std::initializer_list<Axis> given) {
    return conditional_entropy_bits(t, std::span<const Axis>(target.begin(), target.size()),
                                    std::span<const Axis>(given.begin(), given.size()));
}

double mutual_information_bits(const JointTable& t, std::initializer_list<Axis> a,
                               std::initializer_list<Axis> b) {
    return mutual_information_bits(t, std::span<const Axis>(a.begin(), a.size()),
                                   std::span<const Axis>(b.begin(), b.size()));
}

}  // namespace imflow::prob
