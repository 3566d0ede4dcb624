#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "imflow/prob/discretize.hpp"

namespace imflow::prob {

enum class Axis : std::uint8_t { X = 0, T = 1, Y = 2 };

const char* axis_name(Axis a);

// Joint probability (or count) table over up to three named axes. Immutable
// after construction; all queries are const. Cell keys are stored in a
// sorted map so iteration order, and therefore every accumulation order
// downstream, is deterministic.
class JointTable {
public:
    using Key = std::array<SymbolId, 3>;  // components beyond axes().size() are 0

    // Builds from per-axis sample columns; cell mass = occurrence count.
    // Throws input_error on length mismatch, empty input, or duplicate axes.
    static JointTable from_samples(const std::vector<Axis>& axes,
                                   const std::vector<std::span<const SymbolId>>& columns);

    // Builds from explicit cells (tuple, mass). Masses must be non-negative
    // and finite; zero-mass cells are dropped.
    static JointTable from_cells(const std::vector<Axis>& axes,
                                 const std::vector<std::pair<Key, double>>& cells);

    const std::vector<Axis>& axes() const { return axes_; }
    double total_mass() const { return total_mass_; }
    std::size_t cell_count() const { return cells_.size(); }
    const std::map<Key, double>& cells() const { return cells_; }

    bool has_axis(Axis a) const;
    // Largest id + 1 seen on the axis.
    SymbolId alphabet_size(Axis a) const;

    // Marginal table over a non-empty subset of this table's axes.
    JointTable marginal(std::span<const Axis> keep) const;

private:
    std::vector<Axis> axes_;
    std::map<Key, double> cells_;
    double total_mass_ = 0.0;

    void validate() const;
};

// Plug-in Shannon entropy in bits over the marginal on `axes`.
// 0 * log 0 terms contribute nothing.
double entropy_bits(const JointTable& t, std::span<const Axis> axes);

// H(target | given) = H(target u given) - H(given), in bits. Small negative
// values (within 1e-9) are clamped to zero; anything lower throws
// internal_error. Throws input_error if the axis sets overlap.
double conditional_entropy_bits(const JointTable& t, std::span<const Axis> target,
                                std::span<const Axis> given);

// I(a; b) = H(a) - H(a | b), in bits, clamped like conditional entropy.
double mutual_information_bits(const JointTable& t, std::span<const Axis> a,
                               std::span<const Axis> b);

// span-of-one helpers so call sites can pass single axes directly
double entropy_bits(const JointTable& t, std::initializer_list<Axis> axes);
double conditional_entropy_bits(const JointTable& t, std::initializer_list<Axis> target,
                                std::initializer_list<Axis> given);
double mutual_information_bits(const JointTable& t, std::initializer_list<Axis> a,
                               std::initializer_list<Axis> b);

}  // namespace imflow::prob
