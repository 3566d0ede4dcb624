#pragma once

#include <string>
#include <vector>

#include "imflow/im/info_matrix.hpp"

namespace imflow::objectives {

// One transformation entered in a selection, described by its quantities.
struct Candidate {
    std::string name;
    im::InfoQuantities quantities;
};

enum class ObjectiveKind {
    loss_only,        // l_xyf
    noise_only,       // n_xyf
    diagonal,         // n_xyf + l_xyf
    parametric,       // alpha * n_xyf + (1 - alpha) * l_xyf, alpha in [0, 1]
    ib_reformulated,  // n_xyf + (beta - 1) * l_xyf, beta >= 0
    ib_raw,           // i_xxf - beta * i_xyf, beta >= 0
};

const char* objective_name(ObjectiveKind k);

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::diagonal;
    double parameter = 0.0;  // alpha or beta where applicable

    static ObjectiveSpec loss_only() { return {ObjectiveKind::loss_only, 0.0}; }
    static ObjectiveSpec noise_only() { return {ObjectiveKind::noise_only, 0.0}; }
    static ObjectiveSpec diagonal() { return {ObjectiveKind::diagonal, 0.0}; }
    static ObjectiveSpec parametric(double alpha) { return {ObjectiveKind::parametric, alpha}; }
    static ObjectiveSpec ib_reformulated(double beta) {
        return {ObjectiveKind::ib_reformulated, beta};
    }
    static ObjectiveSpec ib_raw(double beta) { return {ObjectiveKind::ib_raw, beta}; }
};

// Objective value in bits. Throws input_error on an out-of-range parameter.
// beta < 1 is accepted (the reversal it causes is itself of interest) but
// callers that build reports should surface degenerate_beta().
double objective_value(const ObjectiveSpec& spec, const im::InfoQuantities& q);

inline bool degenerate_beta(const ObjectiveSpec& spec) {
    return (spec.kind == ObjectiveKind::ib_reformulated || spec.kind == ObjectiveKind::ib_raw) &&
           spec.parameter < 1.0;
}

// Ties are real: the argmin set keeps every candidate within 1e-12 of the
// minimum, and `selected` is the lowest-index member.
struct SelectionResult {
    std::vector<std::pair<std::string, double>> values;  // candidate order preserved
    std::vector<std::string> argmin_set;
    std::string selected;
};

SelectionResult select(const std::vector<Candidate>& candidates, const ObjectiveSpec& spec);

struct EquivalenceResult {
    bool equivalent = false;
    SelectionResult parametric;
    SelectionResult ib;
};

// Argmin-set identity of parametric(alpha) and ib_reformulated(1/alpha).
// alpha must be in (0, 1]; alpha = 0 leaves beta undefined and is rejected.
EquivalenceResult equivalence_check(const std::vector<Candidate>& candidates, double alpha);

// Argmin-set identity of ib_raw(beta) and ib_reformulated(beta). Only valid
// on deterministic candidate families (the term dropped from the raw form is
// then a shared constant); a candidate with n_xxf > 1e-9 is rejected.
bool raw_vs_reformulated_check(const std::vector<Candidate>& candidates, double beta);

}  // namespace imflow::objectives
