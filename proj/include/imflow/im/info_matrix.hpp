#pragma once

#include <string>
#include <vector>

#include "imflow/prob/joint_table.hpp"

namespace imflow::im {

// Every quantity, in bits, describing one transformation T = f(X) against a
// target Y. Naming: n_* are conditional entropies read as noise, l_* as
// loss; the xxf/xyf suffixes mark the backward (source) and forward (target)
// views of f.
struct InfoQuantities {
    double h_x = 0;    // H(X)
    double h_y = 0;    // H(Y)
    double h_f = 0;    // H(f(X))
    double n_xy = 0;   // H(X|Y)   irrelevant information in the source
    double l_xy = 0;   // H(Y|X)   a-priori lack of relevant information
    double n_xxf = 0;  // H(f(X)|X) stochasticity of f
    double l_xxf = 0;  // H(X|f(X)) source information lost by f
    double n_xyf = 0;  // H(f(X)|Y) irrelevant information left unremoved
    double l_xyf = 0;  // H(Y|f(X)) lack + loss of relevant information
    double i_xy = 0;   // I(X;Y)
    double i_xxf = 0;  // I(X;f(X))
    double i_xyf = 0;  // I(f(X);Y)
    double dloss = 0;  // l_xyf - l_xy, the loss attributable to f
};

// Requires all three axes {X, T, Y} present. Throws input_error otherwise.
InfoQuantities quantities_from_joint(const prob::JointTable& t);

// 2x2 decomposition of H(X) by relevance (rows) and filtering (columns):
//   a = removed irrelevant     b = unremoved irrelevant
//   c = lost relevant          d = retained relevant
// Entries are kept as defined even when estimation pushes them negative;
// verify_constraints reports such cases rather than masking them.
struct InformationMatrix {
    double a = 0, b = 0, c = 0, d = 0;
    InfoQuantities source;
};

InformationMatrix information_matrix(const InfoQuantities& q);

// Coordinates in the noise-loss diagram: x = removed irrelevant (a),
// y = retained relevant (d).
struct NoiseLossPoint {
    double x_bits = 0;
    double y_bits = 0;
};

NoiseLossPoint noise_loss_point(const InformationMatrix& m);

// Value of I(X;f(X)) on the 45-degree isometric through the point:
//   i_xxf = y - x + n_xy - n_xxf
// (n_xxf = 0 recovers the deterministic form). Throws input_error when the
// result is negative beyond 1e-9, which signals inconsistent inputs.
double ixx_from_point(const NoiseLossPoint& p, double n_xy, double n_xxf);

enum class PatternKind { lossless, max_discriminative, dummy, random_prediction, intermediate };

const char* pattern_name(PatternKind k);

struct PatternLabel {
    PatternKind kind = PatternKind::intermediate;
    bool oracle = false;  // meaningful only with max_discriminative
};

// Nearest-corner classification in the noise-loss diagram. Coordinates are
// normalized by (n_xy, i_xy); a zero denominator means that axis has a
// single admissible value and is treated as already at every corner. A
// corner within tau in normalized Chebyshev distance wins (ties resolved in
// enum order); otherwise the label is intermediate. Requires 0 < tau < 0.5.
PatternLabel classify_pattern(const InformationMatrix& m, double tau);

enum class ConstraintMode { deterministic, stochastic };

const char* mode_name(ConstraintMode m);

// One verified relation. For equality checks slack_bits = |lhs - rhs| and
// pass means slack_bits <= tol. For bound checks slack_bits is the signed
// margin (value - lower, or upper - value); pass means slack_bits >= -tol,
// so a negative slack quantifies the violation.
struct ConstraintCheck {
    std::string name;
    std::string relation;
    std::vector<std::pair<std::string, double>> observed;
    bool pass = false;
    double slack_bits = 0;
};

struct ConstraintReport {
    ConstraintMode mode = ConstraintMode::deterministic;
    double tol_bits = 0;
    std::vector<ConstraintCheck> checks;
    std::vector<std::string> warnings;
    bool all_pass = false;
};

// Checks the row/column/total sum identities, both halves of the
// forward/backward split of H(f(X)), the mode-dependent noise and loss
// bounds, the per-entry ranges (generalized to the mode), and in
// deterministic mode that n_xxf <= tol. Sum identities use a fixed 1e-9
// algebraic tolerance; bound checks use `tol`. Failures are report entries,
// never exceptions.
ConstraintReport verify_constraints(const InformationMatrix& m, ConstraintMode mode,
                                    double tol_bits);

}  // namespace imflow::im
