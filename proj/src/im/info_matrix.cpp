#include "imflow/im/info_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "imflow/errors.hpp"

namespace imflow::im {

using prob::Axis;

namespace {
constexpr double kAlgebraicTol = 1e-9;
}

InfoQuantities quantities_from_joint(const prob::JointTable& t) {
    for (Axis a : {Axis::X, Axis::T, Axis::Y}) {
        if (!t.has_axis(a)) {
            throw input_error(std::string("quantities_from_joint: missing axis ") +
                              prob::axis_name(a));
        }
    }
    InfoQuantities q;
    q.h_x = prob::entropy_bits(t, {Axis::X});
    q.h_y = prob::entropy_bits(t, {Axis::Y});
    q.h_f = prob::entropy_bits(t, {Axis::T});
    q.n_xy = prob::conditional_entropy_bits(t, {Axis::X}, {Axis::Y});
    q.l_xy = prob::conditional_entropy_bits(t, {Axis::Y}, {Axis::X});
    q.n_xxf = prob::conditional_entropy_bits(t, {Axis::T}, {Axis::X});
    q.l_xxf = prob::conditional_entropy_bits(t, {Axis::X}, {Axis::T});
    q.n_xyf = prob::conditional_entropy_bits(t, {Axis::T}, {Axis::Y});
    q.l_xyf = prob::conditional_entropy_bits(t, {Axis::Y}, {Axis::T});
    q.i_xy = prob::mutual_information_bits(t, {Axis::X}, {Axis::Y});
    q.i_xxf = prob::mutual_information_bits(t, {Axis::X}, {Axis::T});
    q.i_xyf = prob::mutual_information_bits(t, {Axis::T}, {Axis::Y});
    q.dloss = q.l_xyf - q.l_xy;
    return q;
}

InformationMatrix information_matrix(const InfoQuantities& q) {
    InformationMatrix m;
    m.a = q.n_xy - q.n_xyf;
    m.b = q.n_xyf;
    m.c = q.dloss;
    m.d = q.i_xy - q.dloss;
    m.source = q;
    return m;
}

NoiseLossPoint noise_loss_point(const InformationMatrix& m) { return {m.a, m.d}; }

double ixx_from_point(const NoiseLossPoint& p, double n_xy, double n_xxf) {
    if (n_xy < 0 || n_xxf < 0) throw input_error("ixx_from_point: negative inputs");
    const double ixx = p.y_bits - p.x_bits + n_xy - n_xxf;
    if (ixx < -kAlgebraicTol) {
        throw input_error("ixx_from_point: inconsistent inputs, I(X;f(X)) = " +
                          std::to_string(ixx));
    }
    return ixx;
}

const char* pattern_name(PatternKind k) {
    switch (k) {
        case PatternKind::lossless: return "lossless";
        case PatternKind::max_discriminative: return "max_discriminative";
        case PatternKind::dummy: return "dummy";
        case PatternKind::random_prediction: return "random";
        case PatternKind::intermediate: return "intermediate";
    }
    return "?";
}

PatternLabel classify_pattern(const InformationMatrix& m, double tau) {
    if (!(tau > 0.0 && tau < 0.5)) throw input_error("classify_pattern: tau must be in (0, 0.5)");
    const InfoQuantities& q = m.source;

    // normalized coordinates; a degenerate axis matches every corner
    const bool x_degenerate = q.n_xy <= 0.0;
    const bool y_degenerate = q.i_xy <= 0.0;
    const double xn = x_degenerate ? 0.0 : m.a / q.n_xy;
    const double yn = y_degenerate ? 0.0 : m.d / q.i_xy;

    struct Corner {
        PatternKind kind;
        double x, y;
    };
    const Corner corners[] = {
        {PatternKind::lossless, 0.0, 1.0},
        {PatternKind::max_discriminative, 1.0, 1.0},
        {PatternKind::dummy, 1.0, 0.0},
        {PatternKind::random_prediction, 0.0, 0.0},
    };

    PatternLabel label;
    for (const Corner& c : corners) {
        const double dx = x_degenerate ? 0.0 : std::abs(xn - c.x);
        const double dy = y_degenerate ? 0.0 : std::abs(yn - c.y);
        if (std::max(dx, dy) <= tau) {
            label.kind = c.kind;
            break;
        }
    }
    if (label.kind == PatternKind::max_discriminative) {
        label.oracle = q.l_xy <= tau * q.h_y;
    }
    return label;
}

const char* mode_name(ConstraintMode m) {
    return m == ConstraintMode::deterministic ? "deterministic" : "stochastic";
}

namespace {

using Observed = std::vector<std::pair<std::string, double>>;

ConstraintCheck equality_check(std::string name, std::string relation, double lhs, double rhs,
                               Observed observed) {
    ConstraintCheck c;
    c.name = std::move(name);
    c.relation = std::move(relation);
    c.observed = std::move(observed);
    c.slack_bits = std::abs(lhs - rhs);
    c.pass = c.slack_bits <= kAlgebraicTol;
    return c;
}

ConstraintCheck lower_bound_check(std::string name, std::string relation, double value,
                                  double bound, double tol, Observed observed) {
    ConstraintCheck c;
    c.name = std::move(name);
    c.relation = std::move(relation);
    c.observed = std::move(observed);
    c.slack_bits = value - bound;
    c.pass = c.slack_bits >= -tol;
    return c;
}

ConstraintCheck upper_bound_check(std::string name, std::string relation, double value,
                                  double bound, double tol, Observed observed) {
    ConstraintCheck c;
    c.name = std::move(name);
    c.relation = std::move(relation);
    c.observed = std::move(observed);
    c.slack_bits = bound - value;
    c.pass = c.slack_bits >= -tol;
    return c;
}

}  // namespace

ConstraintReport verify_constraints(const InformationMatrix& m, ConstraintMode mode,
                                    double tol_bits) {
    if (tol_bits < 0) throw input_error("verify_constraints: tol must be >= 0");
    const InfoQuantities& q = m.source;
    const bool det = mode == ConstraintMode::deterministic;

    ConstraintReport r;
    r.mode = mode;
    r.tol_bits = tol_bits;
    auto& cs = r.checks;

    // Table of sums: rows split by relevance, columns by filtering.
    cs.push_back(equality_check("row-irrelevant", "a + b = n_xy", m.a + m.b, q.n_xy,
                                {{"a", m.a}, {"b", m.b}, {"n_xy", q.n_xy}}));
    cs.push_back(equality_check("row-relevant", "c + d = i_xy", m.c + m.d, q.i_xy,
                                {{"c", m.c}, {"d", m.d}, {"i_xy", q.i_xy}}));
    cs.push_back(equality_check("row-overall", "n_xy + i_xy = h_x", q.n_xy + q.i_xy, q.h_x,
                                {{"n_xy", q.n_xy}, {"i_xy", q.i_xy}, {"h_x", q.h_x}}));
    cs.push_back(equality_check("col-filtered-in", "b + d = h_f", m.b + m.d, q.h_f,
                                {{"b", m.b}, {"d", m.d}, {"h_f", q.h_f}}));
    cs.push_back(equality_check("col-filtered-out", "a + c = h_x - h_f", m.a + m.c,
                                q.h_x - q.h_f, {{"a", m.a}, {"c", m.c}, {"h_x", q.h_x},
                                                {"h_f", q.h_f}}));
    cs.push_back(equality_check("total", "a + b + c + d = h_x", m.a + m.b + m.c + m.d, q.h_x,
                                {{"sum", m.a + m.b + m.c + m.d}, {"h_x", q.h_x}}));

    // forward/backward split of the filtered-in information
    cs.push_back(equality_check("split-forward", "i_xyf + n_xyf = h_f", q.i_xyf + q.n_xyf,
                                q.h_f, {{"i_xyf", q.i_xyf}, {"n_xyf", q.n_xyf}, {"h_f", q.h_f}}));
    cs.push_back(equality_check("split-backward", "i_xxf + n_xxf = h_f", q.i_xxf + q.n_xxf,
                                q.h_f, {{"i_xxf", q.i_xxf}, {"n_xxf", q.n_xxf}, {"h_f", q.h_f}}));

    // mode-dependent noise and loss ranges
    const double noise_floor = det ? 0.0 : q.n_xxf;
    const double loss_floor = det ? q.l_xy : q.l_xy + q.n_xxf;
    cs.push_back(lower_bound_check("noise-lower-bound",
                                   det ? "n_xyf >= 0" : "n_xyf >= n_xxf", q.n_xyf, noise_floor,
                                   tol_bits, {{"n_xyf", q.n_xyf}, {"floor", noise_floor}}));
    cs.push_back(upper_bound_check("noise-upper-bound", "n_xyf <= n_xy", q.n_xyf, q.n_xy,
                                   tol_bits, {{"n_xyf", q.n_xyf}, {"n_xy", q.n_xy}}));
    cs.push_back(lower_bound_check("loss-lower-bound",
                                   det ? "l_xyf >= l_xy" : "l_xyf >= l_xy + n_xxf", q.l_xyf,
                                   loss_floor, tol_bits,
                                   {{"l_xyf", q.l_xyf}, {"floor", loss_floor}}));
    cs.push_back(upper_bound_check("loss-upper-bound", "l_xyf <= h_y", q.l_xyf, q.h_y, tol_bits,
                                   {{"l_xyf", q.l_xyf}, {"h_y", q.h_y}}));

    if (det) {
        cs.push_back(upper_bound_check("determinism", "n_xxf <= tol", q.n_xxf, 0.0, tol_bits,
                                       {{"n_xxf", q.n_xxf}}));
    }

    // per-entry ranges; stochastic mode tightens them by the injected noise
    const double a_hi = det ? q.n_xy : q.n_xy - q.n_xxf;
    const double b_lo = det ? 0.0 : q.n_xxf;
    const double c_lo = det ? 0.0 : q.n_xxf;
    const double d_hi = det ? q.i_xy : q.i_xy - q.n_xxf;
    struct Range {
        const char* name;
        double value, lo, hi;
    };
    const Range ranges[] = {
        {"a", m.a, 0.0, a_hi},
        {"b", m.b, b_lo, q.n_xy},
        {"c", m.c, c_lo, q.i_xy},
        {"d", m.d, 0.0, d_hi},
    };
    for (const Range& e : ranges) {
        ConstraintCheck c;
        c.name = std::string("range-") + e.name;
        c.relation = std::string(e.name) + " within [min, max]";
        c.observed = {{"value", e.value}, {"min", e.lo}, {"max", e.hi}};
        c.slack_bits = std::min(e.value - e.lo, e.hi - e.value);
        c.pass = c.slack_bits >= -tol_bits;
        cs.push_back(c);
    }

    if (m.a + m.c < -kAlgebraicTol) {
        r.warnings.push_back("entropy expansion: h_f exceeds h_x by " +
                             std::to_string(q.h_f - q.h_x) + " bits");
    }

    r.all_pass = std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.pass; });
    return r;
}

}  // namespace imflow::im
