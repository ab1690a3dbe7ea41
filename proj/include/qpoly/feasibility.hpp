#pragma once

#include <optional>
#include <string>

#include "qpoly/params.hpp"

namespace qpoly {

/// Outcome of the feasibility filter battery. When infeasible, records the
/// smallest-numbered failing condition and a replayable witness.
struct FeasibilityReport {
    bool feasible = false;
    std::optional<int> failed_condition;  // 1..8
    std::string rule;                     // human-readable text of the failed rule
    std::vector<long> witness;            // indices that exhibit the failure

    // For primitive 3-class Q-polynomial sets: 1 = diameter-3 DRG,
    // 2/3 = strongly regular relation (rational / quadratic splitting field),
    // 4/5 = no strongly regular relation (rational / quadratic).
    std::optional<int> case_label;
};

/// Runs the eight feasibility conditions in order; the report carries the
/// first failure.
FeasibilityReport run_filters(const ParameterSet& ps);

/// Individual condition checks, exposed so tests can flip exactly one.
/// Each returns the witness of the first violation, if any.
std::optional<std::vector<long>> check_qpoly(const ParameterSet& ps);              // 1
std::optional<std::vector<long>> check_p_integrality(const ParameterSet& ps);      // 2
std::optional<std::vector<long>> check_graph_handshake(const ParameterSet& ps);    // 3
std::optional<std::vector<long>> check_subconstituent_handshake(const ParameterSet& ps);  // 4
std::optional<std::vector<long>> check_triangle_count(const ParameterSet& ps);     // 5
std::optional<std::vector<long>> check_krein_nonneg(const ParameterSet& ps);       // 6
std::optional<std::vector<long>> check_absolute_bound(const ParameterSet& ps);     // 7
std::optional<std::vector<long>> check_splitting_field(const ParameterSet& ps);    // 8

struct AbsoluteBoundEntry {
    int i, j;
    Rat lhs, rhs;
};

/// Evaluates both absolute-bound inequality families for all pairs; returns
/// the violations.
std::vector<AbsoluteBoundEntry> absolute_bound(const ParameterSet& ps);

/// 1 for a rational splitting field, 2 for a quadratic one.
int splitting_field_degree(const ParameterSet& ps);

/// Case label 1-5 for primitive 3-class Q-polynomial sets.
std::optional<int> case_label(const ParameterSet& ps, const OrderingInfo& info);

const char* condition_text(int id);

}  // namespace qpoly
