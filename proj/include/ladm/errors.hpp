#ifndef LADM_ERRORS_HPP
#define LADM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ladm {

enum class Errc {
    cycle_detected,
    dangling_end,
    empty_action,
    empty_vertex_name,
    unknown_vertex,
    unknown_arc,
    overlapping_sets,
    empty_side,
    bad_partition,
    bad_subset,
    name_clash,
    cycle_created,
    hypotheses_failed,
    infeasible_budget,
    too_large,
    parse_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::cycle_detected:    return "CycleDetected";
    case Errc::dangling_end:      return "DanglingEnd";
    case Errc::empty_action:      return "EmptyAction";
    case Errc::empty_vertex_name: return "EmptyVertexName";
    case Errc::unknown_vertex:    return "UnknownVertex";
    case Errc::unknown_arc:       return "UnknownArc";
    case Errc::overlapping_sets:  return "OverlappingSets";
    case Errc::empty_side:        return "EmptySide";
    case Errc::bad_partition:     return "BadPartition";
    case Errc::bad_subset:        return "BadSubset";
    case Errc::name_clash:        return "NameClash";
    case Errc::cycle_created:     return "CycleCreated";
    case Errc::hypotheses_failed: return "HypothesesFailed";
    case Errc::infeasible_budget: return "InfeasibleBudget";
    case Errc::too_large:         return "TooLarge";
    case Errc::parse_error:       return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Thrown by the decompose entry points when a hypothesis clause fails and
/// force mode is off.  Carries the names of the failed clauses.
class HypothesesError : public Error {
public:
    HypothesesError(std::vector<std::string> clauses, const std::string& what)
        : Error(Errc::hypotheses_failed, what), clauses_(std::move(clauses)) {}

    const std::vector<std::string>& failed_clauses() const { return clauses_; }

private:
    std::vector<std::string> clauses_;
};

} // namespace ladm

#endif
