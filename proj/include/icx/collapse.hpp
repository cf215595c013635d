#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icx/complex.hpp"
#include "icx/vertex_set.hpp"

namespace icx {

// One elementary collapse: remove the interval [free_face, carrier], where
// carrier is the unique facet containing free_face at application time.
struct CollapseStep {
    VertexSet free_face;
    VertexSet carrier;

    bool operator==(const CollapseStep&) const = default;
};

struct CollapseSequence {
    int d = 0;
    std::vector<CollapseStep> steps;
};

// All free faces of size <= d with their carriers, ordered by (size, face,
// carrier). Includes facets of size <= d paired with themselves. The complex
// must not be void.
std::vector<CollapseStep> free_faces(const Complex& x, int d);

// Applies one elementary collapse; throws std::invalid_argument when the step
// is illegal (face not free, or carrier mismatch).
Complex apply_collapse(const Complex& x, const CollapseStep& step);

struct SequenceCheck {
    bool ok = false;
    int failing_step = -1;  // first illegal step, or -1; steps may also fail
                            // by not ending at the void complex
};

SequenceCheck verify_sequence(const Complex& x, const CollapseSequence& seq);

enum class CollapseStatus { witness, refuted, budget_exhausted };

struct CollapseSearchResult {
    CollapseStatus status = CollapseStatus::budget_exhausted;
    CollapseSequence witness;  // populated iff status == witness
    std::uint64_t nodes = 0;   // budget units consumed
};

// Exhaustive depth-first search over collapse orders, memoized on the facet
// antichain of each intermediate complex. `refuted` is only reported when the
// whole reachable state space was exhausted within budget; the budget counts
// expanded states plus generated candidate moves.
CollapseSearchResult is_d_collapsible(const Complex& x, int d, std::uint64_t budget = 10'000'000);

struct CollapsibilityNumber {
    bool exact = false;
    int value = -1;  // meaningful iff exact
    int lower = 0;
    int upper = 0;
    std::string lower_provenance;
    std::string upper_provenance;
    std::optional<CollapseSequence> witness;
    std::string to_string() const;
};

// Brackets C(X) between a homological lower bound and dim(X) + 1, then runs
// is_d_collapsible upward from the lower end. Each level gets the full search
// budget. `lower_bound_subsets` is forwarded to leray_lower_bound when the
// ground set is too large for the exact Leray number.
CollapsibilityNumber collapsibility_number(const Complex& x, std::uint64_t budget = 10'000'000,
                                           const std::vector<VertexSet>& lower_bound_subsets = {});

}  // namespace icx
