#ifndef LRCLAB_STRUCTURE_HPP
#define LRCLAB_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/galois.hpp"

namespace lrclab {

enum class PropId {
    TraceFibers,     // every nonzero trace value is hit by exactly q elements
    NormFibers,      // every nonzero norm value is hit by exactly q+1 elements
    JointFibers,     // (Tr, N) = (b, c) has 0 or 2 solutions
    ColorPartition,  // S_0 splits into q-1 color classes of q; lifts land in B_color
    PairPartition,   // lifts pair up by color, pairs are Frobenius conjugates
    SelfColor,       // q = 2^(2l+1): |S_i ∩ B_i| = 2 for all i, 2q-2 solutions total
    GraphDegrees,    // F_8 graph: out/in degree 2, three self-loops
    GraphDiameter3,  // F_8 graph: all ordered pairs connected within length 3
    PathZeroLemma,   // zero multiplicities of x_i - beta match path counts
};

inline constexpr PropId kAllProps[] = {
    PropId::TraceFibers,  PropId::NormFibers,   PropId::JointFibers,
    PropId::ColorPartition, PropId::PairPartition, PropId::SelfColor,
    PropId::GraphDegrees, PropId::GraphDiameter3, PropId::PathZeroLemma,
};

const char* prop_name(PropId id);
std::optional<PropId> prop_from_name(const std::string& name);

enum class PropStatus { Passed, Failed, HypothesisNotMet };

struct PropositionResult {
    PropId id;
    uint32_t q = 0;
    PropStatus status = PropStatus::Failed;
    std::string detail;                // measured summary
    std::vector<std::string> witness;  // violating elements, re-checkable
};

/// Whether the proposition can be checked exhaustively at this q.
bool applicable(PropId id, uint32_t q);

/// Exhaustive check of one proposition.  Throws CapacityError for
/// unsupported q.
PropositionResult check(PropId id, uint32_t q);

/// Runs every applicable proposition at q.
std::vector<PropositionResult> verify_all(uint32_t q);

}  // namespace lrclab

#endif
