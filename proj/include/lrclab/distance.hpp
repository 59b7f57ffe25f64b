#ifndef LRCLAB_DISTANCE_HPP
#define LRCLAB_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/evalcode.hpp"

namespace lrclab {

/// f = prod_i prod_{alpha in roots_i} (x_{var_i} - alpha).
struct Factor {
    size_t var = 0;
    std::vector<uint32_t> roots;
};

struct FactoredCodeword {
    std::vector<Factor> factors;
};

struct DegreeBound {
    uint64_t value = 0;
    bool clamped = false;  // true when the raw bound was negative
};

/// n - sum_i E_i deg(x_i) from the tower's declared pole degrees.
DegreeBound degree_lower_bound(const EvalCode& code);

/// Coefficient vector of the expanded product in box-monomial order.
/// Throws when some variable collects more roots than its box bound.
std::vector<uint32_t> expand_factored(const EvalCode& code, const FactoredCodeword& f);

struct WeightReport {
    uint64_t zeros = 0;
    uint64_t weight = 0;
};

/// Weight of the factored codeword: n minus the places where a factor
/// vanishes.  Recomputed through expand+encode as a consistency check; the
/// two routes must agree.
WeightReport weight_of_factored(const EvalCode& code, const FactoredCodeword& f);

enum class HVariant { Thm34, Thm36, Cor38 };

struct HConstruction {
    FactoredCodeword h;
    std::vector<uint32_t> h0, h1, h2;  // root sets for x_0, x_1, x_2
    uint64_t zeros = 0;
    uint64_t weight = 0;
    std::vector<std::string> notes;  // errata and selection diagnostics
};

/// Builds the explicit low-weight codeword h = h0 h1 h2 of the depth-2
/// Garcia-Stichtenoth codes.  Selection is deterministic (generator-power
/// order) and every counting claim along the way is asserted; a claim that
/// fails raises StructuralError naming it.  For Cor38 the factor count l is
/// the box bound E_0.
HConstruction construct_h(const EvalCode& code, HVariant variant,
                          std::vector<std::string>* diagnostics = nullptr);

struct DistanceReport {
    std::optional<uint64_t> d_lower;
    std::string lower_provenance;  // "degree-bound" | "exhaustive"
    std::optional<uint64_t> d_upper;
    std::string upper_provenance;  // "explicit-codeword" | "exhaustive" | "sampled"
    bool exact = false;
    std::vector<std::string> notes;
};

inline constexpr uint64_t kDefaultDistanceBudget = uint64_t{1} << 31;

/// Exact minimum weight by scanning one representative per scalar class of
/// nonzero messages (weight is scale-invariant).  Refuses when q^k exceeds
/// the budget, reporting the required budget.  Parallel; the returned
/// minimum does not depend on the schedule.
DistanceReport exhaustive_min_distance(const EvalCode& code,
                                       uint64_t budget = kDefaultDistanceBudget);

inline constexpr uint32_t kNoSampledFloor = UINT32_MAX;  // returned for zero trials

/// Minimum weight over `trials` seeded random codewords: an upper-bound
/// witness only.  Deterministic for a fixed seed.
uint32_t sampled_weight_floor(const EvalCode& code, uint64_t trials, uint64_t seed);

}  // namespace lrclab

#endif
