#ifndef LRCLAB_PRESETS_HPP
#define LRCLAB_PRESETS_HPP

#include <string>
#include <vector>

#include "lrclab/bounds.hpp"
#include "lrclab/distance.hpp"
#include "lrclab/evalcode.hpp"

namespace lrclab {

/// Registry of the named code constructions:
///   gs-thm34-q8, gs-thm36-q8, gs-cor38-q8-l{1..32},
///   f4-prop41-j{1..}, f4-rem42a, f4-rem42b, f8-prop44, f8-prop45.
bool is_preset(const std::string& name);
std::vector<std::string> preset_names();  // sweep/depth families listed once with {..}

/// Builds the preset: places, generator matrix, rank, repair plan, bounds,
/// with the source construction's claimed parameters attached.
EvalCode build_preset(const std::string& name);

/// The claimed (n, k, d, r) of a preset without building it.
EvalCode::Claims preset_claims(const std::string& name);

/// The two parameter readings of the depth-j repetition-style construction:
/// reading A keeps E_0 = 0 (dimension n/4), reading B uses E_0 = 1
/// (dimension n/2).  build_preset("f4-prop41-jJ") builds reading A.
EvalCode build_f4_prop41(int depth, int e0);

/// Claimed rate points of the seven studied examples (the GS rows follow the
/// closed-form parameters at this q; the others are fixed small codes).
std::vector<RatePoint> table1_points(uint32_t q);

/// Claimed rate points of the Cor38 sweep for l in [l_min, l_max].
std::vector<RatePoint> cor38_points(uint32_t q, uint32_t l_min, uint32_t l_max);

/// The explicit low-weight codeword the source construction names for this
/// preset, usable as a distance upper-bound witness.  Throws UsageError when
/// the preset has none.
FactoredCodeword preset_explicit_codeword(const EvalCode& code);

/// The recorded discrepancies between the published table and the measured
/// artifact, for the diagnostics stream.
std::vector<std::string> table1_errata();

}  // namespace lrclab

#endif
