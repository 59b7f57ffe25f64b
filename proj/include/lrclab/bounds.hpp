#ifndef LRCLAB_BOUNDS_HPP
#define LRCLAB_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lrclab/evalcode.hpp"
#include "lrclab/rational.hpp"

namespace lrclab {

/// Relative parameters of a code; all ratios derive from the integer tuple.
struct RatePoint {
    std::string label;
    uint64_t n = 0, k = 0, d = 0, r = 0;
    bool d_is_upper_only = false;  // d is only an upper bound (e.g. open distances)

    Rat delta() const { return {static_cast<long long>(d), static_cast<long long>(n)}; }
    Rat rate() const { return {static_cast<long long>(k), static_cast<long long>(n)}; }
    Rat r_over_n() const { return {static_cast<long long>(r), static_cast<long long>(n)}; }
};

/// Point from a built code: exact distance when known, otherwise the claimed
/// one (flagged through d_is_upper_only when the claim is an upper bound).
RatePoint rate_point(const EvalCode& code);

/// BTV family bound: R >= r/(r+1) (1 - delta - 3/(q+1)), clamped at 0.
double btv_threshold(uint32_t r, uint32_t q, double delta);

/// This construction's inequality: R > r/(r+1) (1 - delta - 2/(q+1)), clamped.
double paper_threshold(uint32_t r, uint32_t q, double delta);

/// Exact-rational form of the same inequality:
/// R + ((q-1)/q) delta > ((q-1)/q)((q-2)/q).
bool paper_inequality_exact(const RatePoint& p, uint32_t q);

struct GvResult {
    double R = 0;
    double argmin_s = 0;
    bool boundary = false;  // minimizer pinned at the smallest grid point
};

/// GV-type bound: R = r/(r+1) - min_{0<s<=1} [ log_q(b2(s))/(r+1) - delta log_q(s) ]
/// with b2(s) = ((1+(q-1)s)^{r+1} + (q-1)(1-s)^{r+1})/q.  Dense grid plus
/// golden-section refinement; stable to `tol`.
GvResult gv_threshold(uint32_t r, uint32_t q, double delta, double tol = 1e-9,
                      std::size_t grid = 10000);

struct ScatterRow {
    RatePoint point;
    bool btv_ok = false;    // lies strictly above the BTV threshold at its delta
    bool paper_ok = false;  // satisfies the exact inequality
    bool gv_ok = false;     // lies strictly above the GV curve at its delta
};

/// Per-point bound comparisons at fixed q, using each point's own r.
std::vector<ScatterRow> compare_points(const std::vector<RatePoint>& points, uint32_t q);

}  // namespace lrclab

#endif
