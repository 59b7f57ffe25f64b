#include "lrclab/bounds.hpp"

#include <cmath>

namespace lrclab {

RatePoint rate_point(const EvalCode& code) {
    RatePoint p;
    p.label = code.label;
    p.n = code.n();
    p.k = code.rank_k;
    p.r = locality(code);
    if (code.d_lower && code.d_upper && *code.d_lower == *code.d_upper) {
        p.d = *code.d_lower;
    } else if (code.claimed.d) {
        p.d = *code.claimed.d;
        p.d_is_upper_only = code.claimed.d_is_upper_bound;
    } else if (code.d_upper) {
        p.d = *code.d_upper;
        p.d_is_upper_only = true;
    } else {
        throw UsageError("rate point needs an exact, claimed, or upper-bounded distance");
    }
    return p;
}

double btv_threshold(uint32_t r, uint32_t q, double delta) {
    if (r < 1 || q < 2 || delta < 0.0 || delta > 1.0)
        throw UsageError("btv_threshold needs r >= 1, q >= 2, 0 <= delta <= 1");
    double v = (double(r) / (r + 1)) * (1.0 - delta - 3.0 / (q + 1));
    return v < 0.0 ? 0.0 : v;
}

double paper_threshold(uint32_t r, uint32_t q, double delta) {
    if (r < 1 || q < 2 || delta < 0.0 || delta > 1.0)
        throw UsageError("paper_threshold needs r >= 1, q >= 2, 0 <= delta <= 1");
    double v = (double(r) / (r + 1)) * (1.0 - delta - 2.0 / (q + 1));
    return v < 0.0 ? 0.0 : v;
}

bool paper_inequality_exact(const RatePoint& p, uint32_t q) {
    Rat lhs = p.rate() + Rat(q - 1, q) * p.delta();
    Rat rhs = Rat(q - 1, q) * Rat(q - 2, q);
    return lhs > rhs;
}

namespace {

double gv_minimand(uint32_t r, uint32_t q, double delta, double s) {
    double b2 = (std::pow(1.0 + (q - 1.0) * s, r + 1.0) +
                 (q - 1.0) * std::pow(1.0 - s, r + 1.0)) /
                q;
    double lq = std::log(double(q));
    return std::log(b2) / ((r + 1.0) * lq) - delta * std::log(s) / lq;
}

}  // namespace

GvResult gv_threshold(uint32_t r, uint32_t q, double delta, double tol, std::size_t grid) {
    if (!(delta > 0.0 && delta < 1.0)) throw UsageError("gv_threshold needs 0 < delta < 1");
    if (tol <= 0.0 || grid < 8) throw UsageError("gv_threshold needs tol > 0 and grid >= 8");

    std::size_t best = 1;
    double best_val = gv_minimand(r, q, delta, 1.0 / grid);
    for (std::size_t i = 2; i <= grid; ++i) {
        double v = gv_minimand(r, q, delta, double(i) / grid);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double lo = (best > 1 ? double(best - 1) : 0.5) / grid;
    double hi = double(best < grid ? best + 1 : grid) / grid;

    // golden-section refinement on [lo, hi]
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = gv_minimand(r, q, delta, x1), f2 = gv_minimand(r, q, delta, x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = gv_minimand(r, q, delta, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = gv_minimand(r, q, delta, x2);
        }
    }
    double s_star = (a + b) / 2;
    double minv = gv_minimand(r, q, delta, s_star);
    if (best_val < minv) {
        minv = best_val;
        s_star = double(best) / grid;
    }
    GvResult res;
    res.argmin_s = s_star;
    res.boundary = best == 1;
    double R = double(r) / (r + 1) - minv;
    res.R = R < 0.0 ? 0.0 : (R > 1.0 ? 1.0 : R);
    return res;
}

std::vector<ScatterRow> compare_points(const std::vector<RatePoint>& points, uint32_t q) {
    std::vector<ScatterRow> out;
    out.reserve(points.size());
    for (const RatePoint& p : points) {
        ScatterRow row;
        row.point = p;
        double delta = p.delta().to_double();
        double R = p.rate().to_double();
        row.btv_ok = R > btv_threshold(static_cast<uint32_t>(p.r), q, delta);
        row.paper_ok = paper_inequality_exact(p, q);
        if (delta > 0.0 && delta < 1.0)
            row.gv_ok = R > gv_threshold(static_cast<uint32_t>(p.r), q, delta).R;
        else
            row.gv_ok = false;
        out.push_back(row);
    }
    return out;
}

}  // namespace lrclab
