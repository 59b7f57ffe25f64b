#include "lrclab/evalcode.hpp"

#include <algorithm>
#include <map>

#include "lrclab/parallel.hpp"

namespace lrclab {

std::vector<std::vector<uint32_t>> monomials(const MonomialBox& box) {
    std::vector<std::vector<uint32_t>> out;
    out.reserve(box.nominal_dim());
    std::vector<uint32_t> cur(box.bounds.size(), 0);
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[i] == box.bounds[i]) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

uint32_t evaluate(const Field& field, const std::vector<uint32_t>& exponents, const Place& place) {
    if (exponents.size() > place.coords.size())
        throw UsageError("exponent tuple longer than the place tuple");
    uint32_t acc = 1;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;  // 0^0 = 1
        acc = field.mul(acc, field.pow(place.coords[i], exponents[i]));
    }
    return acc;
}

Matrix generator_matrix(const Field& field, const PlaceList& places, const MonomialBox& box) {
    if (box.bounds.size() > static_cast<size_t>(places.depth) + 1)
        throw UsageError("box has more variables than the place tuples");
    if (!field.has_tables())
        throw CapacityError("matrix work needs log-table fields (extension degree <= 16)");
    const size_t n = places.size();
    const size_t vars = box.bounds.size();
    auto exps = monomials(box);

    // Power tables per place and variable make each entry a few multiplies.
    std::vector<std::vector<uint32_t>> pows(n);
    for (size_t p = 0; p < n; ++p) {
        auto& t = pows[p];
        for (size_t v = 0; v < vars; ++v) {
            uint32_t x = places.places[p].coords[v];
            uint32_t acc = 1;
            for (uint32_t e = 0; e <= box.bounds[v]; ++e) {
                t.push_back(acc);
                acc = field.mul(acc, x);
            }
        }
    }
    std::vector<size_t> var_off(vars, 0);
    for (size_t v = 1; v < vars; ++v) var_off[v] = var_off[v - 1] + box.bounds[v - 1] + 1;

    Matrix m;
    m.rows = exps.size();
    m.cols = n;
    m.a.resize(m.rows * m.cols);
    parallel_chunks(m.rows, [&](size_t, size_t rb, size_t re) {
        for (size_t r = rb; r < re; ++r) {
            uint32_t* row = m.a.data() + r * n;
            const auto& e = exps[r];
            for (size_t p = 0; p < n; ++p) {
                uint32_t acc = 1;
                const auto& t = pows[p];
                for (size_t v = 0; v < vars; ++v) acc = field.mul(acc, t[var_off[v] + e[v]]);
                row[p] = acc;
            }
        }
    });
    return m;
}

namespace {

/// dst ^= factor * src over the field, table path.
inline void scale_xor_row(const Field& f, uint32_t* dst, const uint32_t* src, size_t n,
                          uint32_t factor) {
    const uint32_t* expt = f.exp_data();
    const uint32_t* logt = f.log_data();
    const uint32_t lf = logt[factor];
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = src[i];
        if (s) dst[i] ^= expt[logt[s] + lf];
    }
}

}  // namespace

RankResult rank_of(const Matrix& m) {
    const Field& f = *m.field;
    const size_t n = m.cols;

    RankResult res;
    res.prefix_rank.resize(m.rows);

    std::vector<std::vector<uint32_t>> pivots;  // normalized: leading entry 1
    std::vector<size_t> pivot_cols;

    const size_t block = 128;
    std::vector<std::vector<uint32_t>> work(std::min(block, m.rows));

    for (size_t b0 = 0; b0 < m.rows; b0 += block) {
        const size_t bn = std::min(block, m.rows - b0);
        const size_t known = pivots.size();
        // Reduce the whole block by the pivots found so far, rows independent.
        parallel_chunks(bn, [&](size_t, size_t rb, size_t re) {
            for (size_t r = rb; r < re; ++r) {
                auto& v = work[r];
                v.assign(m.row(b0 + r), m.row(b0 + r) + n);
                for (size_t p = 0; p < known; ++p) {
                    uint32_t c = v[pivot_cols[p]];
                    if (c) scale_xor_row(f, v.data(), pivots[p].data(), n, c);
                }
            }
        });
        // Then finish sequentially inside the block.
        for (size_t r = 0; r < bn; ++r) {
            auto& v = work[r];
            for (size_t p = known; p < pivots.size(); ++p) {
                uint32_t c = v[pivot_cols[p]];
                if (c) scale_xor_row(f, v.data(), pivots[p].data(), n, c);
            }
            size_t lead = n;
            for (size_t c = 0; c < n; ++c)
                if (v[c]) {
                    lead = c;
                    break;
                }
            if (lead < n) {
                uint32_t invl = f.inv(v[lead]);
                for (size_t c = lead; c < n; ++c)
                    if (v[c]) v[c] = f.mul(v[c], invl);
                pivots.push_back(std::move(v));
                pivot_cols.push_back(lead);
                res.pivot_rows.push_back(b0 + r);
                v = {};
            }
            res.prefix_rank[b0 + r] = static_cast<uint32_t>(pivots.size());
        }
    }
    res.rank = static_cast<uint32_t>(pivots.size());
    return res;
}

namespace {

RepairPlan build_repair_plan(const PlaceList& places, const MonomialBox& box) {
    RepairPlan plan;
    const size_t n = places.size();
    const int depth = places.depth;
    const uint32_t q_loc = places.tower->q_loc;

    int last_var = -1;  // last coordinate with a positive bound
    for (size_t v = 0; v < box.bounds.size(); ++v)
        if (box.bounds[v] > 0) last_var = static_cast<int>(v);

    auto fibers_from_groups = [&](const std::vector<std::vector<uint32_t>>& groups,
                                  size_t min_size) -> bool {
        for (const auto& g : groups)
            if (g.size() < min_size) return false;
        plan.fiber_of.assign(n, {});
        for (const auto& g : groups)
            for (uint32_t i : g) {
                auto& fib = plan.fiber_of[i];
                fib.reserve(g.size() - 1);
                for (uint32_t j : g)
                    if (j != i) fib.push_back(j);
            }
        return true;
    };

    if (last_var == depth) {
        if (box.bounds[last_var] <= q_loc - 2) {
            plan.mode = RepairMode::Interpolation;
            plan.locality = q_loc - 1;
            plan.defined = fibers_from_groups(prefix_fibers(places, depth), 2);
            return plan;
        }
        // Bound too large for fiber interpolation; repair still works when the
        // participating-value classes repeat (Remark-4.2(b)-style boxes).
        std::map<std::vector<uint32_t>, std::vector<uint32_t>> classes;
        for (const Place& p : places.places) {
            std::vector<uint32_t> key;
            for (size_t v = 0; v < box.bounds.size(); ++v)
                if (box.bounds[v] > 0) key.push_back(p.coords[v]);
            classes[key].push_back(p.index);
        }
        std::vector<std::vector<uint32_t>> groups;
        groups.reserve(classes.size());
        for (auto& [k, g] : classes) groups.push_back(std::move(g));
        plan.mode = RepairMode::ValueCopy;
        plan.locality = 1;
        plan.defined = fibers_from_groups(groups, 2);
        return plan;
    }

    plan.mode = RepairMode::PrefixCopy;
    plan.locality = 1;
    plan.defined = fibers_from_groups(prefix_fibers(places, last_var + 1), 2);
    return plan;
}

}  // namespace

EvalCode make_eval_code(PlaceList places, MonomialBox box, std::string label) {
    EvalCode code;
    code.label = std::move(label);
    code.box = box;
    const Field& field = *places.tower->field;
    code.gen = generator_matrix(field, places, box);
    code.gen.field = places.tower->field;
    auto rr = rank_of(code.gen);
    code.rank_k = rr.rank;
    code.basis_rows = std::move(rr.pivot_rows);
    code.prefix_rank = std::move(rr.prefix_rank);
    code.plan = build_repair_plan(places, box);

    // Designed-distance bound n - sum E_i deg(x_i), when degrees are declared.
    bool have_degrees = true;
    uint64_t pole_sum = 0;
    for (size_t v = 0; v < box.bounds.size(); ++v) {
        if (box.bounds[v] == 0) continue;
        auto d = places.tower->pole_degree(static_cast<int>(v), places.depth);
        if (!d) {
            have_degrees = false;
            break;
        }
        pole_sum += uint64_t{box.bounds[v]} * *d;
    }
    if (have_degrees) {
        uint64_t n = places.size();
        if (pole_sum >= n) {
            code.d_lower = 0;
            code.d_lower_clamped = pole_sum > n;
        } else {
            code.d_lower = n - pole_sum;
        }
        code.d_lower_provenance = "degree-bound";
    }
    code.places = std::move(places);
    return code;
}

std::vector<uint32_t> encode(const EvalCode& code, const std::vector<uint32_t>& message) {
    if (message.size() != code.rank_k)
        throw UsageError("message length " + std::to_string(message.size()) +
                         " does not match code dimension " + std::to_string(code.rank_k));
    const Field& f = code.field();
    std::vector<uint32_t> cw(code.n(), 0);
    for (size_t i = 0; i < message.size(); ++i) {
        if (message[i] == 0) continue;
        scale_xor_row(f, cw.data(), code.gen.row(code.basis_rows[i]), cw.size(), message[i]);
    }
    return cw;
}

uint32_t repair(const EvalCode& code, const ErasurePattern& pattern,
                const std::vector<bool>& unavailable) {
    if (pattern.missing >= code.n()) throw UsageError("erased position out of range");
    if (pattern.symbols.size() != code.n()) throw UsageError("pattern length mismatch");
    if (!code.plan.defined)
        throw RepairError("no repair plan: box bound exceeds the interpolation capacity "
                          "of the recovery fiber");

    const auto& fiber = code.plan.fiber_of[pattern.missing];
    auto available = [&](uint32_t i) {
        return i >= unavailable.size() || !unavailable[i];
    };

    if (code.plan.mode != RepairMode::Interpolation) {
        for (uint32_t i : fiber)
            if (available(i)) return pattern.symbols[i];
        throw RepairError("insufficient repair data: no available fiber member");
    }

    const Field& f = code.field();
    const int depth = code.places.depth;
    std::vector<uint32_t> xs, ys;
    xs.reserve(fiber.size());
    for (uint32_t i : fiber) {
        if (!available(i))
            throw RepairError("insufficient repair data: fiber member " + std::to_string(i) +
                              " unavailable");
        xs.push_back(code.places.places[i].coords[depth]);
        ys.push_back(pattern.symbols[i]);
    }
    uint32_t deg_cap = code.box.bounds.back();
    if (xs.size() < deg_cap + 1)
        throw RepairError("insufficient repair data: fiber smaller than interpolation degree");
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                throw StructuralError("duplicate x_j value inside a recovery fiber");

    // Lagrange evaluation at the erased place's x_j.
    uint32_t x0 = code.places.places[pattern.missing].coords[depth];
    uint32_t acc = 0;
    for (size_t k = 0; k < xs.size(); ++k) {
        if (ys[k] == 0) continue;
        uint32_t num = 1, den = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            num = f.mul(num, x0 ^ xs[j]);
            den = f.mul(den, xs[k] ^ xs[j]);
        }
        acc ^= f.mul(ys[k], f.div(num, den));
    }
    return acc;
}

uint32_t locality(const EvalCode& code) {
    if (!code.plan.defined)
        throw RepairError("locality undefined: box bound too large for interpolation on "
                          "the recovery fiber");
    return code.plan.locality;
}

}  // namespace lrclab
