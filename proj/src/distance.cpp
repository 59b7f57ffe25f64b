#include "lrclab/distance.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "lrclab/parallel.hpp"

namespace lrclab {

DegreeBound degree_lower_bound(const EvalCode& code) {
    const auto& tower = *code.places.tower;
    uint64_t pole_sum = 0;
    for (size_t v = 0; v < code.box.bounds.size(); ++v) {
        if (code.box.bounds[v] == 0) continue;
        auto d = tower.pole_degree(static_cast<int>(v), code.places.depth);
        if (!d)
            throw UsageError("no declared pole degree for x_" + std::to_string(v) +
                             " at depth " + std::to_string(code.places.depth));
        pole_sum += uint64_t{code.box.bounds[v]} * *d;
    }
    uint64_t n = code.n();
    if (pole_sum >= n) return {0, pole_sum > n};
    return {n - pole_sum, false};
}

namespace {

/// Per-variable root lists of a factored codeword, degree-checked against the box.
std::vector<std::vector<uint32_t>> roots_by_var(const EvalCode& code, const FactoredCodeword& f) {
    std::vector<std::vector<uint32_t>> by_var(code.box.bounds.size());
    for (const Factor& fac : f.factors) {
        if (fac.var >= code.box.bounds.size())
            throw UsageError("factor variable x_" + std::to_string(fac.var) +
                             " is outside the box");
        auto& r = by_var[fac.var];
        r.insert(r.end(), fac.roots.begin(), fac.roots.end());
    }
    for (size_t v = 0; v < by_var.size(); ++v) {
        if (by_var[v].size() > code.box.bounds[v])
            throw UsageError("factored codeword leaves V: x_" + std::to_string(v) + " collects " +
                             std::to_string(by_var[v].size()) + " factors, box bound is " +
                             std::to_string(code.box.bounds[v]));
    }
    return by_var;
}

}  // namespace

std::vector<uint32_t> expand_factored(const EvalCode& code, const FactoredCodeword& f) {
    const Field& field = code.field();
    auto by_var = roots_by_var(code, f);
    const size_t vars = code.box.bounds.size();

    // Univariate expansions prod (t + alpha), low degree first.
    std::vector<std::vector<uint32_t>> poly(vars);
    for (size_t v = 0; v < vars; ++v) {
        std::vector<uint32_t> c = {1};
        for (uint32_t alpha : by_var[v]) {
            std::vector<uint32_t> nc(c.size() + 1, 0);
            for (size_t j = 0; j < c.size(); ++j) {
                nc[j + 1] ^= c[j];
                nc[j] ^= field.mul(alpha, c[j]);
            }
            c = std::move(nc);
        }
        poly[v] = std::move(c);
    }

    std::vector<size_t> stride(vars, 1);
    for (size_t v = vars; v-- > 1;) stride[v - 1] = stride[v] * (code.box.bounds[v] + 1);

    std::vector<uint32_t> coeff(code.box.nominal_dim(), 0);
    std::vector<uint32_t> e(vars, 0);
    while (true) {
        uint32_t c = 1;
        for (size_t v = 0; v < vars && c; ++v)
            c = (e[v] < poly[v].size()) ? field.mul(c, poly[v][e[v]]) : 0;
        if (c) {
            size_t idx = 0;
            for (size_t v = 0; v < vars; ++v) idx += e[v] * stride[v];
            coeff[idx] = c;
        }
        int i = static_cast<int>(vars) - 1;
        while (i >= 0 && e[i] == code.box.bounds[i]) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    return coeff;
}

WeightReport weight_of_factored(const EvalCode& code, const FactoredCodeword& f) {
    const Field& field = code.field();
    auto by_var = roots_by_var(code, f);
    std::vector<std::set<uint32_t>> root_sets;
    root_sets.reserve(by_var.size());
    for (auto& r : by_var) root_sets.emplace_back(r.begin(), r.end());

    uint64_t zeros = 0;
    for (const Place& p : code.places.places) {
        bool vanish = false;
        for (size_t v = 0; v < root_sets.size() && !vanish; ++v)
            vanish = root_sets[v].count(p.coords[v]) > 0;
        if (vanish) ++zeros;
    }
    WeightReport rep{zeros, code.n() - zeros};

    // Independent route: expand the product and evaluate it through the
    // generator matrix.
    auto coeff = expand_factored(code, f);
    std::vector<uint32_t> cw(code.n(), 0);
    for (size_t r = 0; r < coeff.size(); ++r) {
        if (coeff[r] == 0) continue;
        const uint32_t* row = code.gen.row(r);
        for (size_t p = 0; p < cw.size(); ++p)
            if (row[p]) cw[p] ^= field.mul(coeff[r], row[p]);
    }
    uint64_t w = 0;
    for (uint32_t s : cw) w += s != 0;
    if (w != rep.weight)
        throw StructuralError("factored weight " + std::to_string(rep.weight) +
                              " disagrees with expand+encode weight " + std::to_string(w));
    return rep;
}

namespace {

struct GsTables {
    uint32_t q = 0;
    std::vector<uint32_t> s0;                          // order_key-sorted
    std::vector<uint32_t> trace;                       // by repr
    std::vector<uint32_t> color;                       // by repr, valid when trace != 0
    std::map<uint32_t, std::vector<uint32_t>> clas;    // color b -> class S_b
    std::map<uint32_t, std::vector<uint32_t>> fiber;   // trace b -> fiber B_b (inside S_0)
};

GsTables gs_tables(const Field& field, uint32_t q) {
    GsTables t;
    t.q = q;
    SubfieldView sub(field, q);
    t.s0 = sub.s0();
    t.trace.assign(field.size(), 0);
    t.color.assign(field.size(), 0);
    for (uint32_t v : t.s0) {
        uint32_t tr = trace_to(field, q, v);
        t.trace[v] = tr;
        uint32_t col = field.div(norm_to(field, q, v), tr);
        t.color[v] = col;
        t.clas[col].push_back(v);
        t.fiber[tr].push_back(v);
    }
    return t;
}

bool is_odd_power_of_two_exponent(uint32_t q) {
    int e = 0;
    while ((uint32_t{1} << e) < q) ++e;
    return (uint32_t{1} << e) == q && (e % 2) == 1;
}

}  // namespace

HConstruction construct_h(const EvalCode& code, HVariant variant,
                          std::vector<std::string>* diagnostics) {
    const Field& field = code.field();
    const uint32_t q = code.q_loc();
    if (q < 8 || field.size() != uint64_t{q} * q || code.places.depth != 2)
        throw UsageError("construct_h applies to depth-2 Garcia-Stichtenoth codes with q >= 8");
    const std::vector<uint32_t>& bounds = code.box.bounds;
    if (bounds.size() != 3 || bounds[1] != q - 1 || bounds[2] != q - 2)
        throw UsageError("box does not match the h-construction shape (E_1 = q-1, E_2 = q-2)");
    uint32_t l = bounds[0];
    switch (variant) {
        case HVariant::Thm34:
            if (bounds[0] < q * q / 2 - q) throw UsageError("Thm34 box needs E_0 >= q^2/2 - q");
            l = q * q / 2 - q;
            break;
        case HVariant::Thm36:
            if (bounds[0] < q * q / 2) throw UsageError("Thm36 box needs E_0 >= q^2/2");
            l = q * q / 2;
            if (!is_odd_power_of_two_exponent(q))
                throw UsageError("Thm36 needs q = 2^(2l+1)");
            break;
        case HVariant::Cor38:
            if (l < 1 || l > q * q / 2) throw UsageError("Cor38 needs 1 <= E_0 <= q^2/2");
            break;
    }

    HConstruction out;
    auto note = [&](const std::string& s) {
        out.notes.push_back(s);
        if (diagnostics) diagnostics->push_back(s);
    };
    note("erratum: x_1 collects q-1 = " + std::to_string(q - 1) +
         " factor values (the box bound and the stated degree), not the proof text's 'q "
         "elements'");
    if (variant == HVariant::Thm36)
        note("erratum: the zero-count display 'q^2/2 + (q-1)q^2 + (q-2)q^2' is read as "
             "(q^2/2)q^2 + (q-1)q^2 + (q-2)q^2");

    GsTables t = gs_tables(field, q);

    // S_1: the color class of b = 1.
    const std::vector<uint32_t>& s1 = t.clas.at(1);
    std::set<uint32_t> s1_set(s1.begin(), s1.end());
    std::set<uint32_t> t1;  // traces hit by S_1
    for (uint32_t v : s1) t1.insert(t.trace[v]);

    // H-bar_0: base values none of whose lifts has color 1.  Lifts of alpha
    // are the full trace fiber B_{color(alpha)}, so the condition is that
    // color(alpha) is a trace missed by S_1.
    std::vector<uint32_t> hbar0;
    for (uint32_t v : t.s0)
        if (!t1.count(t.color[v])) hbar0.push_back(v);
    if (hbar0.size() != uint64_t{q} * q / 2 - q)
        throw StructuralError("claim |H-bar_0| = q^2/2 - q failed: got " +
                              std::to_string(hbar0.size()));

    switch (variant) {
        case HVariant::Thm34:
            out.h0 = hbar0;
            break;
        case HVariant::Thm36: {
            out.h0 = hbar0;
            out.h0.insert(out.h0.end(), s1.begin(), s1.end());
            std::sort(out.h0.begin(), out.h0.end(), [&](uint32_t a, uint32_t b) {
                return field.order_key(a) < field.order_key(b);
            });
            if (out.h0.size() != uint64_t{q} * q / 2)
                throw StructuralError("claim |H_0| = q^2/2 failed: got " +
                                      std::to_string(out.h0.size()));
            break;
        }
        case HVariant::Cor38: {
            std::vector<uint32_t> pool = hbar0;
            pool.insert(pool.end(), s1.begin(), s1.end());
            if (l > pool.size())
                throw StructuralError("H_0 pool exhausted: need " + std::to_string(l) +
                                      " values, pool has " + std::to_string(pool.size()));
            out.h0.assign(pool.begin(), pool.begin() + l);
            break;
        }
    }

    std::set<uint32_t> h0_set(out.h0.begin(), out.h0.end());
    std::set<uint32_t> h0_colors;
    for (uint32_t v : out.h0) h0_colors.insert(t.color[v]);

    // An x_1 value gamma contributes q^2 fresh zeros iff no place with
    // x_1 = gamma sits above H_0, i.e. the class S_{Tr(gamma)} misses H_0.
    auto x1_clean = [&](uint32_t gamma) {
        for (uint32_t alpha : t.clas.at(t.trace[gamma]))
            if (h0_set.count(alpha)) return false;
        return true;
    };

    std::vector<uint32_t> h1_candidates;
    for (uint32_t gamma : t.s0) {
        if (s1_set.count(gamma)) continue;
        if (!x1_clean(gamma)) continue;
        // gamma must also be reachable as x_1 at all: true for any gamma with
        // Tr != 0, which S_0 membership already gives.
        h1_candidates.push_back(gamma);
    }
    uint64_t proof_avail = (variant == HVariant::Thm36) ? (uint64_t{q} * q / 2 - 2 * q)
                                                        : (uint64_t{q} * q / 2 - q);
    if (variant != HVariant::Cor38) {
        if (!(proof_avail > q))
            throw StructuralError("claim " + std::to_string(proof_avail) + " > q failed");
        if (h1_candidates.size() < proof_avail)
            throw StructuralError("claim |available x_1 values| >= " +
                                  std::to_string(proof_avail) + " failed: got " +
                                  std::to_string(h1_candidates.size()));
    }
    if (h1_candidates.size() < q - 1)
        throw StructuralError("H_1 selection: only " + std::to_string(h1_candidates.size()) +
                              " admissible x_1 values, need q-1 = " + std::to_string(q - 1));
    out.h1.assign(h1_candidates.begin(), h1_candidates.begin() + (q - 1));
    std::set<uint32_t> h1_set(out.h1.begin(), out.h1.end());

    // An x_2 value delta contributes q^2 fresh zeros iff every x_1 value it
    // can sit above (the class S_{Tr(delta)}) avoids H_1 and is itself clean
    // of H_0 upstream.
    auto x2_clean = [&](uint32_t delta) {
        for (uint32_t gamma : t.clas.at(t.trace[delta])) {
            if (h1_set.count(gamma)) return false;
            if (!x1_clean(gamma)) return false;
        }
        return true;
    };

    // Residual trace-fiber candidates: the fiber B_1 over S_1's color.
    std::vector<uint32_t> h2_candidates;
    for (uint32_t delta : t.fiber.at(1))
        if (x2_clean(delta)) h2_candidates.push_back(delta);
    if (h2_candidates.size() < q - 2) {
        // Diagnose: does any trace fiber carry q-2 admissible values?
        std::string detail;
        for (auto& [b, fib] : t.fiber) {
            size_t ok = 0;
            for (uint32_t delta : fib) ok += x2_clean(delta);
            if (ok >= q - 2) {
                detail = " (fiber B_" + elem_gpow(field, b) + " would admit " +
                         std::to_string(ok) + ")";
                break;
            }
        }
        if (detail.empty())
            detail = " (no trace fiber admits q-2 disjoint values: every x_2 fiber meets the "
                     "zero set of h_0 or h_1 through the " +
                     std::to_string(h0_colors.size()) + " colors H_0 touches)";
        throw StructuralError(
            "H_2 selection: claim 'q-2 admissible x_2 values in the residual trace fiber' "
            "failed: got " +
            std::to_string(h2_candidates.size()) + detail);
    }
    out.h2.assign(h2_candidates.begin(), h2_candidates.begin() + (q - 2));
    std::set<uint32_t> h2_set(out.h2.begin(), out.h2.end());

    // Exact zero count and pairwise-disjointness over the enumerated places.
    uint64_t z0 = 0, z1 = 0, z2 = 0, z01 = 0, z02 = 0, z12 = 0, total = 0;
    for (const Place& p : code.places.places) {
        bool in0 = h0_set.count(p.coords[0]) > 0;
        bool in1 = h1_set.count(p.coords[1]) > 0;
        bool in2 = h2_set.count(p.coords[2]) > 0;
        z0 += in0;
        z1 += in1;
        z2 += in2;
        z01 += in0 && in1;
        z02 += in0 && in2;
        z12 += in1 && in2;
        total += in0 || in1 || in2;
    }
    if (z01 || z02 || z12)
        throw StructuralError("claim 'zeros of h_0, h_1, h_2 are distinct' failed: overlaps " +
                              std::to_string(z01) + "/" + std::to_string(z02) + "/" +
                              std::to_string(z12));
    uint64_t target = uint64_t{q} * q * (out.h0.size() + out.h1.size() + out.h2.size());
    if (total != target)
        throw StructuralError("claim 'h has q^2(|H_0|+|H_1|+|H_2|) zeros' failed: got " +
                              std::to_string(total) + ", expected " + std::to_string(target));

    out.h.factors = {{0, out.h0}, {1, out.h1}, {2, out.h2}};
    auto rep = weight_of_factored(code, out.h);
    out.zeros = rep.zeros;
    out.weight = rep.weight;
    note("h built with |H_0|=" + std::to_string(out.h0.size()) + " |H_1|=" +
         std::to_string(out.h1.size()) + " |H_2|=" + std::to_string(out.h2.size()) +
         ", zeros=" + std::to_string(out.zeros) + ", weight=" + std::to_string(out.weight));
    return out;
}

DistanceReport exhaustive_min_distance(const EvalCode& code, uint64_t budget) {
    const uint32_t k = code.rank_k;
    const uint64_t q = code.field().size();

    const uint64_t qbits = code.field().degree();
    const bool saturated = k * qbits >= 64;
    const uint64_t states = saturated ? UINT64_MAX : uint64_t{1} << (k * qbits);  // q^k
    if (saturated || states > budget)
        throw CapacityError("exhaustive search needs a budget of q^k = " +
                                (saturated ? std::string("2^") + std::to_string(k * qbits)
                                           : std::to_string(states)) +
                                " codewords, budget is " + std::to_string(budget),
                            states);

    const Field& f = code.field();
    const size_t n = code.n();
    std::vector<const uint32_t*> rows(k);
    for (uint32_t i = 0; i < k; ++i) rows[i] = code.gen.row(code.basis_rows[i]);

    // Weight is invariant under scalar multiples, so visit one representative
    // per class: messages whose first nonzero symbol is 1.  Tasks fix the
    // pivot position and the following symbol; a Gray-style odometer walks the
    // rest, updating the codeword one row at a time.
    struct Task {
        uint32_t pivot;
        uint32_t next_val;  // value of symbol pivot+1; ignored when pivot == k-1
        bool has_next;
    };
    std::vector<Task> tasks;
    for (uint32_t p = 0; p + 1 < k; ++p)
        for (uint32_t v = 0; v < q; ++v) tasks.push_back({p, v, true});
    tasks.push_back({k - 1, 0, false});

    std::atomic<size_t> next_task{0};
    std::atomic<uint64_t> global_min{UINT64_MAX};
    std::atomic<uint64_t> visited{0};

    auto worker = [&]() {
        std::vector<uint32_t> cw(n);
        uint64_t local_min = UINT64_MAX;
        uint64_t local_visited = 0;
        const uint32_t* expt = f.exp_data();
        const uint32_t* logt = f.log_data();
        while (true) {
            size_t ti = next_task.fetch_add(1);
            if (ti >= tasks.size()) break;
            const Task& task = tasks[ti];
            const uint32_t p = task.pivot;
            const size_t free_digits = task.has_next ? (k - p - 2) : 0;

            std::copy(rows[p], rows[p] + n, cw.begin());
            if (task.has_next && task.next_val) {
                const uint32_t lf = logt[task.next_val];
                const uint32_t* src = rows[p + 1];
                for (size_t c = 0; c < n; ++c)
                    if (src[c]) cw[c] ^= expt[logt[src[c]] + lf];
            }

            std::vector<uint32_t> digits(free_digits, 0);
            while (true) {
                uint64_t w = 0;
                for (size_t c = 0; c < n; ++c) w += cw[c] != 0;
                if (w < local_min) local_min = w;
                ++local_visited;

                size_t i = free_digits;
                while (i > 0) {
                    --i;
                    uint32_t old = digits[i];
                    uint32_t nv = (old + 1 < q) ? old + 1 : 0;
                    digits[i] = nv;
                    uint32_t delta = old ^ nv;
                    const uint32_t* src = rows[p + 2 + i];
                    const uint32_t ld = logt[delta];
                    for (size_t c = 0; c < n; ++c)
                        if (src[c]) cw[c] ^= expt[logt[src[c]] + ld];
                    if (nv != 0) break;  // no carry
                }
                if (i == 0 && (free_digits == 0 || digits[0] == 0)) break;
            }
        }
        uint64_t seen = global_min.load();
        while (local_min < seen && !global_min.compare_exchange_weak(seen, local_min)) {
        }
        visited += local_visited;
    };

    unsigned workers = thread_budget();
    if (workers > tasks.size()) workers = static_cast<unsigned>(tasks.size());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i + 1 < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    uint64_t expected_classes = (states - 1) / (q - 1);
    if (visited.load() != expected_classes)
        throw StructuralError("enumeration visited " + std::to_string(visited.load()) +
                              " classes, expected " + std::to_string(expected_classes));

    DistanceReport rep;
    rep.d_lower = global_min.load();
    rep.d_upper = global_min.load();
    rep.lower_provenance = "exhaustive";
    rep.upper_provenance = "exhaustive";
    rep.exact = true;
    rep.notes.push_back("scanned " + std::to_string(expected_classes) +
                        " scalar classes of nonzero codewords");
    return rep;
}

uint32_t sampled_weight_floor(const EvalCode& code, uint64_t trials, uint64_t seed) {
    if (trials == 0) return kNoSampledFloor;
    const Field& f = code.field();
    const size_t n = code.n();
    const uint32_t k = code.rank_k;
    const uint32_t mask = static_cast<uint32_t>(f.size() - 1);
    const uint32_t* expt = f.exp_data();
    const uint32_t* logt = f.log_data();

    std::mt19937_64 rng(seed);
    std::vector<uint32_t> msg(k), cw(n);
    uint32_t best = kNoSampledFloor;
    for (uint64_t t = 0; t < trials; ++t) {
        bool nonzero = false;
        do {
            for (uint32_t i = 0; i < k; ++i) {
                msg[i] = static_cast<uint32_t>(rng()) & mask;
                nonzero |= msg[i] != 0;
            }
        } while (!nonzero);
        std::fill(cw.begin(), cw.end(), 0);
        for (uint32_t i = 0; i < k; ++i) {
            if (!msg[i]) continue;
            const uint32_t* src = code.gen.row(code.basis_rows[i]);
            const uint32_t lf = logt[msg[i]];
            for (size_t c = 0; c < n; ++c)
                if (src[c]) cw[c] ^= expt[logt[src[c]] + lf];
        }
        uint32_t w = 0;
        for (size_t c = 0; c < n; ++c) w += cw[c] != 0;
        if (w < best) best = w;
    }
    return best;
}

}  // namespace lrclab
