#include "lrclab/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lrclab/tower.hpp"

namespace lrclab {

const char* prop_name(PropId id) {
    switch (id) {
        case PropId::TraceFibers: return "traceFibers";
        case PropId::NormFibers: return "normFibers";
        case PropId::JointFibers: return "jointFibers";
        case PropId::ColorPartition: return "colorPartition";
        case PropId::PairPartition: return "pairPartition";
        case PropId::SelfColor: return "selfColor";
        case PropId::GraphDegrees: return "graphDegrees";
        case PropId::GraphDiameter3: return "graphDiameter3";
        case PropId::PathZeroLemma: return "pathZeroLemma";
    }
    return "?";
}

std::optional<PropId> prop_from_name(const std::string& name) {
    for (PropId id : kAllProps)
        if (name == prop_name(id)) return id;
    return std::nullopt;
}

namespace {

bool power_of_two(uint32_t q) { return q >= 2 && (q & (q - 1)) == 0; }

int log2u(uint32_t q) {
    int e = 0;
    while ((uint32_t{1} << e) < q) ++e;
    return e;
}

struct Ctx {
    FieldPtr field;  // GF(q^2)
    uint32_t q;
    std::vector<uint32_t> sub;  // embedded GF(q), order_key order
    std::vector<uint32_t> s0;
};

Ctx make_ctx(uint32_t q) {
    Ctx c;
    c.q = q;
    c.field = Field::make(2 * log2u(q));
    SubfieldView view(*c.field, q);
    c.sub = view.elements();
    c.s0 = view.s0();
    return c;
}

/// Value of the Garcia-Stichtenoth right side x^q / (x^(q-1) + 1); the
/// propositions identify it with N(x)/Tr(x) on S_0.
std::optional<uint32_t> gs_rhs(const Field& f, uint32_t q, uint32_t a) {
    uint32_t den = f.pow(a, q - 1) ^ 1u;
    if (den == 0) return std::nullopt;
    return f.div(f.pow(a, q), den);
}

PropositionResult pass(PropId id, uint32_t q, std::string detail) {
    return {id, q, PropStatus::Passed, std::move(detail), {}};
}

PropositionResult fail(PropId id, uint32_t q, std::string detail,
                       std::vector<std::string> witness) {
    return {id, q, PropStatus::Failed, std::move(detail), std::move(witness)};
}

PropositionResult check_trace_fibers(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    std::vector<std::string> bad;
    for (uint32_t b : c.sub) {
        if (b == 0) continue;
        uint64_t count = 0;
        for (uint64_t g = 0; g < f.size(); ++g)
            if (trace_to(f, q, static_cast<uint32_t>(g)) == b) ++count;
        if (count != q)
            bad.push_back("Tr fiber of " + elem_hex(b) + " has " + std::to_string(count) +
                          " elements, expected q");
    }
    uint64_t zero_count = 0;
    for (uint64_t g = 0; g < f.size(); ++g)
        if (trace_to(f, q, static_cast<uint32_t>(g)) == 0) ++zero_count;
    if (zero_count != q)
        bad.push_back("Tr = 0 has " + std::to_string(zero_count) + " elements, expected q");
    if (!bad.empty()) return fail(PropId::TraceFibers, q, "fiber counts off", std::move(bad));
    return pass(PropId::TraceFibers, q,
                std::to_string(q - 1) + " nonzero fibers of size q, kernel of size q");
}

PropositionResult check_norm_fibers(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    std::vector<std::string> bad;
    for (uint32_t v : c.sub) {
        if (v == 0) continue;
        uint64_t count = 0;
        for (uint64_t g = 0; g < f.size(); ++g)
            if (norm_to(f, q, static_cast<uint32_t>(g)) == v) ++count;
        if (count != uint64_t{q} + 1)
            bad.push_back("N fiber of " + elem_hex(v) + " has " + std::to_string(count) +
                          " elements, expected q+1");
    }
    if (!bad.empty()) return fail(PropId::NormFibers, q, "fiber counts off", std::move(bad));
    return pass(PropId::NormFibers, q, std::to_string(q - 1) + " fibers of size q+1");
}

PropositionResult check_joint_fibers(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    std::vector<std::string> bad;
    std::map<std::pair<uint32_t, uint32_t>, uint64_t> counts;
    for (uint64_t g = 0; g < f.size(); ++g) {
        uint32_t v = static_cast<uint32_t>(g);
        uint32_t tr = trace_to(f, q, v), nm = norm_to(f, q, v);
        if (tr != 0 && nm != 0) ++counts[{tr, nm}];
    }
    for (uint32_t b : c.sub) {
        if (b == 0) continue;
        for (uint32_t cc : c.sub) {
            if (cc == 0) continue;
            uint64_t k = counts.count({b, cc}) ? counts[{b, cc}] : 0;
            if (k != 0 && k != 2)
                bad.push_back("(Tr,N) = (" + elem_hex(b) + "," + elem_hex(cc) + ") has " +
                              std::to_string(k) + " solutions");
        }
    }
    if (!bad.empty()) return fail(PropId::JointFibers, q, "joint counts off", std::move(bad));
    return pass(PropId::JointFibers, q, "every (b, c) pair has 0 or 2 solutions");
}

PropositionResult check_color_partition(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    std::vector<std::string> bad;
    std::map<uint32_t, std::vector<uint32_t>> classes;
    for (uint32_t v : c.s0) {
        uint32_t tr = trace_to(f, q, v);
        if (tr == 0) {
            bad.push_back("element " + elem_hex(v) + " of S_0 has Tr = 0");
            continue;
        }
        classes[f.div(norm_to(f, q, v), tr)].push_back(v);
    }
    if (classes.size() != q - 1)
        bad.push_back("S_0 falls into " + std::to_string(classes.size()) +
                      " color classes, expected q-1");
    for (auto& [b, members] : classes)
        if (members.size() != q)
            bad.push_back("color class " + elem_hex(b) + " has " +
                          std::to_string(members.size()) + " elements, expected q");
    // Lift claim: the solutions of t^q + t = rhs(alpha) are exactly the trace
    // fiber of color(alpha).
    for (uint32_t v : c.s0) {
        auto rhs = gs_rhs(f, q, v);
        uint32_t color = f.div(norm_to(f, q, v), trace_to(f, q, v));
        if (!rhs) {
            bad.push_back("rhs undefined on S_0 element " + elem_hex(v));
            continue;
        }
        if (*rhs != color) {
            bad.push_back("rhs(" + elem_hex(v) + ") = " + elem_hex(*rhs) +
                          " differs from color " + elem_hex(color));
            continue;
        }
        auto roots = linearized_roots(f, q, *rhs);
        if (roots.size() != q) {
            bad.push_back("element " + elem_hex(v) + " has " + std::to_string(roots.size()) +
                          " lifts");
            continue;
        }
        for (uint32_t r : roots)
            if (trace_to(f, q, r) != color)
                bad.push_back("lift " + elem_hex(r) + " of " + elem_hex(v) +
                              " has trace != color");
    }
    if (!bad.empty()) return fail(PropId::ColorPartition, q, "partition violated", std::move(bad));
    return pass(PropId::ColorPartition, q,
                std::to_string(q - 1) + " classes of size q; all lifts land in B_color");
}

PropositionResult check_pair_partition(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    std::vector<std::string> bad;
    auto color_of_v = [&](uint32_t v) { return f.div(norm_to(f, q, v), trace_to(f, q, v)); };
    for (uint32_t alpha : c.s0) {
        auto lifts = linearized_roots(f, q, color_of_v(alpha));
        std::map<uint32_t, std::vector<uint32_t>> by_color;
        for (uint32_t g : lifts) by_color[color_of_v(g)].push_back(g);
        if (by_color.size() != q / 2)
            bad.push_back("lifts of " + elem_hex(alpha) + " span " +
                          std::to_string(by_color.size()) + " colors, expected q/2");
        for (auto& [col, pair] : by_color) {
            if (pair.size() != 2) {
                bad.push_back("lifts of " + elem_hex(alpha) + " have " +
                              std::to_string(pair.size()) + " members of color " + elem_hex(col));
                continue;
            }
            if (f.pow(pair[0], q) != pair[1])
                bad.push_back("same-color lifts " + elem_hex(pair[0]) + "," + elem_hex(pair[1]) +
                              " of " + elem_hex(alpha) + " are not Frobenius conjugates");
        }
    }
    // Place-level cross-check against the actual tower when it exists.
    if (q >= 8) {
        auto tower = TowerSpec::garcia_stichtenoth(q);
        auto places = enumerate_places(tower, 1);
        std::map<uint32_t, std::map<uint32_t, uint64_t>> lift_colors;  // base -> color -> count
        for (const Place& p : places.places)
            ++lift_colors[p.coords[0]][color_of_v(p.coords[1])];
        for (auto& [base, hist] : lift_colors)
            for (auto& [col, cnt] : hist)
                if (cnt != 2)
                    bad.push_back("place over " + elem_hex(base) + " has " + std::to_string(cnt) +
                                  " lifts of color " + elem_hex(col));
    }
    if (!bad.empty()) return fail(PropId::PairPartition, q, "pair structure violated", std::move(bad));
    return pass(PropId::PairPartition, q, "lifts form q/2 Frobenius-conjugate color pairs");
}

PropositionResult check_self_color(uint32_t q) {
    Ctx c = make_ctx(q);
    const Field& f = *c.field;
    // Solutions of alpha^(2q) + alpha^2 = alpha^(q+1) inside S_0, i.e.
    // Tr(alpha)^2 = N(alpha), i.e. color(alpha) = Tr(alpha).
    uint64_t solutions = 0;
    std::map<uint32_t, uint64_t> per_class;  // color -> |S_i ∩ B_i|
    for (uint32_t v : c.s0) {
        uint32_t tr = trace_to(f, q, v);
        uint32_t color = f.div(norm_to(f, q, v), tr);
        if (f.pow(v, 2 * q) ^ f.pow(v, 2) ^ f.pow(v, q + 1)) continue;
        ++solutions;
        if (color == tr) ++per_class[color];
    }
    std::string measured = "equation solutions in S_0: " + std::to_string(solutions) +
                           ", self-colored classes: " + std::to_string(per_class.size());
    if (log2u(q) % 2 == 0)
        return {PropId::SelfColor, q, PropStatus::HypothesisNotMet,
                "hypothesis q = 2^(2l+1) not met; " + measured, {}};

    std::vector<std::string> bad;
    if (solutions != uint64_t{2} * q - 2)
        bad.push_back("expected 2q-2 = " + std::to_string(2 * q - 2) + " solutions, got " +
                      std::to_string(solutions));
    if (per_class.size() != q - 1)
        bad.push_back("only " + std::to_string(per_class.size()) +
                      " classes contain self-colored elements, expected q-1");
    for (auto& [col, cnt] : per_class)
        if (cnt != 2)
            bad.push_back("|S_i ∩ B_i| = " + std::to_string(cnt) + " for color " + elem_hex(col));
    if (!bad.empty()) return fail(PropId::SelfColor, q, measured, std::move(bad));
    return pass(PropId::SelfColor, q, measured);
}

PropositionResult check_graph_degrees(uint32_t q) {
    auto tower = TowerSpec::f8_tower();
    auto g = split_graph(tower);
    std::vector<std::string> bad;
    if (g.vertices.size() != 6 || g.edges.size() != 12)
        bad.push_back("graph has " + std::to_string(g.vertices.size()) + " vertices and " +
                      std::to_string(g.edges.size()) + " edges");
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.out[v].size() != 2)
            bad.push_back("vertex " + elem_hex(g.vertices[v]) + " has out-degree " +
                          std::to_string(g.out[v].size()));
        if (g.in[v].size() != 2)
            bad.push_back("vertex " + elem_hex(g.vertices[v]) + " has in-degree " +
                          std::to_string(g.in[v].size()));
    }
    const Field& f = *tower->field;
    uint32_t b = f.generator();
    std::set<uint32_t> expect_loops = {b, f.mul(b, b), static_cast<uint32_t>(f.mul(b, b) ^ b)};
    auto loops = g.self_loop_values();
    std::set<uint32_t> got_loops(loops.begin(), loops.end());
    if (got_loops != expect_loops || loops.size() != 3)
        bad.push_back("self-loops are not exactly {b, b^2, b^2+b}");
    if (!bad.empty()) return fail(PropId::GraphDegrees, q, "degree structure off", std::move(bad));
    return pass(PropId::GraphDegrees, q, "6 vertices, 12 edges, out/in degree 2, 3 self-loops");
}

PropositionResult check_graph_diameter(uint32_t q) {
    auto g = split_graph(TowerSpec::f8_tower());
    if (!all_pairs_connected_within(g, 3))
        return fail(PropId::GraphDiameter3, q, "some ordered pair needs a path longer than 3",
                    {"run all_pairs_connected_within(graph, 3)"});
    return pass(PropId::GraphDiameter3, q, "all ordered pairs connected within length 3");
}

PropositionResult check_path_zero_lemma(uint32_t q) {
    auto tower = TowerSpec::f8_tower();
    auto g = split_graph(tower);
    auto places = enumerate_places(tower, 3);
    std::vector<std::string> bad;
    for (int i = 0; i <= 3; ++i) {
        for (uint32_t beta : tower->split_base) {
            uint64_t mult = 0;
            for (const Place& p : places.places) mult += p.coords[i] == beta;
            auto starts = paths_of_length(g, i, beta);
            uint64_t paths = 0;
            for (uint64_t s : starts) paths += s;
            uint64_t predicted = paths << (3 - i);
            if (mult != predicted)
                bad.push_back("x_" + std::to_string(i) + " = " + elem_hex(beta) + " has " +
                              std::to_string(mult) + " zeros, path count predicts " +
                              std::to_string(predicted));
        }
    }
    if (!bad.empty()) return fail(PropId::PathZeroLemma, q, "mismatch", std::move(bad));
    return pass(PropId::PathZeroLemma, q,
                "zero multiplicities of x_i - beta match path counts for i <= 3");
}

}  // namespace

bool applicable(PropId id, uint32_t q) {
    if (!power_of_two(q)) return false;
    switch (id) {
        case PropId::TraceFibers:
        case PropId::NormFibers:
        case PropId::JointFibers:
        case PropId::ColorPartition:
            return q <= 64;
        case PropId::PairPartition:
            // cross-validated against tower enumeration; capped by place budget
            return q <= 16;
        case PropId::SelfColor:
            return q <= 32;
        case PropId::GraphDegrees:
        case PropId::GraphDiameter3:
        case PropId::PathZeroLemma:
            return q == 8;
    }
    return false;
}

PropositionResult check(PropId id, uint32_t q) {
    if (!applicable(id, q))
        throw CapacityError(std::string("proposition ") + prop_name(id) +
                            " is not checkable at q = " + std::to_string(q));
    switch (id) {
        case PropId::TraceFibers: return check_trace_fibers(q);
        case PropId::NormFibers: return check_norm_fibers(q);
        case PropId::JointFibers: return check_joint_fibers(q);
        case PropId::ColorPartition: return check_color_partition(q);
        case PropId::PairPartition: return check_pair_partition(q);
        case PropId::SelfColor: return check_self_color(q);
        case PropId::GraphDegrees: return check_graph_degrees(q);
        case PropId::GraphDiameter3: return check_graph_diameter(q);
        case PropId::PathZeroLemma: return check_path_zero_lemma(q);
    }
    throw Error("unknown proposition");
}

std::vector<PropositionResult> verify_all(uint32_t q) {
    std::vector<PropositionResult> out;
    for (PropId id : kAllProps)
        if (applicable(id, q)) out.push_back(check(id, q));
    return out;
}

}  // namespace lrclab
