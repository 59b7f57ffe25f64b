#include "lrclab/tower.hpp"

#include <algorithm>
#include <map>

namespace lrclab {

namespace {

std::vector<uint32_t> sort_by_order(const Field& field, std::vector<uint32_t> v) {
    std::sort(v.begin(), v.end(),
              [&field](uint32_t a, uint32_t b) { return field.order_key(a) < field.order_key(b); });
    return v;
}

}  // namespace

std::shared_ptr<const TowerSpec> TowerSpec::custom(
    std::string name, FieldPtr field, uint32_t q_loc, RationalMap rhs,
    std::vector<uint32_t> base, std::function<std::optional<uint64_t>(int, int)> pole_degree_fn) {
    auto t = std::make_shared<TowerSpec>();
    t->name = std::move(name);
    t->field = std::move(field);
    t->q_loc = q_loc;
    t->rhs = std::move(rhs);
    t->split_base = sort_by_order(*t->field, std::move(base));
    t->pole_degree_fn = std::move(pole_degree_fn);
    return t;
}

std::shared_ptr<const TowerSpec> TowerSpec::garcia_stichtenoth(uint32_t q) {
    if (q < 8 || (q & (q - 1)) != 0)
        throw FieldError("Garcia-Stichtenoth tower needs q = 2^l >= 8");
    int mq = 0;
    while ((uint32_t{1} << mq) < q) ++mq;
    auto field = Field::make(2 * mq);
    SubfieldView sub(*field, q);

    RationalMap rho;
    rho.description = "x^q / (x^(q-1) + 1)";
    rho.eval = [q](const Field& f, uint32_t a) -> std::optional<uint32_t> {
        uint32_t den = f.pow(a, q - 1) ^ 1u;
        if (den == 0) return std::nullopt;
        return f.div(f.pow(a, q), den);
    };

    uint64_t q2 = uint64_t{q} * q;
    auto deg = [q2](int, int depth) -> std::optional<uint64_t> {
        // deg(x_i) in F_2 is q^2 for every i; deeper levels are not declared.
        if (depth == 2) return q2;
        if (depth == 1) return std::nullopt;
        return std::nullopt;
    };
    return custom("gs-q" + std::to_string(q), field, q, std::move(rho), sub.s0(), deg);
}

std::shared_ptr<const TowerSpec> TowerSpec::f4_tower() {
    auto field = Field::make(2);
    RationalMap rho;
    rho.description = "x^2 / (x + 1)";
    rho.eval = [](const Field& f, uint32_t a) -> std::optional<uint32_t> {
        uint32_t den = a ^ 1u;
        if (den == 0) return std::nullopt;
        return f.div(f.mul(a, a), den);
    };
    // Splitting places are P_alpha and P_{alpha+1} for alpha^2 + alpha + 1 = 0.
    uint32_t alpha = field->generator();
    std::vector<uint32_t> base = {alpha, alpha ^ 1u};
    auto deg = [](int, int depth) -> std::optional<uint64_t> {
        return uint64_t{1} << depth;  // [F_depth : F_4(x_i)] = 2^depth
    };
    return custom("f4", field, 2, std::move(rho), std::move(base), deg);
}

std::shared_ptr<const TowerSpec> TowerSpec::f8_tower() {
    auto field = Field::make(3);  // x^3 + x + 1, so g^3 = g + 1
    RationalMap rho;
    rho.description = "x + 1 + 1/x";
    rho.eval = [](const Field& f, uint32_t a) -> std::optional<uint32_t> {
        if (a == 0) return std::nullopt;
        return a ^ 1u ^ f.inv(a);
    };
    std::vector<uint32_t> base;
    for (uint32_t v = 2; v < 8; ++v) base.push_back(v);  // F_8 \ F_2
    auto deg = [](int, int depth) -> std::optional<uint64_t> {
        return uint64_t{1} << depth;
    };
    return custom("f8", field, 2, std::move(rho), std::move(base), deg);
}

std::vector<uint32_t> split_base(const TowerSpec& tower, int verify_depth) {
    const Field& f = *tower.field;
    for (uint32_t alpha : tower.split_base) {
        std::vector<uint32_t> level = {alpha};
        for (int d = 1; d <= verify_depth; ++d) {
            std::vector<uint32_t> next;
            for (uint32_t v : level) {
                auto rhs = tower.rhs.eval(f, v);
                if (!rhs)
                    throw StructuralError("split base element " + elem_hex(alpha) +
                                          " hits a pole of rho at depth " + std::to_string(d));
                auto roots = linearized_roots(f, tower.q_loc, *rhs);
                if (roots.size() != tower.q_loc)
                    throw StructuralError(
                        "split base element " + elem_hex(alpha) + " has " +
                        std::to_string(roots.size()) + " lifts at depth " + std::to_string(d) +
                        ", expected " + std::to_string(tower.q_loc));
                next.insert(next.end(), roots.begin(), roots.end());
            }
            level = std::move(next);
        }
    }
    return tower.split_base;
}

PlaceList enumerate_places(TowerPtr tower, int depth, uint64_t cap) {
    if (!tower) throw UsageError("null tower");
    if (depth < 1) throw UsageError("depth must be >= 1");
    uint64_t expected = tower->split_base.size();
    for (int d = 0; d < depth; ++d) expected *= tower->q_loc;
    if (expected > cap)
        throw CapacityError("place enumeration needs " + std::to_string(expected) +
                                " places, above the cap of " + std::to_string(cap),
                            expected);

    const Field& f = *tower->field;
    PlaceList out;
    out.tower = tower;
    out.depth = depth;
    out.places.reserve(expected);

    // Depth-first extension keeps tuples in lexicographic order because the
    // base and every root list are order_key-sorted.
    std::vector<uint32_t> coords;
    coords.reserve(depth + 1);
    auto extend = [&](auto&& self, uint32_t value, int level) -> void {
        coords.push_back(value);
        if (level == depth) {
            Place p;
            p.coords = coords;
            p.index = static_cast<uint32_t>(out.places.size());
            out.places.push_back(std::move(p));
        } else {
            auto rhs = tower->rhs.eval(f, value);
            if (!rhs)
                throw StructuralError("coordinate " + elem_hex(value) +
                                      " hits a pole of rho at depth " + std::to_string(level + 1));
            auto roots = linearized_roots(f, tower->q_loc, *rhs);
            if (roots.size() != tower->q_loc)
                throw StructuralError("coordinate " + elem_hex(value) + " has " +
                                      std::to_string(roots.size()) + " lifts at depth " +
                                      std::to_string(level + 1) + ", expected " +
                                      std::to_string(tower->q_loc));
            for (uint32_t r : roots) self(self, r, level + 1);
        }
        coords.pop_back();
    };
    for (uint32_t alpha : tower->split_base) extend(extend, alpha, 0);
    return out;
}

uint32_t color_of(const Field& field, uint32_t q, uint32_t beta) {
    uint32_t tr = trace_to(field, q, beta);
    if (tr == 0) throw DomainError("color undefined: Tr(beta) = 0");
    return field.div(norm_to(field, q, beta), tr);
}

std::vector<uint32_t> recovery_fiber(const PlaceList& list, uint32_t place_index) {
    if (place_index >= list.places.size())
        throw UsageError("place index out of range");
    const auto& center = list.places[place_index].coords;
    std::vector<uint32_t> out;
    for (const Place& p : list.places) {
        if (p.index == place_index) continue;
        if (std::equal(center.begin(), center.end() - 1, p.coords.begin())) out.push_back(p.index);
    }
    return out;
}

std::vector<std::vector<uint32_t>> prefix_fibers(const PlaceList& list, int prefix_len) {
    if (prefix_len < 0 || prefix_len > list.depth + 1)
        throw UsageError("prefix length out of range");
    std::map<std::vector<uint32_t>, size_t> seen;
    std::vector<std::vector<uint32_t>> groups;
    for (const Place& p : list.places) {
        std::vector<uint32_t> key(p.coords.begin(), p.coords.begin() + prefix_len);
        auto [it, inserted] = seen.emplace(std::move(key), groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(p.index);
    }
    return groups;
}

int SplitGraph::vertex_index(uint32_t value) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == value) return static_cast<int>(i);
    return -1;
}

size_t SplitGraph::self_loop_count() const {
    size_t n = 0;
    for (auto [a, b] : edges)
        if (a == b) ++n;
    return n;
}

std::vector<uint32_t> SplitGraph::self_loop_values() const {
    std::vector<uint32_t> out;
    for (auto [a, b] : edges)
        if (a == b) out.push_back(vertices[a]);
    return out;
}

SplitGraph split_graph(TowerPtr tower) {
    if (!tower || tower->q_loc != 2 || tower->field->size() != 8)
        throw UsageError("split graph is defined for the F_8 tower");
    SplitGraph g;
    g.tower = tower;
    g.vertices = tower->split_base;
    g.out.resize(g.vertices.size());
    g.in.resize(g.vertices.size());
    const Field& f = *tower->field;
    for (size_t a = 0; a < g.vertices.size(); ++a) {
        auto rhs = tower->rhs.eval(f, g.vertices[a]);
        if (!rhs) throw StructuralError("pole inside the split base");
        for (uint32_t root : linearized_roots(f, 2, *rhs)) {
            int b = g.vertex_index(root);
            if (b < 0)
                throw StructuralError("lift " + elem_hex(root) + " leaves S_0");
            g.edges.emplace_back(static_cast<int>(a), b);
            g.out[a].push_back(b);
            g.in[b].push_back(static_cast<int>(a));
        }
    }
    return g;
}

std::vector<uint64_t> paths_of_length(const SplitGraph& graph, int len, uint32_t target) {
    if (len < 0 || len > 8) throw UsageError("path length must be in [0, 8]");
    int t = graph.vertex_index(target);
    if (t < 0) throw UsageError("target is not a vertex");
    size_t n = graph.vertices.size();
    std::vector<uint64_t> cur(n, 0);  // cur[v] = #paths of the current length from v to target
    cur[t] = 1;
    for (int step = 0; step < len; ++step) {
        std::vector<uint64_t> next(n, 0);
        for (size_t v = 0; v < n; ++v)
            for (int w : graph.out[v]) next[v] += cur[w];
        cur = std::move(next);
    }
    return cur;
}

bool all_pairs_connected_within(const SplitGraph& graph, int max_len) {
    size_t n = graph.vertices.size();
    for (size_t s = 0; s < n; ++s) {
        std::vector<bool> reached(n, false);
        reached[s] = true;
        std::vector<size_t> frontier = {s};
        for (int step = 0; step < max_len; ++step) {
            std::vector<size_t> next;
            for (size_t v : frontier)
                for (int w : graph.out[v])
                    if (!reached[w]) {
                        reached[w] = true;
                        next.push_back(w);
                    }
            frontier = std::move(next);
        }
        for (size_t v = 0; v < n; ++v)
            if (!reached[v]) return false;
    }
    return true;
}

}  // namespace lrclab
