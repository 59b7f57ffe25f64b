#include "lrclab/presets.hpp"

#include <optional>

namespace lrclab {

namespace {

std::optional<uint32_t> parse_suffix(const std::string& name, const std::string& prefix) {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.size() > 9) return std::nullopt;
    uint32_t v = 0;
    for (char c : tail) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

struct PresetDef {
    EvalCode::Claims claims;
    TowerPtr tower;
    int depth = 0;
    MonomialBox box;
};

uint64_t gs_n(uint32_t q) { return uint64_t{q} * q * (uint64_t{q} * q - q); }

PresetDef resolve(const std::string& name) {
    PresetDef def;
    auto& c = def.claims;
    if (name == "gs-thm34-q8" || name == "gs-thm36-q8") {
        const uint32_t q = 8;
        def.tower = TowerSpec::garcia_stichtenoth(q);
        def.depth = 2;
        c.n = gs_n(q);
        c.r = q - 1;
        if (name == "gs-thm34-q8") {
            def.box.bounds = {q * q / 2 - q, q - 1, q - 2};
            c.k = uint64_t{q * q / 2 - q + 1} * q * (q - 1);
            c.d = uint64_t{q} * q * (q * q / 2 - 2 * q + 3);
        } else {
            def.box.bounds = {q * q / 2, q - 1, q - 2};
            c.k = uint64_t{q * q / 2 + 1} * q * (q - 1);
            c.d = uint64_t{q} * q * (q * q / 2 - 3 * q + 3);
        }
        return def;
    }
    if (auto l = parse_suffix(name, "gs-cor38-q8-l")) {
        const uint32_t q = 8;
        if (*l < 1 || *l > q * q / 2)
            throw UsageError("cor38 preset needs l in [1, " + std::to_string(q * q / 2) + "]");
        def.tower = TowerSpec::garcia_stichtenoth(q);
        def.depth = 2;
        def.box.bounds = {*l, q - 1, q - 2};
        c.n = gs_n(q);
        c.k = uint64_t{*l + 1} * q * (q - 1);
        c.d = uint64_t{q} * q * (q * q - *l - 3 * q + 3);
        c.r = q - 1;
        return def;
    }
    if (auto j = parse_suffix(name, "f4-prop41-j")) {
        if (*j < 1 || *j > 16) throw UsageError("f4-prop41 preset needs j in [1, 16]");
        def.tower = TowerSpec::f4_tower();
        def.depth = static_cast<int>(*j);
        def.box.bounds.assign(*j + 1, 1);
        def.box.bounds.front() = 0;
        def.box.bounds.back() = 0;
        // statement reading [2^j, 2^(j-2), 2] mapped onto the 2^(j+1) places
        c.n = uint64_t{1} << (*j + 1);
        c.k = uint64_t{1} << (*j - 1);
        c.d = 2;
        c.r = 1;
        return def;
    }
    if (name == "f4-rem42a" || name == "f4-rem42b") {
        def.tower = TowerSpec::f4_tower();
        def.depth = 2;
        def.box.bounds = (name == "f4-rem42a") ? std::vector<uint32_t>{1, 1}
                                               : std::vector<uint32_t>{1, 0, 1};
        c.n = 8;
        c.k = 4;
        c.d = 2;
        c.r = 1;
        return def;
    }
    if (name == "f8-prop44" || name == "f8-prop45") {
        def.tower = TowerSpec::f8_tower();
        if (name == "f8-prop44") {
            def.depth = 2;
            def.box.bounds = {4, 1};
            c.n = 24;
            c.k = 10;
            c.d = 4;
        } else {
            def.depth = 3;
            def.box.bounds = {4, 1, 1};
            c.n = 48;
            c.k = 20;
            c.d = 4;
            c.d_is_upper_bound = true;  // the source leaves d <= 4 open
        }
        c.r = 1;
        return def;
    }
    throw UsageError("unknown preset: " + name);
}

}  // namespace

bool is_preset(const std::string& name) {
    try {
        resolve(name);
        return true;
    } catch (const UsageError&) {
        return false;
    }
}

std::vector<std::string> preset_names() {
    return {"gs-thm34-q8",     "gs-thm36-q8", "gs-cor38-q8-l{1..32}", "f4-prop41-j{1..16}",
            "f4-rem42a",       "f4-rem42b",   "f8-prop44",            "f8-prop45"};
}

EvalCode build_preset(const std::string& name) {
    PresetDef def = resolve(name);
    auto places = enumerate_places(def.tower, def.depth);
    EvalCode code = make_eval_code(std::move(places), def.box, name);
    code.claimed = def.claims;
    return code;
}

EvalCode::Claims preset_claims(const std::string& name) { return resolve(name).claims; }

EvalCode build_f4_prop41(int depth, int e0) {
    if (depth < 1 || depth > 16) throw UsageError("depth must be in [1, 16]");
    if (e0 != 0 && e0 != 1) throw UsageError("e0 selects a reading: 0 or 1");
    auto tower = TowerSpec::f4_tower();
    MonomialBox box;
    box.bounds.assign(depth + 1, 1);
    box.bounds.front() = static_cast<uint32_t>(e0);
    box.bounds.back() = 0;
    std::string label = "f4-prop41-j" + std::to_string(depth) + (e0 ? "-e0max1" : "");
    EvalCode code = make_eval_code(enumerate_places(tower, depth), box, label);
    code.claimed.n = uint64_t{1} << (depth + 1);
    if (e0 == 0) {  // statement reading: k = n/4, d = 2
        code.claimed.k = uint64_t{1} << (depth - 1);
        code.claimed.d = 2;
    } else {  // proof reading: k = n/2, d = n/2
        code.claimed.k = uint64_t{1} << depth;
        code.claimed.d = uint64_t{1} << depth;
    }
    code.claimed.r = 1;
    return code;
}

std::vector<RatePoint> table1_points(uint32_t q) {
    if (q < 8 || (q & (q - 1)) != 0)
        throw UsageError("table points need q = 2^l >= 8");
    std::vector<RatePoint> rows;
    auto add = [&rows](std::string label, uint64_t n, uint64_t k, uint64_t d, uint64_t r,
                       bool upper = false) {
        RatePoint p;
        p.label = std::move(label);
        p.n = n;
        p.k = k;
        p.d = d;
        p.r = r;
        p.d_is_upper_only = upper;
        rows.push_back(p);
    };
    const uint64_t q2 = uint64_t{q} * q;
    add("gs-thm34-q" + std::to_string(q), gs_n(q), (q2 / 2 - q + 1) * q * (q - 1),
        q2 * (q2 / 2 - 2 * q + 3), q - 1);
    add("gs-thm36-q" + std::to_string(q), gs_n(q), (q2 / 2 + 1) * q * (q - 1),
        q2 * (q2 / 2 - 3 * q + 3), q - 1);
    add("f4-prop41-j2", 8, 2, 2, 1);
    add("f4-rem42a", 8, 4, 2, 1);
    add("f4-rem42b", 8, 4, 2, 1);
    add("f8-prop44", 24, 10, 4, 1);
    add("f8-prop45", 48, 20, 4, 1, true);
    return rows;
}

FactoredCodeword preset_explicit_codeword(const EvalCode& code) {
    const std::string& name = code.label;
    const Field& f = code.field();
    if (name == "f8-prop44") {
        const auto& s0 = code.places.tower->split_base;
        return {{{1, {s0[0]}}, {0, {s0[1], s0[2], s0[3], s0[4]}}}};
    }
    if (name == "f8-prop45") {
        uint32_t b = f.generator(), b2 = f.mul(b, b);
        return {{{0, {b, b ^ 1u, static_cast<uint32_t>(b2 ^ b), static_cast<uint32_t>(b2 ^ 1u)}},
                 {1, {b2}},
                 {2, {b}}}};
    }
    if (name == "f4-rem42a") return {{{0, {f.generator()}}, {1, {f.generator()}}}};
    if (name == "f4-rem42b") return {{{0, {f.generator()}}, {2, {f.generator()}}}};
    if (name.rfind("f4-prop41-j", 0) == 0) {
        // one root per free middle variable kills all but one value class
        FactoredCodeword w;
        for (size_t v = 0; v < code.box.bounds.size(); ++v)
            if (code.box.bounds[v] > 0) w.factors.push_back({v, {f.generator()}});
        return w;
    }
    if (name == "gs-thm34-q8") return construct_h(code, HVariant::Thm34).h;
    if (name == "gs-thm36-q8") return construct_h(code, HVariant::Thm36).h;
    if (name.rfind("gs-cor38-", 0) == 0) return construct_h(code, HVariant::Cor38).h;
    throw UsageError("no explicit codeword is recorded for preset " + name);
}

std::vector<std::string> table1_errata() {
    return {
        "erratum: the table lists n = q^4 - q^2 for the depth-2 GS rows; n = q^2(q^2 - q) = "
        "q^4 - q^3 is used",
        "erratum: the depth-j repetition family is stated as [2^j, 2^(j-2), 2] while its "
        "proof text says [2^j, 2^(j-1), 2^(j-1)]; measured parameters differ from both",
    };
}

std::vector<RatePoint> cor38_points(uint32_t q, uint32_t l_min, uint32_t l_max) {
    if (q < 8 || (q & (q - 1)) != 0) throw UsageError("cor38 sweep needs q = 2^l >= 8");
    if (l_min < 1 || l_min > l_max || uint64_t{l_max} > (uint64_t{q} - 1) * (q - 2))
        throw UsageError("bad l range: need 1 <= l <= (q-1)(q-2)");
    const uint64_t q2 = uint64_t{q} * q;
    std::vector<RatePoint> out;
    for (uint32_t l = l_min; l <= l_max; ++l) {
        RatePoint p;
        p.label = "gs-cor38-q" + std::to_string(q) + "-l" + std::to_string(l);
        p.n = gs_n(q);
        p.k = uint64_t{l + 1} * (q2 - q);
        p.d = q2 * (q2 - l - 3 * q + 3);
        p.r = q - 1;
        out.push_back(p);
    }
    return out;
}

}  // namespace lrclab
