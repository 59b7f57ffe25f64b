#include "lrclab/io.hpp"

#include <ostream>
#include <sstream>

namespace lrclab {

namespace {

const char* status_str(PropStatus s) {
    switch (s) {
        case PropStatus::Passed: return "passed";
        case PropStatus::Failed: return "failed";
        case PropStatus::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "?";
}

}  // namespace

json field_json(const Field& field) {
    return json{{"schema", "field v1"},
                {"m", field.degree()},
                {"modulus_bits", field.modulus()},
                {"generator_bits", field.generator()}};
}

FieldPtr field_from_json(const json& j) {
    int m = j.at("m").get<int>();
    uint32_t modulus = j.at("modulus_bits").get<uint32_t>();
    auto field = Field::make(m, modulus);
    if (j.contains("generator_bits") &&
        j.at("generator_bits").get<uint32_t>() != field->generator())
        throw UsageError("field description pins a different generator");
    return field;
}

json places_json(const PlaceList& list) {
    json out{{"schema", "places v1"},
             {"tower", list.tower->name},
             {"depth", list.depth},
             {"count", list.size()}};
    json arr = json::array();
    for (const Place& p : list.places) {
        json coords = json::array();
        for (uint32_t c : p.coords) coords.push_back(elem_hex(c));
        arr.push_back(json{{"index", p.index}, {"coords", coords}});
    }
    out["places"] = arr;
    return out;
}

std::string places_csv(const PlaceList& list) {
    std::ostringstream os;
    os << kSchemaPrefix << "places v1\n";
    os << "index";
    for (int i = 0; i <= list.depth; ++i) os << ",x" << i;
    os << "\n";
    for (const Place& p : list.places) {
        os << p.index;
        for (uint32_t c : p.coords) os << "," << elem_hex(c);
        os << "\n";
    }
    return os.str();
}

std::string split_graph_dot(const SplitGraph& graph) {
    std::ostringstream os;
    os << "// lrclab-schema: splitgraph-dot v1\n";
    os << "digraph split {\n";
    const Field& f = *graph.tower->field;
    for (uint32_t v : graph.vertices)
        os << "  \"" << elem_gpow(f, v) << "\" [hex=\"" << elem_hex(v) << "\"];\n";
    for (auto [a, b] : graph.edges)
        os << "  \"" << elem_gpow(f, graph.vertices[a]) << "\" -> \""
           << elem_gpow(f, graph.vertices[b]) << "\";\n";
    os << "}\n";
    return os.str();
}

void write_genmatrix(std::ostream& os, const EvalCode& code) {
    os << kSchemaPrefix << "genmatrix v1\n";
    os << "n=" << code.n() << " k_nominal=" << code.gen.rows << " m=" << code.field().degree()
       << " modulus=" << elem_hex(code.field().modulus()) << "\n";
    for (size_t r = 0; r < code.gen.rows; ++r) {
        const uint32_t* row = code.gen.row(r);
        for (size_t c = 0; c < code.gen.cols; ++c) {
            if (c) os << ' ';
            os << std::hex << row[c] << std::dec;
        }
        os << "\n";
    }
}

std::string genmatrix_csv(const EvalCode& code) {
    std::ostringstream os;
    os << kSchemaPrefix << "genmatrix-csv v1\n";
    for (size_t r = 0; r < code.gen.rows; ++r) {
        const uint32_t* row = code.gen.row(r);
        for (size_t c = 0; c < code.gen.cols; ++c) {
            if (c) os << ',';
            os << elem_hex(row[c]);
        }
        os << "\n";
    }
    return os.str();
}

json distance_report_json(const DistanceReport& report) {
    json out{{"schema", "distance v1"}, {"exact", report.exact}};
    if (report.d_lower) {
        out["d_lower"] = *report.d_lower;
        out["d_lower_provenance"] = report.lower_provenance;
    }
    if (report.d_upper) {
        out["d_upper"] = *report.d_upper;
        out["d_upper_provenance"] = report.upper_provenance;
    }
    out["notes"] = report.notes;
    return out;
}

json proposition_json(const PropositionResult& result) {
    json out{{"proposition", prop_name(result.id)},
             {"q", result.q},
             {"status", status_str(result.status)},
             {"detail", result.detail}};
    if (!result.witness.empty()) out["witness"] = result.witness;
    return out;
}

json code_params_json(const EvalCode& code) {
    json out{{"schema", "code-params v1"},
             {"label", code.label},
             {"n", code.n()},
             {"k_nominal", code.gen.rows},
             {"rank", code.rank_k},
             {"depth", code.places.depth},
             {"box", code.box.bounds}};
    if (code.plan.defined) out["r"] = code.plan.locality;
    if (code.d_lower) {
        out["d_lower"] = *code.d_lower;
        out["d_lower_provenance"] = code.d_lower_provenance;
        if (code.d_lower_clamped) out["d_lower_clamped"] = true;
    }
    if (code.d_upper) {
        out["d_upper"] = *code.d_upper;
        out["d_upper_provenance"] = code.d_upper_provenance;
    }
    json claimed;
    if (code.claimed.n) claimed["n"] = *code.claimed.n;
    if (code.claimed.k) claimed["k"] = *code.claimed.k;
    if (code.claimed.d) {
        claimed["d"] = *code.claimed.d;
        if (code.claimed.d_is_upper_bound) claimed["d_is_upper_bound"] = true;
    }
    if (code.claimed.r) claimed["r"] = *code.claimed.r;
    if (!claimed.empty()) out["claimed"] = claimed;
    return out;
}

std::string scatter_csv(const std::vector<ScatterRow>& rows) {
    std::ostringstream os;
    os << kSchemaPrefix << "scatter v1\n";
    os << "label,n,k,d,r,delta_num,delta_den,R_num,R_den,btv_ok,paper_ok,gv_ok\n";
    for (const ScatterRow& row : rows) {
        const RatePoint& p = row.point;
        Rat delta = p.delta(), rate = p.rate();
        os << p.label << ',' << p.n << ',' << p.k << ',' << p.d << ',' << p.r << ','
           << delta.num << ',' << delta.den << ',' << rate.num << ',' << rate.den << ','
           << (row.btv_ok ? 1 : 0) << ',' << (row.paper_ok ? 1 : 0) << ',' << (row.gv_ok ? 1 : 0)
           << "\n";
    }
    return os.str();
}

}  // namespace lrclab
