#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lrclab/io.hpp"
#include "lrclab/presets.hpp"

using namespace lrclab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitCapacity = 4;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file: " + out_path);
    os << text;
}

void check_enum_q(uint32_t q) {
    if (q != 2 && q != 4 && q != 8 && q != 16 && q != 32)
        throw UsageError("q must be one of 2, 4, 8, 16, 32");
}

TowerPtr tower_by_name(const std::string& name, uint32_t q) {
    if (name == "gs") {
        check_enum_q(q);
        return TowerSpec::garcia_stichtenoth(q);
    }
    if (name == "f4") return TowerSpec::f4_tower();
    if (name == "f8") return TowerSpec::f8_tower();
    throw UsageError("unknown tower: " + name + " (expected gs, f4 or f8)");
}

json distance_command(const std::string& preset, uint64_t budget, bool force_exact,
                      uint64_t trials, uint64_t seed) {
    EvalCode code = build_preset(preset);
    DistanceReport report;
    try {
        report = exhaustive_min_distance(code, budget);
    } catch (const CapacityError& e) {
        if (force_exact) throw;
        report.notes.push_back(std::string("exhaustive search refused: ") + e.what());
        auto db = degree_lower_bound(code);
        report.d_lower = db.value;
        report.lower_provenance = "degree-bound";
        if (db.clamped) report.notes.push_back("degree bound clamped at 0");
        try {
            std::vector<std::string> diag;
            FactoredCodeword witness;
            if (preset == "gs-thm36-q8") {
                try {
                    witness = construct_h(code, HVariant::Thm36, &diag).h;
                } catch (const StructuralError& err) {
                    report.notes.push_back(std::string("Thm36 h-construction failed: ") +
                                           err.what());
                    report.notes.push_back(
                        "falling back to the Thm34-shaped codeword, which lies in this box");
                    witness = construct_h(code, HVariant::Thm34, &diag).h;
                }
            } else {
                witness = preset_explicit_codeword(code);
            }
            auto w = weight_of_factored(code, witness);
            report.d_upper = w.weight;
            report.upper_provenance = "explicit-codeword";
            for (auto& n : diag)
                if (std::find(report.notes.begin(), report.notes.end(), n) == report.notes.end())
                    report.notes.push_back(n);
        } catch (const UsageError& err) {
            report.notes.push_back(std::string("no explicit witness: ") + err.what());
        }
        report.exact = report.d_lower && report.d_upper && *report.d_lower == *report.d_upper;
    }
    if (trials > 0) {
        uint32_t floor = sampled_weight_floor(code, trials, seed);
        report.notes.push_back("sampled floor over " + std::to_string(trials) +
                               " seeded trials: " + std::to_string(floor) +
                               " (upper-bound evidence only)");
    }
    json j = distance_report_json(report);
    j["preset"] = preset;
    return j;
}

json prop41_readings(int depth) {
    json out{{"schema", "prop41-readings v1"}, {"depth", depth}};
    const char* reading_name[2] = {"statement [2^j, 2^(j-2), 2]", "proof [2^j, 2^(j-1), 2^(j-1)]"};
    for (int e0 = 0; e0 <= 1; ++e0) {
        EvalCode code = build_f4_prop41(depth, e0);
        json r = code_params_json(code);
        r["reading"] = reading_name[e0];
        try {
            auto d = exhaustive_min_distance(code);
            r["d_measured"] = *d.d_lower;
            r["d_provenance"] = "exhaustive";
        } catch (const CapacityError&) {
            auto w = weight_of_factored(code, preset_explicit_codeword(code));
            r["d_upper"] = w.weight;
            r["d_provenance"] = "explicit-codeword";
        }
        out[e0 == 0 ? "box_e0_0" : "box_e0_1"] = r;
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"lrclab: locally recoverable evaluation codes on recursive towers"};
    app.require_subcommand(1);

    std::string out_path, format = "json", preset, tower_name = "gs", prop_name_arg, kind = "btv";
    uint32_t q = 8;
    int depth = 2;
    uint64_t seed = 1, budget = kDefaultDistanceBudget, trials = 0;
    int erase_index = -1;
    std::optional<std::string> modulus_text;
    int field_m = 0;
    bool exact = false, both_readings = false, elements = false;
    double delta = -1.0, tol = 1e-9;
    uint32_t sweep_max = 0;
    std::string dot_path, matrix_path;

    auto* c_field = app.add_subcommand("field", "describe a binary field model");
    c_field->add_option("--m", field_m, "extension degree")->required();
    c_field->add_option("--modulus", modulus_text, "modulus bitmask (hex or decimal)");
    c_field->add_flag("--elements", elements, "list elements as hex and generator powers");
    c_field->add_option("--out", out_path);

    auto* c_places = app.add_subcommand("places", "enumerate completely-splitting places");
    c_places->add_option("--tower", tower_name, "gs, f4 or f8")->required();
    c_places->add_option("--q", q, "subfield size for the gs tower");
    c_places->add_option("--depth", depth)->required();
    c_places->add_option("--format", format, "json or csv");
    c_places->add_option("--out", out_path);
    c_places->add_option("--dot", dot_path, "also write the f8 splitting digraph as DOT");

    auto* c_build = app.add_subcommand("build", "build a preset code and report parameters");
    c_build->add_option("--preset", preset)->required();
    c_build->add_option("--format", format, "json or csv");
    c_build->add_option("--matrix", matrix_path, "write the generator matrix file here");
    c_build->add_option("--out", out_path);

    auto* c_params = app.add_subcommand("params", "report preset parameters");
    c_params->add_option("--preset", preset)->required();
    c_params->add_flag("--both-readings", both_readings,
                       "for f4-prop41-j*: measure both parameter readings");
    c_params->add_option("--out", out_path);

    auto* c_repair = app.add_subcommand("repair-demo",
                                        "encode a seeded message, erase, repair");
    c_repair->add_option("--preset", preset)->required();
    c_repair->add_option("--seed", seed);
    c_repair->add_option("--erase", erase_index, "coordinate to erase (default: seeded)");
    c_repair->add_option("--out", out_path);

    auto* c_dist = app.add_subcommand("distance", "distance report for a preset");
    c_dist->add_option("--preset", preset)->required();
    c_dist->add_option("--budget", budget, "codeword budget for exhaustive search");
    c_dist->add_flag("--exact", exact, "refuse instead of falling back to bounds");
    c_dist->add_option("--trials", trials, "additional sampled-floor trials");
    c_dist->add_option("--seed", seed);
    c_dist->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "run the proposition suite");
    c_verify->add_option("--q", q)->required();
    c_verify->add_option("--prop", prop_name_arg, "run a single proposition");
    c_verify->add_option("--out", out_path);

    auto* c_bounds = app.add_subcommand("bounds", "evaluate a rate-distance bound");
    c_bounds->add_option("--kind", kind, "btv, paper or gv")->required();
    uint32_t bound_r = 1, bq = 8;
    c_bounds->add_option("--r", bound_r, "locality")->required();
    c_bounds->add_option("--q", bq, "field parameter")->required();
    c_bounds->add_option("--delta", delta, "single evaluation point (otherwise a curve)");
    c_bounds->add_option("--tol", tol);
    c_bounds->add_option("--out", out_path);

    auto* c_scatter = app.add_subcommand("scatter", "table rows plus the cor38 sweep");
    c_scatter->add_option("--q", q)->required();
    c_scatter->add_option("--sweep-max", sweep_max, "largest sweep l (default q^2/2)");
    c_scatter->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (c_field->parsed()) {
        std::optional<uint32_t> modulus;
        if (modulus_text) modulus = static_cast<uint32_t>(std::stoul(*modulus_text, nullptr, 0));
        auto field = Field::make(field_m, modulus);
        json j = field_json(*field);
        if (elements) {
            json arr = json::array();
            for (uint32_t v : field->elements_in_order())
                arr.push_back(json{{"hex", elem_hex(v)}, {"gpow", elem_gpow(*field, v)}});
            j["elements"] = arr;
        }
        emit(j.dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (c_places->parsed()) {
        auto tower = tower_by_name(tower_name, q);
        auto places = enumerate_places(tower, depth);
        if (!dot_path.empty()) emit(split_graph_dot(split_graph(tower)), dot_path);
        if (format == "csv")
            emit(places_csv(places), out_path);
        else
            emit(places_json(places).dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (c_build->parsed() || c_params->parsed()) {
        if (both_readings) {
            if (preset.rfind("f4-prop41-j", 0) != 0)
                throw UsageError("--both-readings applies to the f4-prop41-j* presets");
            int d = std::stoi(preset.substr(11));
            emit(prop41_readings(d).dump(2) + "\n", out_path);
            return kExitOk;
        }
        EvalCode code = build_preset(preset);
        if (!matrix_path.empty()) {
            std::ofstream os(matrix_path, std::ios::binary);
            if (!os) throw UsageError("cannot open matrix file: " + matrix_path);
            write_genmatrix(os, code);
        }
        if (format == "csv" && c_build->parsed())
            emit(genmatrix_csv(code), out_path);
        else
            emit(code_params_json(code).dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (c_repair->parsed()) {
        EvalCode code = build_preset(preset);
        std::mt19937_64 rng(seed);
        std::vector<uint32_t> msg(code.rank_k);
        uint32_t mask = static_cast<uint32_t>(code.field().size() - 1);
        for (auto& s : msg) s = static_cast<uint32_t>(rng()) & mask;
        auto cw = encode(code, msg);
        uint32_t erased = erase_index >= 0 ? static_cast<uint32_t>(erase_index)
                                           : static_cast<uint32_t>(rng() % code.n());
        if (erased >= code.n()) throw UsageError("erase index out of range");
        uint32_t got = repair(code, {cw, erased});
        json fiber = json::array();
        for (uint32_t i : code.plan.fiber_of[erased])
            fiber.push_back(json{{"index", i}, {"symbol", elem_hex(cw[i])}});
        json j{{"schema", "repair-demo v1"},
               {"preset", preset},
               {"seed", seed},
               {"erased_index", erased},
               {"locality", locality(code)},
               {"fiber", fiber},
               {"repaired", elem_hex(got)},
               {"expected", elem_hex(cw[erased])},
               {"ok", got == cw[erased]}};
        emit(j.dump(2) + "\n", out_path);
        return got == cw[erased] ? kExitOk : kExitVerifyFailed;
    }

    if (c_dist->parsed()) {
        json j = distance_command(preset, budget, exact, trials, seed);
        for (const auto& n : j["notes"]) std::cerr << "note: " << n.get<std::string>() << "\n";
        emit(j.dump(2) + "\n", out_path);
        return kExitOk;
    }

    if (c_verify->parsed()) {
        check_enum_q(q);
        std::vector<PropositionResult> results;
        if (!prop_name_arg.empty()) {
            auto id = prop_from_name(prop_name_arg);
            if (!id) throw UsageError("unknown proposition: " + prop_name_arg);
            results.push_back(check(*id, q));
        } else {
            results = verify_all(q);
        }
        int failed = 0, passed = 0, skipped = 0;
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(proposition_json(r));
            if (r.status == PropStatus::Failed)
                ++failed;
            else if (r.status == PropStatus::Passed)
                ++passed;
            else
                ++skipped;
        }
        json j{{"schema", "verify v1"}, {"q", q},           {"results", arr},
               {"passed", passed},      {"failed", failed}, {"hypothesis_not_met", skipped}};
        emit(j.dump(2) + "\n", out_path);
        return failed == 0 ? kExitOk : kExitVerifyFailed;
    }

    if (c_bounds->parsed()) {
        const uint32_t r = bound_r;
        auto value = [&](double d) -> double {
            if (kind == "btv") return btv_threshold(r, bq, d);
            if (kind == "paper") return paper_threshold(r, bq, d);
            if (kind == "gv") return gv_threshold(r, bq, d, tol).R;
            throw UsageError("unknown bound kind: " + kind);
        };
        std::ostringstream os;
        os.precision(12);
        os << kSchemaPrefix << "bound-curve v1\n";
        os << "kind,r,q,delta,R\n";
        if (delta >= 0.0) {
            os << kind << ',' << r << ',' << bq << ',' << delta << ',' << value(delta) << "\n";
        } else {
            for (int i = (kind == "gv" ? 1 : 0); i <= (kind == "gv" ? 199 : 200); ++i) {
                double d = i / 200.0;
                os << kind << ',' << r << ',' << bq << ',' << d << ',' << value(d) << "\n";
            }
        }
        emit(os.str(), out_path);
        return kExitOk;
    }

    if (c_scatter->parsed()) {
        check_enum_q(q);
        if (q < 8) throw UsageError("scatter needs q >= 8");
        auto points = table1_points(q);
        uint32_t lmax = sweep_max ? sweep_max : q * q / 2;
        auto sweep = cor38_points(q, 1, lmax);
        points.insert(points.end(), sweep.begin(), sweep.end());
        auto rows = compare_points(points, q);
        for (const auto& e : table1_errata()) std::cerr << e << "\n";
        std::cerr << "note: f8-prop45's distance column is an upper bound (d <= 4 is open)\n";
        emit(scatter_csv(rows), out_path);
        return kExitOk;
    }

    throw UsageError("no command");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
