#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "rankrange/builtin.hpp"
#include "rankrange/compressions.hpp"
#include "rankrange/error.hpp"
#include "rankrange/io.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/svg.hpp"
#include "rankrange/witness.hpp"

namespace rankrange::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

ComplexMatrix load_input(const RunConfig& cfg, bool default_to_example) {
    if (cfg.input && cfg.builtin) throw InputError("--input and --builtin are mutually exclusive");
    if (cfg.input) return load_matrix(*cfg.input);
    if (cfg.builtin) return builtin_matrix(*cfg.builtin);
    if (default_to_example) return paper_example();
    throw InputError("no matrix given; use --input PATH or --builtin NAME");
}

void write_output(const RunConfig& cfg, const std::string& name, const std::string& contents) {
    fs::create_directories(cfg.out);
    write_file_atomic(cfg.out / name, contents);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& name, const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    write_output(cfg, name, text);
    out << text;
}

std::vector<std::vector<std::size_t>> parse_coords(const std::string& text, std::size_t n) {
    std::vector<std::vector<std::size_t>> groups(1);
    std::string number;
    auto flush = [&] {
        if (number.empty()) throw InputError("malformed --coords '" + text + "'");
        const unsigned long v = std::stoul(number);
        if (v < 1 || v > n) throw InputError("coordinate " + number + " outside [1, n]");
        groups.back().push_back(static_cast<std::size_t>(v - 1));
        number.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            number += c;
        } else if (c == ',') {
            flush();
        } else if (c == ';') {
            flush();
            groups.emplace_back();
        } else if (c != ' ') {
            throw InputError("malformed --coords '" + text + "'");
        }
    }
    flush();
    return groups;
}

IsometryFamily family_for(const RunConfig& cfg, const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    if (cfg.k < 1 || cfg.k > n) throw ParameterError("k outside [1, n]");
    if (!cfg.coords) return sample_family(n, n - cfg.k + 1, cfg.count, cfg.seed);
    std::vector<ComplexMatrix> members;
    for (const auto& idx : parse_coords(*cfg.coords, n)) members.push_back(coordinate_isometry(n, idx));
    return IsometryFamily::from_members(std::move(members));
}

json region_json(const RangeResult& r, const RunConfig& cfg) {
    json doc;
    doc["k"] = cfg.k;
    doc["m"] = cfg.grid;
    doc["empty"] = r.region.empty();
    doc["kind"] = to_string(r.region.kind());
    doc["vertices"] = r.region.vertices().size();
    doc["r_k"] = r.radii ? json(r.radii->outer) : json(nullptr);
    doc["r_tilde_k"] = r.radii ? json(r.radii->inner) : json(nullptr);
    if (r.certificate) {
        doc["violated_angle"] = r.certificate->angle;
        doc["depth"] = r.certificate->depth;
    }
    return doc;
}

int cmd_range(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, false);
    const RangeResult r = compute_range(RangeRequest{a, cfg.k, cfg.grid});
    write_output(cfg, "range.csv", region_to_csv(r.region));
    write_output(cfg, "range.svg",
                 region_svg(r.region, "rank-" + std::to_string(cfg.k) + " numerical range"));
    emit(cfg, out, "range.json", region_json(r, cfg));
    return kOk;
}

int cmd_radii(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, false);
    const RadiiPair rr = k_rank_radii(RangeRequest{a, cfg.k, cfg.grid});
    emit(cfg, out, "radii.json", json{{"k", cfg.k}, {"m", cfg.grid}, {"r_k", rr.outer},
                                      {"r_tilde_k", rr.inner}});
    return kOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, false);
    const IsometryFamily family = family_for(cfg, a);
    const ConvergenceTrace trace =
        intersection_trace(a, cfg.k, family, TraceOptions{cfg.grid, cfg.early_stop});
    if (!trace.range.radii) {
        throw EmptinessError("rank-" + std::to_string(cfg.k) + " numerical range is empty",
                             trace.range.certificate->angle, trace.range.certificate->depth);
    }
    write_output(cfg, "trace.csv", trace_to_csv(trace));
    write_output(cfg, "trace.svg", trace_svg(trace));
    const auto& last = trace.records.back();
    out << json{{"k", cfg.k}, {"m", cfg.grid}, {"count", trace.records.size()},
                {"r_k", trace.range.radii->outer}, {"r_tilde_k", trace.range.radii->inner},
                {"q_last", finite_or_null(last.q)}, {"t_last", finite_or_null(last.t)}}
               .dump(2)
        << "\n";
    return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, false);
    const IsometryFamily family = family_for(cfg, a);
    const BoundsReport rep = proposition_bounds(a, cfg.k, family, cfg.grid);
    json doc{{"k", cfg.k},
             {"m", cfg.grid},
             {"count", family.members.size()},
             {"r_k", rep.r_k},
             {"min_compression_radius", rep.min_compression_radius},
             {"outer_bound_holds", rep.outer_bound_holds},
             {"origin_in_range", rep.origin_in_range},
             {"max_compression_distance", rep.max_compression_distance}};
    doc["r_tilde_k"] = rep.r_tilde_k ? json(*rep.r_tilde_k) : json(nullptr);
    doc["min_compression_inner_radius"] =
        rep.min_compression_inner_radius ? json(*rep.min_compression_inner_radius) : json(nullptr);
    doc["inner_bound_holds"] = rep.inner_bound_holds ? json(*rep.inner_bound_holds) : json(nullptr);
    emit(cfg, out, "bounds.json", doc);
    return kOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, false);
    cplx lambda;
    if (cfg.lambda) {
        lambda = parse_complex(*cfg.lambda);
    } else {
        const RangeResult r = compute_range(RangeRequest{a, cfg.k, cfg.grid});
        if (r.region.empty()) {
            throw EmptinessError("rank-" + std::to_string(cfg.k) +
                                     " numerical range is empty; no default lambda",
                                 r.certificate->angle, r.certificate->depth);
        }
        lambda = chebyshev_center(r.region);
    }
    const WitnessResult w =
        find_witness(a, cfg.k, lambda, WitnessOptions{cfg.tol, cfg.max_iters, cfg.restarts, cfg.seed});
    const std::string text = witness_to_json(w) + "\n";
    write_output(cfg, "witness.json", text);
    out << text;
    return kOk;
}

int cmd_power_check(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, true);
    const double r_a = k_rank_radii(RangeRequest{a, cfg.k, cfg.grid}).outer;
    const double r_a2 = k_rank_radii(RangeRequest{a * a, cfg.k, cfg.grid}).outer;
    // Equality cases (scalar, positive diagonal) must not flip on rounding.
    const bool violated = r_a2 > r_a * r_a + 1e-9 * std::max(1.0, r_a * r_a);
    emit(cfg, out, "power_check.json",
         json{{"k", cfg.k},
              {"m", cfg.grid},
              {"r2_A", r_a},
              {"r2_A_squared", r_a2},
              {"r2_A_pow2", r_a * r_a},
              {"r2_A_squared_gt_r2_A_pow2", violated}});
    return kOk;
}

int cmd_fig1(const RunConfig& cfg, std::ostream& out) {
    const ComplexMatrix a = load_input(cfg, true);
    json summary = json::object();
    const std::pair<const char*, ComplexMatrix> panels[] = {{"fig1_A.svg", a}, {"fig1_A2.svg", a * a}};
    for (const auto& [name, m] : panels) {
        const IsometryFamily family = family_for(cfg, m);
        std::vector<ConvexRegion> covers;
        covers.reserve(family.members.size());
        for (const auto& iso : family.members) {
            covers.push_back(compute_range(RangeRequest{compression(m, iso), 1, cfg.grid}).region);
        }
        const RangeResult range = compute_range(RangeRequest{m, cfg.k, cfg.grid});
        write_output(cfg, name, compression_cover_svg(covers, range.region, name));
        summary[name] = region_json(range, cfg);
    }
    out << summary.dump(2) << "\n";
    return kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "range") return cmd_range(cfg, out);
        if (cfg.command == "radii") return cmd_radii(cfg, out);
        if (cfg.command == "converge") return cmd_converge(cfg, out);
        if (cfg.command == "bounds") return cmd_bounds(cfg, out);
        if (cfg.command == "witness") return cmd_witness(cfg, out);
        if (cfg.command == "power-check") return cmd_power_check(cfg, out);
        if (cfg.command == "fig1") return cmd_fig1(cfg, out);
        err << "unknown command '" << cfg.command << "'\n";
        return kInputError;
    } catch (const EmptinessError& e) {
        json doc{{"error", e.what()}, {"empty", true}};
        if (e.violated_angle()) doc["violated_angle"] = *e.violated_angle();
        out << doc.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return kEmptyRange;
    } catch (const Error& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        err << "error: number out of range in arguments\n";
        return kInputError;
    } catch (const fs::filesystem_error& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace rankrange::cli
