// dhl: exact discrete Helly analysis for axis-parallel boxes and H-convex
// sets.  Subcommands: gen, verify, curve, pierce, collapse.
//
// Exit codes: 0 success (including expected violations whose hypothesis also
// fails), 1 verified-conclusion failure (a finding), 2 input errors (syntax,
// schema, preconditions), 3 guard exceeded, 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dhl/complex.hpp"
#include "dhl/errors.hpp"
#include "dhl/fractional.hpp"
#include "dhl/generate.hpp"
#include "dhl/guards.hpp"
#include "dhl/hconvex.hpp"
#include "dhl/helly.hpp"
#include "dhl/homology.hpp"
#include "dhl/instance.hpp"
#include "dhl/matroid.hpp"

using nlohmann::json;
using namespace dhl;

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

json point_json(const RationalPoint& p) {
    json out = json::array();
    for (const Rational& c : p.coords()) out.push_back(to_string(c));
    return out;
}

json points_json(const std::vector<RationalPoint>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_json(p));
    return out;
}

json refs_json(const std::vector<BoxRef>& refs) {
    json out = json::array();
    for (const BoxRef& r : refs) {
        out.push_back(json{{"class", r.class_index}, {"box", r.box_index}});
    }
    return out;
}

json outcome_json(const HellyOutcome& outcome) {
    if (const auto* w = std::get_if<HellyWitness>(&outcome)) {
        json pts = json::array();
        for (const auto& per_target : w->points) pts.push_back(points_json(per_target));
        return json{{"kind", "witness"}, {"class", w->class_index}, {"points", pts}};
    }
    const auto& v = std::get<HellyViolation>(outcome);
    return json{{"kind", "violation"},
                {"subfamily", refs_json(v.subfamily)},
                {"target", v.target_index}};
}

json counterexample_json(const TupleCounterexample& ce) {
    return json{{"tuple", refs_json(ce.tuple)}, {"target", ce.target_index}};
}

json mask_json(FaceMask mask) {
    json out = json::array();
    for (std::size_t v = 0; mask != 0; ++v, mask >>= 1) {
        if (mask & 1) out.push_back(v);
    }
    return out;
}

void write_report(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
}

void apply_guard_overrides(Guards& guards, const std::vector<std::string>& overrides) {
    for (const std::string& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw CliError{2, "bad --guard, want KEY=VALUE: " + kv};
        const std::string key = kv.substr(0, eq);
        const std::uint64_t value = std::stoull(kv.substr(eq + 1));
        if (key == "tuples") {
            guards.tuple_enum_max = value;
        } else if (key == "faces") {
            guards.face_enum_max = value;
        } else if (key == "leray_vertices") {
            guards.leray_vertex_max = value;
        } else if (key == "pierce_exact") {
            guards.pierce_exact_max = value;
        } else if (key == "matroid_ground") {
            guards.matroid_ground_max = value;
        } else if (key == "nerve_vertices") {
            guards.nerve_vertex_max = value;
        } else {
            throw CliError{2, "unknown guard '" + key + "'"};
        }
    }
}

const PointSetEntry& first_points(const InstanceFile& inst) {
    if (inst.point_sets.empty()) throw CliError{2, "instance has no point sets"};
    return inst.point_sets.front();
}

std::size_t instance_dim_boxes(const InstanceFile& inst) {
    if (inst.boxes.empty()) throw CliError{2, "suite needs boxes in the instance"};
    return inst.dimension;
}

// ---------------------------------------------------------------- suites

int suite_halman(const InstanceFile& inst, json& report) {
    const std::size_t d = instance_dim_boxes(inst);
    const auto targets = inst.targets();
    if (targets.empty()) throw CliError{2, "halman suite needs a point set"};
    const auto bad = check_monochromatic_hypothesis(inst.boxes, targets, 2 * d);
    report["hypothesis"] = json{{"level", 2 * d}, {"ok", !bad.has_value()}};
    if (bad) report["hypothesis"]["counterexample"] = counterexample_json(*bad);

    const auto outcome =
        halman_witness(inst.boxes, targets.front().points, targets.front().required);
    report["outcome"] = outcome_json(outcome);
    if (const auto* v = std::get_if<HellyViolation>(&outcome)) {
        // self-verify: the certificate's intersection misses the target count
        std::vector<AxisBox> cert;
        for (const BoxRef& r : v->subfamily) cert.push_back(inst.boxes[r.box_index]);
        const AxisBox inter = box_intersection(cert);
        std::size_t inside = 0;
        for (const RationalPoint& p : targets.front().points.distinct()) {
            if (inter.contains(p)) ++inside;
        }
        const bool cert_ok = inside < targets.front().required;
        report["certificate_ok"] = cert_ok;
        if (!bad || !cert_ok) return 1;  // hypothesis held yet conclusion failed
    }
    return 0;
}

int suite_colorful(const InstanceFile& inst, json& report) {
    const std::size_t d = instance_dim_boxes(inst);
    if (inst.classes.size() != 2 * d) throw CliError{2, "colorful suite needs exactly 2d classes"};
    ColoredInstance colored{d, inst.box_classes(), inst.targets()};
    const auto bad = check_colorful_hypothesis(colored, 2 * d);
    report["hypothesis"] = json{{"level", 2 * d}, {"ok", !bad.has_value()}};
    if (bad) report["hypothesis"]["counterexample"] = counterexample_json(*bad);

    const auto outcome = colorful_halman(colored);
    report["outcome"] = outcome_json(outcome);
    if (std::holds_alternative<HellyViolation>(outcome) && !bad) return 1;
    return 0;
}

int suite_radon(const InstanceFile& inst, json& report) {
    const PointSet x = first_points(inst).points.as_set();
    const std::size_t d = x.dim();
    const auto point = radon_box_point(x);
    report["set_size"] = x.size();
    if (point) {
        report["point"] = point_json(*point);
        std::vector<RationalPoint> others;
        for (const auto& p : x.distinct()) {
            if (!(p == *point)) others.push_back(p);
        }
        const bool ok = bbox(others).contains(*point);
        report["verified"] = ok;
        if (!ok) return 1;
    } else {
        report["point"] = nullptr;
        if (x.size() >= 2 * d + 1) return 1;  // the lemma guarantees a point here
    }
    return 0;
}

int suite_collapse(const InstanceFile& inst, json& report, const Guards& guards) {
    const std::size_t d = instance_dim_boxes(inst);
    const PointSet& s = first_points(inst).points;
    const auto nerve = discrete_nerve(inst.boxes, s, guards);
    const auto steps = collapse_sequence(inst.boxes, s, guards);
    const auto invalid = verify_collapse_sequence(nerve.complex, steps, 2 * d - 1);

    json jsteps = json::array();
    for (const CollapseStep& st : steps) {
        jsteps.push_back(json{{"sigma", mask_json(st.sigma)},
                              {"eta", mask_json(st.eta)},
                              {"m", st.m}});
    }
    report["nerve"] = json{{"vertices", nerve.vertex_boxes},
                           {"maximal_faces", [&] {
                                json faces = json::array();
                                for (FaceMask f : nerve.complex.maximal_faces()) {
                                    faces.push_back(mask_json(f));
                                }
                                return faces;
                            }()}};
    report["steps"] = std::move(jsteps);
    report["m"] = 2 * d - 1;
    report["verified"] = !invalid.has_value();
    if (invalid) {
        report["first_invalid_step"] = *invalid;
        return 1;
    }
    return 0;
}

int suite_leray(const InstanceFile& inst, json& report, const Guards& guards) {
    const std::size_t d = instance_dim_boxes(inst);
    const PointSet& s = first_points(inst).points;
    const auto nerve = discrete_nerve(inst.boxes, s, guards);
    const bool ok = is_m_leray(nerve.complex, 2 * d - 1, guards);
    report["m"] = 2 * d - 1;
    report["vertices"] = nerve.complex.num_vertices();
    report["leray"] = ok;
    return ok ? 0 : 1;
}

int suite_matroid(const InstanceFile& inst, json& report, const Guards& guards) {
    instance_dim_boxes(inst);
    if (!inst.matroid) throw CliError{2, "matroid suite needs a matroid spec"};
    const MatroidOracle oracle = inst.matroid->build(inst.boxes.size());
    if (const auto flaw = oracle.spot_check(1)) {
        throw CliError{2, "matroid spot check failed: " + *flaw};
    }
    const PointSet& s = first_points(inst).points;
    const auto result = matroid_halman_check(oracle, inst.boxes, s, guards);
    if (const auto* found = std::get_if<MatroidHalmanFound>(&result)) {
        report["outcome"] = json{{"kind", "found"},
                                 {"t", mask_json(found->t)},
                                 {"witness", point_json(found->witness)}};
        const FaceMask all = inst.boxes.size() == 64
                                 ? ~FaceMask{0}
                                 : ((FaceMask{1} << inst.boxes.size()) - 1);
        report["rank_outside"] = oracle.rank(all & ~found->t);
        return 0;
    }
    const auto& bad = std::get<MatroidHypothesisCounterexample>(result);
    report["outcome"] =
        json{{"kind", "hypothesis-counterexample"}, {"independent_set", mask_json(bad.independent_set)}};
    return 0;
}

json fraction_report_json(const FractionReport& rep) {
    json out{{"dim", rep.dim},
             {"k", rep.k},
             {"alpha", to_string(rep.alpha)},
             {"alpha_decimal", to_decimal(rep.alpha)},
             {"beta_measured", to_string(rep.beta)},
             {"beta_measured_decimal", to_decimal(rep.beta)},
             {"bound_checked", rep.bound_checked}};
    if (rep.bound_checked) out["pass"] = rep.pass;
    if (rep.beta_point) out["beta_point"] = point_json(*rep.beta_point);
    out["beta_subfamily"] = rep.beta_subfamily;
    return out;
}

int suite_fractional(const InstanceFile& inst, json& report, const Guards& guards) {
    const std::size_t d = instance_dim_boxes(inst);
    if (inst.boxes.size() < 2 * d) throw CliError{2, "fractional suite needs at least 2d boxes"};
    const PointSet& s = first_points(inst).points;
    const FractionReport strong = verify_fractional_strong(inst.boxes, s, guards);
    report["strong"] = fraction_report_json(strong);
    report["small"] = fraction_report_json(measure_fractional_small(inst.boxes, s, guards));
    return strong.pass ? 0 : 1;
}

int suite_intermix(const InstanceFile& inst, json& report) {
    if (inst.point_sets.empty()) throw CliError{2, "intermix suite needs point sets as parts"};
    std::vector<PointSet> parts;
    for (const auto& e : inst.point_sets) {
        parts.emplace_back(e.points.points(), /*multiset=*/true);
    }
    const std::size_t d = parts.front().dim();
    report["eps"] = "1/" + std::to_string(2 * d);
    const auto violation = intermix_violation(parts, Rational(1, 2 * d));
    if (!violation) {
        const RationalPoint w = intermix_witness(parts);
        report["intermixed"] = true;
        report["witness"] = point_json(w);
        for (const PointSet& part : parts) {
            if (!bbox(part).contains(w)) return 1;
        }
        return 0;
    }
    report["intermixed"] = false;
    report["halfspace"] = json{{"axis", violation->axis},
                               {"orientation", violation->upper ? ">=" : "<="},
                               {"threshold", to_string(violation->threshold)}};
    const std::size_t size0 = parts.front().size();
    const bool aligned = std::all_of(parts.begin(), parts.end(), [&](const PointSet& p) {
        return p.size() == size0;
    });
    if (aligned) {
        IndexedParts ip;
        for (const auto& e : inst.point_sets) ip.parts.push_back(e.points.points());
        const auto result = intermix_dichotomy(ip);
        if (const auto* two = std::get_if<DichotomyCase2>(&result)) {
            report["dichotomy"] = json{{"case", 2},
                                       {"kept_indices", two->kept_indices},
                                       {"separated_part", two->separated_part},
                                       {"dense_part", two->dense_part}};
        } else {
            report["dichotomy"] = json{
                {"case", 1},
                {"witness", point_json(std::get<DichotomyCase1>(result).point)}};
        }
    }
    return 0;
}

int suite_pq(const InstanceFile& inst, json& report, const Guards& guards, std::size_t p,
             std::size_t q) {
    const std::size_t d = instance_dim_boxes(inst);
    if (p == 0) p = d + 1;
    if (q == 0) q = d + 1;
    const PointSet& s = first_points(inst).points;
    report["p"] = p;
    report["q"] = q;
    const auto bad = check_pq_condition(inst.boxes, s, p, q, guards);
    report["condition_ok"] = !bad.has_value();
    if (bad) {
        report["violating_subset"] = bad->subset;
        return 0;
    }
    try {
        const PiercingResult pierce = piercing_set(inst.boxes, s, guards);
        report["piercing"] = json{{"points", points_json(pierce.points)},
                                  {"size", pierce.points.size()},
                                  {"exact", pierce.exact}};
        return 0;
    } catch (const UnpierceableBox& e) {
        report["unpierceable_box"] = e.box_index;
        // With p == q the condition forces every box to meet S, so reaching
        // here would falsify the piercing conclusion outright.
        return p == q ? 1 : 0;
    }
}

int suite_hconvex(const InstanceFile& inst, json& report) {
    std::vector<HConvexSet> sets;
    std::size_t k = 0;
    if (inst.has_hconvex()) {
        sets = inst.hconvex_sets();
        k = inst.directions.size();
    } else {
        const auto dirs = DirectionSet::box_directions(instance_dim_boxes(inst));
        for (const AxisBox& b : inst.boxes) sets.push_back(box_as_hconvex(b, dirs));
        k = dirs->size();
    }
    const auto targets = inst.targets();
    if (targets.empty()) throw CliError{2, "hconvex suite needs a point set"};

    if (!inst.classes.empty()) {
        if (inst.classes.size() != k) {
            throw CliError{2, "hconvex colorful mode needs exactly |H| classes"};
        }
        std::vector<std::vector<HConvexSet>> classes;
        for (const auto& cls : inst.classes) {
            std::vector<HConvexSet> group;
            for (std::size_t i : cls) group.push_back(sets.at(i));
            classes.push_back(std::move(group));
        }
        const auto bad = check_hconvex_colorful_hypothesis(classes, targets, k);
        report["hypothesis"] = json{{"level", k}, {"ok", !bad.has_value()}};
        if (bad) report["hypothesis"]["counterexample"] = counterexample_json(*bad);
        const auto outcome = hconvex_halman_colorful(classes, targets);
        report["outcome"] = outcome_json(outcome);
        if (std::holds_alternative<HellyViolation>(outcome) && !bad) return 1;
        return 0;
    }

    const auto bad = check_hconvex_hypothesis(sets, targets, k);
    report["hypothesis"] = json{{"level", k}, {"ok", !bad.has_value()}};
    if (bad) report["hypothesis"]["counterexample"] = counterexample_json(*bad);
    const auto outcome = hconvex_halman(sets, targets.front().points, targets.front().required);
    report["outcome"] = outcome_json(outcome);
    if (!inst.has_hconvex()) {
        // box payload: cross-check the specialization against the box pipeline
        const auto box_outcome =
            halman_witness(inst.boxes, targets.front().points, targets.front().required);
        const bool agree = box_outcome.index() == outcome.index();
        report["box_agreement"] = agree;
        if (!agree) return 1;
    }
    if (std::holds_alternative<HellyViolation>(outcome) && !bad) return 1;
    return 0;
}

// ------------------------------------------------------------- commands

int cmd_verify(const std::string& path, const std::string& suite, const std::string& out_path,
               const Guards& guards, std::size_t p, std::size_t q, bool timing) {
    const auto started = std::chrono::steady_clock::now();
    const InstanceFile inst = load_instance(path);
    json report;
    report["format"] = "dhl-report-1";
    report["suite"] = suite;
    report["dimension"] = inst.dimension;

    int code = 0;
    if (suite == "halman") {
        code = suite_halman(inst, report);
    } else if (suite == "colorful") {
        code = suite_colorful(inst, report);
    } else if (suite == "radon") {
        code = suite_radon(inst, report);
    } else if (suite == "collapse") {
        code = suite_collapse(inst, report, guards);
    } else if (suite == "leray") {
        code = suite_leray(inst, report, guards);
    } else if (suite == "matroid") {
        code = suite_matroid(inst, report, guards);
    } else if (suite == "fractional") {
        code = suite_fractional(inst, report, guards);
    } else if (suite == "intermix") {
        code = suite_intermix(inst, report);
    } else if (suite == "pq") {
        code = suite_pq(inst, report, guards, p, q);
    } else if (suite == "hconvex") {
        code = suite_hconvex(inst, report);
    } else {
        throw CliError{2, "unknown suite '" + suite + "'"};
    }
    report["ok"] = code == 0;
    if (timing) {
        report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();
    }
    write_report(report, out_path);
    return code;
}

int cmd_gen(const std::string& kind, const std::string& extremal, const GenParams& params,
            std::uint64_t seed, std::size_t level, std::size_t slab_m,
            const std::string& out_path) {
    InstanceFile inst;
    if (kind == "random") {
        inst = gen_random(params, seed);
    } else if (kind == "hypothesis-satisfying") {
        inst = gen_hypothesis_satisfying(params, seed, level);
    } else if (kind == "extremal") {
        ExtremalKind ek;
        if (extremal == "halman-sharp") {
            ek = ExtremalKind::halman_sharp;
        } else if (extremal == "radon-sharp") {
            ek = ExtremalKind::radon_sharp;
        } else if (extremal == "slab") {
            ek = ExtremalKind::slab;
        } else {
            throw CliError{2, "unknown extremal kind '" + extremal + "'"};
        }
        inst = gen_extremal(ek, params.dim, slab_m);
    } else {
        throw CliError{2, "unknown gen kind '" + kind + "'"};
    }
    if (out_path.empty()) {
        std::cout << emit_instance(inst);
    } else {
        save_instance(inst, out_path);
    }
    return 0;
}

int cmd_curve(const GenParams& params, std::size_t k, std::size_t trials, std::uint64_t seed,
              const std::string& kind, const std::string& out_path, const Guards& guards) {
    std::ostringstream csv;
    csv << "trial,d,k,alpha,alpha_decimal,beta_measured,beta_measured_decimal,beta_bound_pass\n";
    const std::size_t tuple_size = k == 0 ? 2 * params.dim : k;
    if (kind != "slab" && tuple_size > params.num_boxes) {
        throw CliError{2, "--k exceeds the box count"};
    }
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t sub_seed = seed + trial;
        InstanceFile inst;
        if (kind == "hypothesis-satisfying") {
            inst = gen_hypothesis_satisfying(params, sub_seed);
        } else if (kind == "slab") {
            // sweep over slabs-per-axis, starting at the smallest m where
            // k-tuples exist: trial t uses m = m0 + t
            const std::size_t m0 =
                std::max<std::size_t>(1, (tuple_size + params.dim - 1) / params.dim);
            inst = gen_extremal(ExtremalKind::slab, params.dim, m0 + trial);
        } else if (kind == "random") {
            inst = gen_random(params, sub_seed);
        } else {
            throw CliError{2, "unknown curve kind '" + kind + "'"};
        }
        const PointSet& s = inst.point_sets.front().points;
        const Rational alpha = tuple_hit_fraction(inst.boxes, s, tuple_size, guards);
        const CommonSubfamily common = max_common_subfamily(inst.boxes, s);
        std::string bound = "na";
        if (tuple_size == 2 * params.dim) {
            const FractionReport rep = verify_fractional_strong(inst.boxes, s, guards);
            bound = rep.pass ? "true" : "false";
        }
        csv << trial << ',' << params.dim << ',' << tuple_size << ',' << to_string(alpha)
            << ',' << to_decimal(alpha) << ',' << to_string(common.fraction) << ','
            << to_decimal(common.fraction) << ',' << bound << '\n';
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << csv.str();
    }
    return 0;
}

int cmd_pierce(const std::string& path, const std::string& out_path, const Guards& guards) {
    const InstanceFile inst = load_instance(path);
    instance_dim_boxes(inst);
    const PointSet& s = first_points(inst).points;
    const PiercingResult result = piercing_set(inst.boxes, s, guards);
    json report{{"format", "dhl-report-1"},
                {"suite", "pierce"},
                {"points", points_json(result.points)},
                {"size", result.points.size()},
                {"exact", result.exact}};
    write_report(report, out_path);
    return 0;
}

int cmd_collapse(const std::string& path, const std::string& out_path, const Guards& guards) {
    const InstanceFile inst = load_instance(path);
    json report;
    report["format"] = "dhl-report-1";
    const int code = suite_collapse(inst, report, guards);
    write_report(report, out_path);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discrete Helly analysis for boxes and H-convex sets"};
    app.require_subcommand(1);

    Guards guards = Guards::from_env();
    std::vector<std::string> guard_overrides;
    app.add_option("--guard", guard_overrides,
                   "guard override KEY=VALUE (tuples, faces, leray_vertices, pierce_exact, "
                   "matroid_ground, nerve_vertices)")
        ->take_all();

    GenParams params;
    std::uint64_t seed = 1;
    std::string out_path;
    std::string kind = "random";
    std::string extremal = "halman-sharp";
    std::size_t level = 0;
    std::size_t slab_m = 1;

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("--kind", kind, "random | hypothesis-satisfying | extremal");
    gen->add_option("--extremal", extremal, "halman-sharp | radon-sharp | slab");
    gen->add_option("--dim", params.dim, "ambient dimension");
    gen->add_option("--boxes", params.num_boxes, "number of boxes");
    gen->add_option("--points", params.num_points, "points per point set");
    gen->add_option("--classes", params.num_classes, "color classes (0 = monochromatic)");
    gen->add_option("--target", params.target, "required points per target");
    gen->add_option("--targets", params.num_targets, "number of point sets");
    gen->add_option("--range", params.coord_range, "coordinate range");
    gen->add_option("--denoms", params.denom_max, "max denominator");
    gen->add_option("--level", level, "hypothesis tuple size (0 = 2d)");
    gen->add_option("--m", slab_m, "slabs per axis for the slab construction");
    gen->add_flag("--pierceable", params.pierceable, "seed one point inside every box");
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--out", out_path, "output file (default stdout)");

    std::string verify_path, suite;
    std::size_t opt_p = 0, opt_q = 0;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a theorem suite against an instance");
    verify->add_option("file", verify_path, "instance file")->required();
    verify->add_option("--suite", suite,
                       "halman | colorful | radon | collapse | leray | matroid | fractional | "
                       "intermix | pq | hconvex")
        ->required();
    verify->add_option("--p", opt_p, "p for the pq suite (default d+1)");
    verify->add_option("--q", opt_q, "q for the pq suite (default d+1)");
    verify->add_flag("--timing", timing, "include wall-clock timing in the report");
    verify->add_option("--out", out_path, "report file (default stdout)");

    std::size_t curve_k = 0, trials = 10;
    std::string curve_kind = "random";
    auto* curve = app.add_subcommand("curve", "alpha/beta measurement sweep as CSV");
    curve->add_option("--trials", trials, "number of instances");
    curve->add_option("--dim", params.dim, "ambient dimension");
    curve->add_option("--k", curve_k, "tuple size (0 = 2d)");
    curve->add_option("--boxes", params.num_boxes, "boxes per instance");
    curve->add_option("--points", params.num_points, "points per instance");
    curve->add_option("--range", params.coord_range, "coordinate range");
    curve->add_option("--kind", curve_kind, "random | hypothesis-satisfying | slab");
    curve->add_option("--seed", seed, "base seed; trial t uses seed+t");
    curve->add_option("--out", out_path, "CSV file (default stdout)");

    std::string pierce_path;
    auto* pierce = app.add_subcommand("pierce", "minimum piercing subset of S");
    pierce->add_option("file", pierce_path, "instance file")->required();
    pierce->add_option("--out", out_path, "report file (default stdout)");

    std::string collapse_path;
    auto* collapse = app.add_subcommand("collapse", "nerve complex and collapse sequence");
    collapse->add_option("file", collapse_path, "instance file")->required();
    collapse->add_option("--out", out_path, "report file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_guard_overrides(guards, guard_overrides);
        if (gen->parsed()) return cmd_gen(kind, extremal, params, seed, level, slab_m, out_path);
        if (verify->parsed()) {
            return cmd_verify(verify_path, suite, out_path, guards, opt_p, opt_q, timing);
        }
        if (curve->parsed()) {
            return cmd_curve(params, curve_k, trials, seed, curve_kind, out_path, guards);
        }
        if (pierce->parsed()) return cmd_pierce(pierce_path, out_path, guards);
        if (collapse->parsed()) return cmd_collapse(collapse_path, out_path, guards);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const TheoremViolation& e) {
        std::cerr << "conclusion failed to verify: " << e.what() << "\n";
        return 1;
    } catch (const UnpierceableBox& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
