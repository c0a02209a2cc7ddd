// Acceptance runner: one line per criterion, nonzero exit when any fails.
// Usage: acceptance [path-to-dhl-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dhl/complex.hpp"
#include "dhl/detail/combinatorics.hpp"
#include "dhl/errors.hpp"
#include "dhl/fractional.hpp"
#include "dhl/generate.hpp"
#include "dhl/hconvex.hpp"
#include "dhl/helly.hpp"
#include "dhl/homology.hpp"
#include "dhl/instance.hpp"
#include "dhl/matroid.hpp"

using namespace dhl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string g_cli_path;

// ------------------------------------------------------------ criterion 1

Outcome criterion_halman() {
    const auto started = std::chrono::steady_clock::now();
    Rng rng(1001);
    std::size_t failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        GenParams params;
        params.dim = 1 + trial % 3;
        params.num_boxes = 4 + rng.below(9);    // <= 12
        params.num_points = 10 + rng.below(31); // <= 40
        const InstanceFile inst = gen_hypothesis_satisfying(params, 50000 + trial);
        const auto targets = inst.targets();
        const auto outcome =
            halman_witness(inst.boxes, targets.front().points, targets.front().required);
        if (!std::holds_alternative<HellyWitness>(outcome)) ++failures;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const bool in_time = secs < 60.0;
    return {failures == 0 && in_time,
            "500 hypothesis-satisfying instances, " + std::to_string(failures) +
                " without a witness" + (in_time ? "" : "; over the 60s budget")};
}

// ------------------------------------------------------------ criterion 2

Outcome criterion_sharpness() {
    for (std::size_t d = 1; d <= 4; ++d) {
        const SharpInstance inst = halman_sharp_instance(d);
        if (inst.boxes.size() != 2 * d) return {false, "wrong box count at d=" + std::to_string(d)};
        for (std::size_t skip = 0; skip < inst.boxes.size(); ++skip) {
            std::vector<AxisBox> sub;
            for (std::size_t i = 0; i < inst.boxes.size(); ++i) {
                if (i != skip) sub.push_back(inst.boxes[i]);
            }
            const AxisBox inter = box_intersection(sub);
            bool hit = false;
            for (const auto& p : inst.points.distinct()) hit = hit || inter.contains(p);
            if (!hit) {
                return {false, "a (2d-1)-subfamily misses S at d=" + std::to_string(d)};
            }
        }
        const AxisBox whole = box_intersection(inst.boxes);
        for (const auto& p : inst.points.distinct()) {
            if (whole.contains(p)) {
                return {false, "full family meets S at d=" + std::to_string(d)};
            }
        }
        const auto outcome = halman_witness(inst.boxes, inst.points, 1);
        const auto* v = std::get_if<HellyViolation>(&outcome);
        if (v == nullptr || v->subfamily.size() > 2 * d) {
            return {false, "violation certificate too large at d=" + std::to_string(d)};
        }
    }
    return {true, "d=1..4 exhaustive subfamily checks, certificates within 2d"};
}

// ------------------------------------------------------------ criterion 3

std::vector<std::size_t> valid_classes(const ColoredInstance& inst) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < inst.classes.size(); ++c) {
        const AxisBox inter = box_intersection(inst.classes[c]);
        bool ok = true;
        for (const Target& t : inst.targets) {
            std::size_t count = 0;
            for (const RationalPoint& p : t.points.distinct()) {
                if (inter.contains(p)) ++count;
            }
            if (count < t.required) ok = false;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

Outcome criterion_colorful() {
    Rng rng(1003);
    std::size_t failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        GenParams params;
        params.dim = 1 + trial % 2;
        params.num_classes = 2 * params.dim;
        params.num_boxes = params.num_classes * (1 + rng.below(3));
        params.num_points = 8 + rng.below(10);
        params.num_targets = trial % 2 == 0 ? 1 : 2;  // very-colorful half the time
        params.target = 1 + rng.below(2);
        const InstanceFile inst = gen_hypothesis_satisfying(params, 60000 + trial);
        ColoredInstance colored{params.dim, inst.box_classes(), inst.targets()};
        const auto outcome = colorful_halman(colored);
        const auto* w = std::get_if<HellyWitness>(&outcome);
        if (w == nullptr) {
            ++failures;
            continue;
        }
        const auto valid = valid_classes(colored);
        if (std::find(valid.begin(), valid.end(), w->class_index) == valid.end()) ++failures;
    }
    return {failures == 0,
            "200 colorful/very-colorful instances, " + std::to_string(failures) +
                " with a class outside the exhaustively-valid set"};
}

// ------------------------------------------------------------ criterion 4

Outcome criterion_fractional_strong() {
    Rng rng(1004);
    std::size_t failures = 0;
    std::string first_fail;
    for (int trial = 0; trial < 300; ++trial) {
        GenParams params;
        params.dim = 1 + trial % 2;
        params.num_boxes = 2 * params.dim + rng.below(11 - 2 * params.dim);  // <= 10
        params.num_points = 6 + rng.below(8);
        const InstanceFile inst = gen_random(params, 70000 + trial);
        const PointSet& s = inst.point_sets.front().points;
        const FractionReport rep = verify_fractional_strong(inst.boxes, s);
        if (!rep.pass) {
            ++failures;
            if (first_fail.empty()) {
                first_fail = " first: d=" + std::to_string(rep.dim) + " alpha=" +
                             to_string(rep.alpha) + " beta=" + to_string(rep.beta);
            }
        }
    }
    return {failures == 0, "exact (1-beta)^(2d-1) <= 1-alpha on 300 random instances, " +
                               std::to_string(failures) + " violations;" + first_fail};
}

// --------------------------------------------------------- criteria 5 + 6

struct RandomBoxInstance {
    std::vector<AxisBox> boxes;
    PointSet points;
    std::size_t dim;
};

RandomBoxInstance random_instance(Rng& rng, std::size_t max_boxes, std::size_t max_points) {
    RandomBoxInstance out;
    out.dim = 1 + rng.below(3);
    GenParams params;
    params.dim = out.dim;
    params.coord_range = 6;
    const std::size_t nb = 2 + rng.below(max_boxes - 1);
    for (std::size_t i = 0; i < nb; ++i) {
        std::vector<Interval> iv;
        for (std::size_t a = 0; a < out.dim; ++a) {
            Rational x = random_rational(rng, 6, 2);
            Rational y = random_rational(rng, 6, 2);
            if (y < x) std::swap(x, y);
            iv.push_back(Interval{std::move(x), std::move(y)});
        }
        out.boxes.emplace_back(std::move(iv));
    }
    std::vector<RationalPoint> pts;
    const std::size_t np = 1 + rng.below(max_points);
    for (std::size_t i = 0; i < np; ++i) pts.push_back(random_point(rng, out.dim, 6, 2));
    out.points = PointSet(std::move(pts));
    return out;
}

std::vector<RandomBoxInstance> collapse_pool() {
    std::vector<RandomBoxInstance> pool;
    Rng rng(1005);
    for (int trial = 0; trial < 200; ++trial) pool.push_back(random_instance(rng, 10, 15));
    return pool;
}

Outcome criterion_collapse() {
    std::size_t failures = 0;
    for (const RandomBoxInstance& inst : collapse_pool()) {
        try {
            const auto nerve = discrete_nerve(inst.boxes, inst.points);
            const auto steps = collapse_sequence(inst.boxes, inst.points);
            if (verify_collapse_sequence(nerve.complex, steps, 2 * inst.dim - 1).has_value()) {
                ++failures;
            }
        } catch (const TheoremViolation&) {
            ++failures;
        }
    }
    return {failures == 0, "200 random instances collapsed and replayed at m=2d-1, " +
                               std::to_string(failures) + " failures"};
}

Outcome criterion_leray() {
    const auto started = std::chrono::steady_clock::now();
    std::size_t failures = 0;
    for (const RandomBoxInstance& inst : collapse_pool()) {
        const auto nerve = discrete_nerve(inst.boxes, inst.points);
        if (!is_m_leray(nerve.complex, 2 * inst.dim - 1)) ++failures;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    const bool in_time = secs < 120.0;
    return {failures == 0 && in_time,
            "exhaustive induced-subcomplex homology on 200 nerves, " +
                std::to_string(failures) + " non-Leray" +
                (in_time ? "" : "; over the 120s budget")};
}

// ------------------------------------------------------------ criterion 7

Outcome criterion_radon() {
    Rng rng(1007);
    std::size_t failures = 0;
    int produced = 0;
    while (produced < 500) {
        const std::size_t d = 1 + rng.below(4);
        std::vector<RationalPoint> pts;
        for (std::size_t i = 0; i < 2 * d + 1; ++i) pts.push_back(random_point(rng, d, 8, 2));
        const PointSet x(pts);
        if (x.distinct().size() != 2 * d + 1) continue;  // resample collisions
        ++produced;
        const auto point = radon_box_point(x);
        if (!point) {
            ++failures;
            continue;
        }
        std::vector<RationalPoint> others;
        for (const auto& p : x.distinct()) {
            if (!(p == *point)) others.push_back(p);
        }
        if (!bbox(others).contains(*point)) ++failures;
    }
    for (std::size_t d = 1; d <= 4; ++d) {
        if (radon_box_point(cross_polytope_points(d)).has_value()) ++failures;
    }
    return {failures == 0, "500 random (2d+1)-sets plus 4 sharp cross sets, " +
                               std::to_string(failures) + " failures"};
}

// ------------------------------------------------------------ criterion 8

Outcome criterion_intermix() {
    std::size_t failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t r = 2 + trial % 2;
        const std::size_t size = 4 + trial % 5;
        const auto parts = gen_intermixed_parts(d, r, size, 80000 + trial);
        std::vector<PointSet> sets;
        for (const auto& part : parts) sets.emplace_back(part, true);
        if (!is_box_intermixed(sets, Rational(1, 2 * d))) {
            ++failures;
            continue;
        }
        try {
            const RationalPoint w = intermix_witness(sets);
            for (const PointSet& part : sets) {
                if (!bbox(part).contains(w)) ++failures;
            }
        } catch (const std::exception&) {
            ++failures;
            continue;
        }

        // dichotomy: intermixed parts take case 1, separated parts case 2
        IndexedParts ip;
        ip.parts = parts;
        try {
            const auto result = intermix_dichotomy(ip);
            if (!std::holds_alternative<DichotomyCase1>(result)) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
        const auto separated = gen_separated_parts(d, std::min(r, 2 * d), size, 90000 + trial);
        IndexedParts ip2;
        ip2.parts = separated;
        try {
            const auto result = intermix_dichotomy(ip2);
            const auto* two = std::get_if<DichotomyCase2>(&result);
            if (two == nullptr) {
                ++failures;
            } else if (two->kept_indices.size() < (size + 2 * d - 1) / (2 * d)) {
                ++failures;
            }
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return {failures == 0,
            "200 intermixed witnesses plus dichotomy on both regimes, " +
                std::to_string(failures) + " failures"};
}

// ------------------------------------------------------------ criterion 9

Outcome criterion_slab() {
    for (std::size_t d : {2u, 3u}) {
        for (std::size_t m : {1u, 2u, 3u}) {
            const SlabInstance slab = slab_instance(d, m);
            std::size_t expected = 1;
            for (std::size_t i = 0; i < d; ++i) expected *= m;
            std::size_t hit_d = 0, hit_d1 = 0;
            detail::for_each_combination(
                slab.boxes.size(), d, [&](const std::vector<std::size_t>& idx) {
                    std::vector<AxisBox> sub;
                    for (std::size_t i : idx) sub.push_back(slab.boxes[i]);
                    const AxisBox inter = box_intersection(sub);
                    for (const auto& p : slab.points.distinct()) {
                        if (inter.contains(p)) {
                            ++hit_d;
                            break;
                        }
                    }
                    return true;
                });
            if (slab.boxes.size() >= d + 1) {
                detail::for_each_combination(
                    slab.boxes.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
                        std::vector<AxisBox> sub;
                        for (std::size_t i : idx) sub.push_back(slab.boxes[i]);
                        if (!box_intersection(sub).is_empty()) ++hit_d1;
                        return true;
                    });
            }
            if (hit_d != expected || hit_d1 != 0) {
                return {false, "counts off at d=" + std::to_string(d) +
                                   " m=" + std::to_string(m) + ": " + std::to_string(hit_d) +
                                   " d-tuples, " + std::to_string(hit_d1) + " (d+1)-tuples"};
            }
        }
    }
    return {true, "exactly m^d intersecting d-tuples and zero (d+1)-tuples for d in {2,3}"};
}

// ----------------------------------------------------------- criterion 10

Outcome criterion_hconvex() {
    std::size_t failures = 0;
    // paired: box pipeline vs box-direction hconvex pipeline
    Rng rng(1010);
    const auto bd2 = DirectionSet::box_directions(2);
    for (int trial = 0; trial < 100; ++trial) {
        const RandomBoxInstance inst = [&] {
            Rng local(20000 + trial);
            return random_instance(local, 8, 10);
        }();
        if (inst.points.empty()) continue;
        const auto dirs = DirectionSet::box_directions(inst.dim);
        std::vector<HConvexSet> sets;
        for (const AxisBox& b : inst.boxes) sets.push_back(box_as_hconvex(b, dirs));
        const auto box_out = halman_witness(inst.boxes, inst.points, 1);
        const auto h_out = hconvex_halman(sets, inst.points, 1);
        if (box_out.index() != h_out.index()) {
            ++failures;
            continue;
        }
        if (const auto* bw = std::get_if<HellyWitness>(&box_out)) {
            if (bw->points != std::get<HellyWitness>(h_out).points) ++failures;
        } else {
            auto sorted_indices = [](const HellyViolation& v) {
                std::vector<std::size_t> idx;
                for (const BoxRef& r : v.subfamily) idx.push_back(r.box_index);
                std::sort(idx.begin(), idx.end());
                return idx;
            };
            if (sorted_indices(std::get<HellyViolation>(box_out)) !=
                sorted_indices(std::get<HellyViolation>(h_out))) {
                ++failures;
            }
        }
    }
    // triangle directions: hypothesis-satisfying instances must witness
    const auto tri = std::make_shared<const DirectionSet>(std::vector<std::vector<Rational>>{
        {Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}, {Rational(1), Rational(1)}});
    for (int trial = 0; trial < 100; ++trial) {
        GenParams params;
        params.dim = 2;
        params.num_boxes = 4 + rng.below(4);
        params.num_points = 8 + rng.below(8);
        const auto inst = gen_hconvex_hypothesis(tri, params, 30000 + trial);
        const auto outcome = hconvex_halman(inst.sets, inst.points, 1);
        if (!std::holds_alternative<HellyWitness>(outcome)) ++failures;
        // proof-faithful scan agrees on membership
        const auto scan = hconvex_witness_scan(inst.sets, inst.points);
        const auto* point = std::get_if<RationalPoint>(&scan);
        if (point == nullptr) {
            ++failures;
        } else {
            for (const auto& set : inst.sets) {
                if (!set.contains(*point)) ++failures;
            }
        }
    }
    return {failures == 0, "100 box-direction pairs and 100 triangle instances, " +
                               std::to_string(failures) + " disagreements"};
}

// ----------------------------------------------------------- criterion 11

Outcome criterion_matroid() {
    Rng rng(1011);
    std::size_t failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        GenParams params;
        params.dim = 1 + trial % 2;
        params.num_boxes = 4 + rng.below(7);  // <= 10 elements
        params.num_points = 8 + rng.below(8);
        const InstanceFile inst = gen_hypothesis_satisfying(params, 40000 + trial);
        // the anchor guarantees every subfamily meets S, so every matroid
        // hypothesis over these boxes holds
        const std::size_t n = inst.boxes.size();
        MatroidOracle oracle = trial % 2 == 0
                                   ? MatroidOracle::uniform(n, 1 + rng.below(n))
                                   : MatroidOracle::partition(n, [&] {
                                         std::vector<std::vector<std::size_t>> parts(
                                             1 + rng.below(3));
                                         for (std::size_t v = 0; v < n; ++v) {
                                             parts[v % parts.size()].push_back(v);
                                         }
                                         return parts;
                                     }());
        const PointSet& s = inst.point_sets.front().points;
        try {
            const auto result = matroid_halman_check(oracle, inst.boxes, s);
            const auto* found = std::get_if<MatroidHalmanFound>(&result);
            if (found == nullptr) continue;  // hypothesis can fail for sparse matroids
            const FaceMask all = (FaceMask{1} << n) - 1;
            if (oracle.rank(all & ~found->t) > 2 * params.dim - 1) ++failures;
            for (std::size_t v = 0; v < n; ++v) {
                if ((found->t >> v) & 1 && !inst.boxes[v].contains(found->witness)) {
                    ++failures;
                }
            }
        } catch (const TheoremViolation&) {
            ++failures;
        }
    }
    return {failures == 0, "100 uniform/partition matroid instances, " +
                               std::to_string(failures) + " failures"};
}

// ----------------------------------------------------------- criterion 12

Outcome criterion_piercing() {
    Rng rng(1012);
    std::size_t failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + rng.below(2);
        GenParams params;
        params.dim = d;
        params.num_boxes = 3 + rng.below(8);  // <= 10
        params.num_points = rng.below(3);     // pierceable seeding adds one per box
        params.pierceable = true;             // so the total stays <= 12
        const InstanceFile inst = gen_random(params, 95000 + trial);
        const PointSet& s = inst.point_sets.front().points;
        PiercingResult result;
        try {
            result = piercing_set(inst.boxes, s);
        } catch (const UnpierceableBox&) {
            ++failures;
            continue;
        }
        if (!result.exact) continue;
        // oracle: exhaustive subset scan over the distinct points, with box
        // membership precomputed once per point
        const auto& pts = s.distinct();
        std::vector<std::uint64_t> cover(pts.size(), 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t b = 0; b < inst.boxes.size(); ++b) {
                if (inst.boxes[b].contains(pts[i])) cover[i] |= std::uint64_t{1} << b;
            }
        }
        const std::uint64_t all_boxes = (std::uint64_t{1} << inst.boxes.size()) - 1;
        std::size_t best = pts.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pts.size()); ++mask) {
            std::uint64_t covered = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if ((mask >> i) & 1) covered |= cover[i];
            }
            if (covered == all_boxes) {
                best = std::min<std::size_t>(best, std::popcount(mask));
            }
        }
        if (result.points.size() != best) ++failures;
        // the returned set actually pierces
        for (const AxisBox& b : inst.boxes) {
            bool hit = false;
            for (const auto& p : result.points) hit = hit || b.contains(p);
            if (!hit) ++failures;
        }
        // instances passing p=q=d+1 must admit a piercing set
        if (inst.boxes.size() >= d + 1 &&
            !check_pq_condition(inst.boxes, s, d + 1, d + 1).has_value()) {
            if (result.points.empty()) ++failures;
        }
    }
    return {failures == 0, "100 exact set-cover cross-checks, " + std::to_string(failures) +
                               " mismatches"};
}

// ----------------------------------------------------------- criterion 13

int run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion_cli() {
    if (g_cli_path.empty()) return {false, "no CLI path given"};
    const fs::path dir = fs::temp_directory_path() / "dhl-acceptance";
    fs::create_directories(dir);
    std::vector<std::string> problems;

    const std::string gen_a = (dir / "a.json").string();
    const std::string gen_b = (dir / "b.json").string();
    if (run_cli("gen --kind hypothesis-satisfying --dim 2 --boxes 6 --points 12 --seed 9 --out " +
                gen_a) != 0 ||
        run_cli("gen --kind hypothesis-satisfying --dim 2 --boxes 6 --points 12 --seed 9 --out " +
                gen_b) != 0) {
        problems.push_back("gen failed");
    } else if (slurp(gen_a) != slurp(gen_b)) {
        problems.push_back("gen not byte-deterministic");
    }

    // round-trip: parsing and re-emitting reproduces the bytes
    try {
        const std::string text = slurp(gen_a);
        if (emit_instance(parse_instance(text)) != text) {
            problems.push_back("emit(parse(file)) changed bytes");
        }
    } catch (const std::exception& e) {
        problems.push_back(std::string("round-trip error: ") + e.what());
    }

    const std::string sharp = (dir / "sharp.json").string();
    run_cli("gen --kind extremal --extremal halman-sharp --dim 2 --out " + sharp);
    if (run_cli("verify " + sharp + " --suite halman") != 0) {
        problems.push_back("sharp+halman should exit 0 (expected violation)");
    }
    if (run_cli("verify " + gen_a + " --suite halman") != 0) {
        problems.push_back("hypothesis+halman should exit 0");
    }

    const std::string broken = (dir / "broken.json").string();
    std::ofstream(broken) << "{\"format\": \"dhl-1\", \"dimension\": ";
    if (run_cli("verify " + broken + " --suite halman") != 2) {
        problems.push_back("malformed file should exit 2");
    }

    if (run_cli("--guard tuples=1 verify " + gen_a + " --suite fractional") != 3) {
        problems.push_back("guard exhaustion should exit 3");
    }

    // a verified-conclusion failure exits 1: the four-interval chain violates
    // the exponent-(2d-1) fractional bound
    const std::string chain = (dir / "chain.json").string();
    std::ofstream(chain) << R"({"format": "dhl-1", "dimension": 1,
        "boxes": [{"lo": ["0"], "hi": ["2"]}, {"lo": ["1"], "hi": ["3"]},
                  {"lo": ["2"], "hi": ["4"]}, {"lo": ["3"], "hi": ["5"]}],
        "point_sets": [{"points": [["1"], ["2"], ["3"]]}]})";
    if (run_cli("verify " + chain + " --suite fractional") != 1) {
        problems.push_back("fractional bound violation should exit 1");
    }

    if (run_cli("verify " + gen_a + " --suite nope") != 2) {
        problems.push_back("unknown suite should exit 2");
    }

    const std::string csv_a = (dir / "a.csv").string();
    const std::string csv_b = (dir / "b.csv").string();
    if (run_cli("curve --trials 6 --dim 1 --boxes 5 --points 6 --seed 4 --out " + csv_a) != 0 ||
        run_cli("curve --trials 6 --dim 1 --boxes 5 --points 6 --seed 4 --out " + csv_b) != 0) {
        problems.push_back("curve failed");
    } else if (slurp(csv_a) != slurp(csv_b)) {
        problems.push_back("curve not byte-deterministic");
    }
    if (run_cli("curve --trials 0 --dim 1 --boxes 5 --out " + csv_a) != 0) {
        problems.push_back("empty curve sweep failed");
    } else {
        const std::string head = slurp(csv_a);
        if (head.find('\n') == std::string::npos ||
            head.find('\n') != head.size() - 1) {
            problems.push_back("trials=0 should emit a header-only CSV");
        }
    }

    std::string detail = "determinism, round-trip, and exit codes 0/1/2/3";
    if (!problems.empty()) {
        detail = problems.front();
        for (std::size_t i = 1; i < problems.size(); ++i) detail += "; " + problems[i];
    }
    return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    using Criterion = std::pair<const char*, std::function<Outcome()>>;
    const std::vector<Criterion> criteria{
        {"halman witness on hypothesis-satisfying instances", criterion_halman},
        {"halman sharpness d=1..4", criterion_sharpness},
        {"colorful class agreement", criterion_colorful},
        {"fractional strong bound (exponent 2d-1)", criterion_fractional_strong},
        {"collapse sequences verify at m=2d-1", criterion_collapse},
        {"nerves are (2d-1)-Leray", criterion_leray},
        {"radon box point", criterion_radon},
        {"intermixing witness and dichotomy", criterion_intermix},
        {"slab construction counts", criterion_slab},
        {"hconvex specialization and triangles", criterion_hconvex},
        {"matroid rank certificates", criterion_matroid},
        {"piercing exact set cover", criterion_piercing},
        {"CLI determinism and exit codes", criterion_cli},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto started = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - started)
                                .count();
        std::printf("%s | criterion %2zu | %s | %s | %.2fs\n",
                    outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.pass) ++failed;
    }
    if (failed != 0) {
        std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    }
    return failed == 0 ? 0 : 1;
}
