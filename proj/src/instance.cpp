#include "dhl/instance.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dhl/errors.hpp"

namespace dhl {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
    return to_string(r);
}

Rational rational_from(const json& j, const char* where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw ParseError(std::string(where) + ": rational must be a string");
    return parse_rational(j.get<std::string>());
}

json point_json(const RationalPoint& p) {
    json out = json::array();
    for (const Rational& c : p.coords()) out.push_back(rational_json(c));
    return out;
}

RationalPoint point_from(const json& j, std::size_t dim, const char* where) {
    if (!j.is_array() || j.size() != dim) {
        throw ParseError(std::string(where) + ": point must be an array of length d");
    }
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from(c, where));
    return RationalPoint(std::move(coords));
}

template <typename Fn>
auto guarded(const char* where, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

}  // namespace

MatroidOracle MatroidSpec::build(std::size_t ground_size) const {
    switch (kind) {
        case MatroidOracle::Kind::uniform:
            return MatroidOracle::uniform(ground_size, uniform_rank);
        case MatroidOracle::Kind::partition:
            return MatroidOracle::partition(ground_size, parts, capacities);
        case MatroidOracle::Kind::explicit_sets: {
            std::vector<FaceMask> masks;
            for (const auto& set : independent) {
                FaceMask m = 0;
                for (std::size_t v : set) {
                    if (v >= ground_size) {
                        throw ParseError("matroid independent set index out of range");
                    }
                    m |= FaceMask{1} << v;
                }
                masks.push_back(m);
            }
            return MatroidOracle::from_independent_sets(ground_size, std::move(masks));
        }
    }
    throw ParseError("unknown matroid kind");
}

std::vector<Target> InstanceFile::targets() const {
    std::vector<Target> out;
    for (const PointSetEntry& e : point_sets) out.push_back(Target{e.points, e.target});
    return out;
}

std::vector<std::vector<AxisBox>> InstanceFile::box_classes() const {
    std::vector<std::vector<AxisBox>> out;
    for (const auto& cls : classes) {
        std::vector<AxisBox> group;
        for (std::size_t i : cls) group.push_back(boxes.at(i));
        out.push_back(std::move(group));
    }
    return out;
}

std::vector<HConvexSet> InstanceFile::hconvex_sets() const {
    auto dirs = std::make_shared<const DirectionSet>(directions);
    std::vector<HConvexSet> out;
    for (const auto& bounds : hconvex_bounds) out.emplace_back(dirs, bounds);
    return out;
}

InstanceFile parse_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (!j.contains("format") || j["format"] != kFormatTag) {
        throw ParseError("missing or unsupported format tag (want \"dhl-1\")");
    }
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned() ||
        j["dimension"].get<std::size_t>() == 0) {
        throw ParseError("dimension must be a positive integer");
    }

    InstanceFile inst;
    inst.dimension = j["dimension"].get<std::size_t>();
    const std::size_t d = inst.dimension;

    if (j.contains("boxes")) {
        if (!j["boxes"].is_array()) throw ParseError("boxes must be an array");
        for (const auto& jb : j["boxes"]) {
            if (jb.contains("empty") && jb["empty"].get<bool>()) {
                inst.boxes.push_back(AxisBox::empty(d));
                continue;
            }
            if (!jb.contains("lo") || !jb.contains("hi") || jb["lo"].size() != d ||
                jb["hi"].size() != d) {
                throw ParseError("box needs lo and hi arrays of length d");
            }
            std::vector<Interval> axes(d);
            for (std::size_t i = 0; i < d; ++i) {
                axes[i].lo = rational_from(jb["lo"][i], "box lo");
                axes[i].hi = rational_from(jb["hi"][i], "box hi");
                if (axes[i].lo > axes[i].hi) {
                    throw ParseError("box has lo > hi; use {\"empty\":true} for empty boxes");
                }
            }
            inst.boxes.emplace_back(std::move(axes));
        }
    }

    if (j.contains("hconvex")) {
        const auto& jh = j["hconvex"];
        if (!jh.contains("directions") || !jh["directions"].is_array() ||
            jh["directions"].empty()) {
            throw ParseError("hconvex needs a nonempty directions array");
        }
        for (const auto& jd : jh["directions"]) {
            if (!jd.is_array() || jd.size() != d) {
                throw ParseError("direction must be an array of length d");
            }
            std::vector<Rational> dir;
            for (const auto& c : jd) dir.push_back(rational_from(c, "direction"));
            inst.directions.push_back(std::move(dir));
        }
        guarded("hconvex directions", [&] {
            DirectionSet probe(inst.directions);
            (void)probe;
            return 0;
        });
        if (!jh.contains("sets") || !jh["sets"].is_array()) {
            throw ParseError("hconvex needs a sets array");
        }
        for (const auto& js : jh["sets"]) {
            if (!js.contains("bounds") || js["bounds"].size() != inst.directions.size()) {
                throw ParseError("hconvex set needs one bound per direction");
            }
            std::vector<std::optional<Rational>> bounds;
            for (const auto& c : js["bounds"]) {
                if (c.is_null()) {
                    bounds.push_back(std::nullopt);
                } else {
                    bounds.push_back(rational_from(c, "hconvex bound"));
                }
            }
            inst.hconvex_bounds.push_back(std::move(bounds));
        }
        guarded("hconvex sets", [&] {
            inst.hconvex_sets();
            return 0;
        });
    }
    if (!inst.boxes.empty() && inst.has_hconvex()) {
        throw ParseError("an instance holds boxes or hconvex sets, not both");
    }

    const std::size_t set_count = inst.has_hconvex() ? inst.hconvex_bounds.size()
                                                     : inst.boxes.size();
    if (j.contains("classes")) {
        std::vector<bool> used(set_count, false);
        for (const auto& jc : j["classes"]) {
            std::vector<std::size_t> cls;
            for (const auto& ji : jc) {
                const std::size_t i = ji.get<std::size_t>();
                if (i >= set_count) throw ParseError("class index out of range");
                if (used[i]) throw ParseError("classes may cover each set at most once");
                used[i] = true;
                cls.push_back(i);
            }
            inst.classes.push_back(std::move(cls));
        }
    }

    if (j.contains("point_sets")) {
        for (const auto& jp : j["point_sets"]) {
            PointSetEntry entry;
            const bool multiset = jp.contains("multiset") && jp["multiset"].get<bool>();
            std::vector<RationalPoint> pts;
            if (!jp.contains("points") || !jp["points"].is_array()) {
                throw ParseError("point set needs a points array");
            }
            for (const auto& pj : jp["points"]) pts.push_back(point_from(pj, d, "point"));
            entry.points = PointSet(std::move(pts), multiset);
            if (jp.contains("target")) {
                entry.target = jp["target"].get<std::size_t>();
                if (entry.target == 0) throw ParseError("target count must be at least 1");
            }
            inst.point_sets.push_back(std::move(entry));
        }
    }

    if (j.contains("matroid")) {
        const auto& jm = j["matroid"];
        MatroidSpec spec;
        const std::string kind = jm.value("kind", "");
        if (kind == "uniform") {
            spec.kind = MatroidOracle::Kind::uniform;
            spec.uniform_rank = jm.at("rank").get<std::size_t>();
        } else if (kind == "partition") {
            spec.kind = MatroidOracle::Kind::partition;
            for (const auto& jp : jm.at("parts")) {
                spec.parts.push_back(jp.get<std::vector<std::size_t>>());
            }
            if (jm.contains("capacities")) {
                spec.capacities = jm["capacities"].get<std::vector<std::size_t>>();
            }
        } else if (kind == "explicit") {
            spec.kind = MatroidOracle::Kind::explicit_sets;
            for (const auto& ji : jm.at("independent")) {
                spec.independent.push_back(ji.get<std::vector<std::size_t>>());
            }
        } else {
            throw ParseError("matroid kind must be uniform, partition, or explicit");
        }
        guarded("matroid", [&] {
            spec.build(set_count);
            return 0;
        });
        inst.matroid = std::move(spec);
    }

    if (j.contains("manifest")) {
        const auto& jm = j["manifest"];
        RunManifest m;
        m.library = jm.value("library", kLibraryVersion);
        m.operation = jm.value("operation", "");
        m.seed = jm.value("seed", std::uint64_t{0});
        if (jm.contains("params")) {
            for (const auto& [key, value] : jm["params"].items()) {
                m.params.emplace_back(key, value.get<std::string>());
            }
        }
        inst.manifest = std::move(m);
    }
    return inst;
}

std::string emit_instance(const InstanceFile& inst) {
    json j;
    j["format"] = kFormatTag;
    j["dimension"] = inst.dimension;
    if (!inst.boxes.empty()) {
        json arr = json::array();
        for (const AxisBox& b : inst.boxes) {
            json jb;
            if (b.is_empty()) {
                jb["empty"] = true;
            } else {
                json lo = json::array(), hi = json::array();
                for (const Interval& iv : b.axes()) {
                    lo.push_back(rational_json(iv.lo));
                    hi.push_back(rational_json(iv.hi));
                }
                jb["lo"] = std::move(lo);
                jb["hi"] = std::move(hi);
            }
            arr.push_back(std::move(jb));
        }
        j["boxes"] = std::move(arr);
    }
    if (inst.has_hconvex()) {
        json dirs = json::array();
        for (const auto& dir : inst.directions) {
            json jd = json::array();
            for (const Rational& c : dir) jd.push_back(rational_json(c));
            dirs.push_back(std::move(jd));
        }
        json sets = json::array();
        for (const auto& bounds : inst.hconvex_bounds) {
            json jb = json::array();
            for (const auto& b : bounds) {
                if (b) {
                    jb.push_back(rational_json(*b));
                } else {
                    jb.push_back(nullptr);
                }
            }
            sets.push_back(json{{"bounds", std::move(jb)}});
        }
        j["hconvex"] = json{{"directions", std::move(dirs)}, {"sets", std::move(sets)}};
    }
    if (!inst.classes.empty()) j["classes"] = inst.classes;
    if (!inst.point_sets.empty()) {
        json arr = json::array();
        for (const PointSetEntry& e : inst.point_sets) {
            json jp;
            json pts = json::array();
            for (const RationalPoint& p : e.points.points()) pts.push_back(point_json(p));
            jp["points"] = std::move(pts);
            jp["target"] = e.target;
            if (e.points.is_multiset()) jp["multiset"] = true;
            arr.push_back(std::move(jp));
        }
        j["point_sets"] = std::move(arr);
    }
    if (inst.matroid) {
        json jm;
        switch (inst.matroid->kind) {
            case MatroidOracle::Kind::uniform:
                jm["kind"] = "uniform";
                jm["rank"] = inst.matroid->uniform_rank;
                break;
            case MatroidOracle::Kind::partition:
                jm["kind"] = "partition";
                jm["parts"] = inst.matroid->parts;
                if (!inst.matroid->capacities.empty()) {
                    jm["capacities"] = inst.matroid->capacities;
                }
                break;
            case MatroidOracle::Kind::explicit_sets:
                jm["kind"] = "explicit";
                jm["independent"] = inst.matroid->independent;
                break;
        }
        j["matroid"] = std::move(jm);
    }
    if (inst.manifest) {
        json jm;
        jm["library"] = inst.manifest->library;
        jm["operation"] = inst.manifest->operation;
        jm["seed"] = inst.manifest->seed;
        json params = json::object();
        for (const auto& [key, value] : inst.manifest->params) params[key] = value;
        jm["params"] = std::move(params);
        j["manifest"] = std::move(jm);
    }
    return j.dump(2) + "\n";
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void save_instance(const InstanceFile& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << emit_instance(inst);
}

}  // namespace dhl
