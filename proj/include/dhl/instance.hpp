#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dhl/complex.hpp"
#include "dhl/geometry.hpp"
#include "dhl/hconvex.hpp"
#include "dhl/helly.hpp"
#include "dhl/matroid.hpp"

namespace dhl {

inline constexpr const char* kFormatTag = "dhl-1";
inline constexpr const char* kLibraryVersion = "dhl 1.0.0";

struct MatroidSpec {
    MatroidOracle::Kind kind = MatroidOracle::Kind::uniform;
    std::size_t uniform_rank = 0;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> capacities;
    std::vector<std::vector<std::size_t>> independent;

    MatroidOracle build(std::size_t ground_size) const;
    friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

/// Reproducibility record embedded in generated files.  Contains no
/// wall-clock data, so identical manifests produce byte-identical artifacts.
struct RunManifest {
    std::string library = kLibraryVersion;
    std::string operation;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;  // sorted on emit
    friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

struct PointSetEntry {
    PointSet points;
    std::size_t target = 1;
    friend bool operator==(const PointSetEntry&, const PointSetEntry&) = default;
};

/// On-disk instance ("dhl-1"): boxes or H-convex sets, optional classes
/// (a partial partition of set indices), point sets with target counts,
/// optional matroid.  All rationals travel as "a" or "a/b" strings.
struct InstanceFile {
    std::size_t dimension = 0;
    std::vector<AxisBox> boxes;
    std::vector<std::vector<Rational>> directions;  // nonempty iff H-convex payload
    std::vector<std::vector<std::optional<Rational>>> hconvex_bounds;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<PointSetEntry> point_sets;
    std::optional<MatroidSpec> matroid;
    std::optional<RunManifest> manifest;

    bool has_hconvex() const { return !directions.empty(); }
    std::vector<Target> targets() const;
    std::vector<std::vector<AxisBox>> box_classes() const;
    std::vector<HConvexSet> hconvex_sets() const;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Throws ParseError on malformed input (syntax, schema, ranges).
InstanceFile parse_instance(const std::string& json_text);
InstanceFile load_instance(const std::string& path);

/// Canonical bytes: stable key order, two-space indent, trailing newline.
std::string emit_instance(const InstanceFile& inst);
void save_instance(const InstanceFile& inst, const std::string& path);

}  // namespace dhl
