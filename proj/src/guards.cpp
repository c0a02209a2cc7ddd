#include "dhl/guards.hpp"

#include <cstdlib>
#include <string>

namespace dhl {

namespace {

template <typename T>
void read_env(const char* name, T& slot) {
    if (const char* raw = std::getenv(name)) {
        slot = static_cast<T>(std::stoull(raw));
    }
}

}  // namespace

Guards Guards::from_env() {
    Guards g;
    read_env("DHL_GUARD_TUPLES", g.tuple_enum_max);
    read_env("DHL_GUARD_FACES", g.face_enum_max);
    read_env("DHL_GUARD_LERAY_VERTICES", g.leray_vertex_max);
    read_env("DHL_GUARD_PIERCE_EXACT", g.pierce_exact_max);
    read_env("DHL_GUARD_MATROID_GROUND", g.matroid_ground_max);
    read_env("DHL_GUARD_NERVE_VERTICES", g.nerve_vertex_max);
    return g;
}

}  // namespace dhl
