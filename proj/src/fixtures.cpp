#include "gkz/fixtures.hpp"

#include "gkz/errors.hpp"

namespace gkz::fixtures {

IntMatrix matrix(const std::string& name) {
    if (name == "8isoms") return IntMatrix{{1, 1, 0}, {0, 1, 2}};
    if (name == "111-012") return IntMatrix{{1, 1, 1}, {0, 1, 2}};
    if (name == "five-col") return IntMatrix{{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 0, 1, 1, 2}};
    // lattice points of the cone {3x-2y >= 0, x+2y >= 0} irreducible under addition
    if (name == "zzd") return IntMatrix{{2, 1, 1, 2}, {-1, 0, 1, 3}};
    throw Error("unknown example '" + name + "'");
}

std::vector<std::string> names() { return {"8isoms", "111-012", "five-col", "zzd"}; }

} // namespace gkz::fixtures
