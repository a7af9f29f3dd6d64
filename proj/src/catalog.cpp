#include "connkit/catalog.hpp"

#include <array>
#include <cstring>

namespace connkit {

namespace {

constexpr const char* kFlat2d = R"cfg(# Flat plane: every coefficient vanishes, so each verification suite is
# exact and the torsion and curvature objects are identically zero.
[chart]
dim = 2
coords = ["x1", "x2"]
lo = [0.5, 0.5]
hi = [3.0, 3.0]

[connection]

[run]
samples = 100
seed = 7
)cfg";

constexpr const char* kSphereLc = R"cfg(# Unit sphere in polar coordinates (th, ph): coefficients of the round
# metric diag(1, sin(th)^2).  Symmetric and curved, so the cyclic and
# differential curvature identities are exercised nontrivially.
[chart]
dim = 2
coords = ["th", "ph"]
lo = [0.3, 0.1]
hi = [2.8, 6.2]

[connection]
"G^1_22" = "-sin(th)*cos(th)"
"G^2_12" = "cos(th)/sin(th)"
"G^2_21" = "cos(th)/sin(th)"

[run]
samples = 100
seed = 7
)cfg";

constexpr const char* kRelativeWeitzenbock = R"cfg(# Frame-parallel structure of the frame b1 = d1, b2 = x1 d2: flat but
# torsionful.  The symmetry probe is expected to report asymmetry, and the
# cyclic and differential identities are downgraded to informational.
[chart]
dim = 2
coords = ["x1", "x2"]
lo = [0.5, 0.5]
hi = [3.0, 3.0]

[frame]
matrix = [
  ["1", "0"],
  ["0", "x1"],
]

[connection]
relative = true

[run]
samples = 100
seed = 7
expected_asymmetric = true
)cfg";

constexpr std::array<FixtureEntry, 3> kCatalog = {{
    {"flat2d", "flat plane, all coefficients zero", kFlat2d},
    {"sphere_lc", "unit sphere, round-metric coefficients", kSphereLc},
    {"relative_weitzenbock", "frame-parallel structure of {d1, x1 d2}", kRelativeWeitzenbock},
}};

}  // namespace

std::span<const FixtureEntry> fixture_catalog() { return kCatalog; }

const FixtureEntry* find_fixture(const char* name) {
  for (const FixtureEntry& e : kCatalog)
    if (std::strcmp(e.name, name) == 0) return &e;
  return nullptr;
}

}  // namespace connkit
