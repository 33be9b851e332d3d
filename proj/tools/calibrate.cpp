// Prints the calibration values stored in include/nevmaj/constants.hpp.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "nevmaj/blaschke.hpp"
#include "nevmaj/harmonic.hpp"
#include "nevmaj/hypgeo.hpp"
#include "nevmaj/calibration.hpp"

using namespace nevmaj;

int main() {
    const auto hq = calibrate_hq(12, 200);
    std::printf("h_Q calibration (levels 1..12, 200 samples per square)\n");
    for (const auto& row : hq.levels)
        std::printf("  level %2d  min h_Q on Q = %.6f  max h_Q (1-|z|)/l = %.6f\n", row.level, row.min_inside,
                    row.max_scaled);
    std::printf("  c = %.6f (lower %.6f, upper %.6f)\n", hq.c, hq.c_lower, hq.c_upper);

    const double l1 = calibrate_lemma1(20, 12, 2024);
    std::printf("Lemma 1 at rho >= 1/2: sup -log|B| / H_Lambda = %.6f\n", l1);

    const auto nb = calibrate_neighbors();
    std::printf("neighbor cells meeting D(z,1/2): %d, Harnack factor to their centers: %.6f\n", nb.count, nb.harnack);
    std::printf("Whitney pseudo-diameter %.6f, gamma %.6f\n", whitney_diameter_bound(), whitney_gamma());
    return 0;
}
