// Prints overlaps that show how each encoder carries similarity.

#include <cstdio>

#include "sdrenc/sdrenc.hpp"

using namespace sdrenc;

int main() {
  const char* days[] = {"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
  CyclicEncoder week({7.0, 140, 41});
  ScalarEncoder flat({0.0, 6.0, 140, 41});

  std::printf("day-of-week overlap with Sunday (n=140, w=41)\n");
  std::printf("       cyclic  scalar\n");
  for (int d = 0; d < 7; ++d) {
    std::printf("  %s   %5zu   %5zu\n", days[d], overlap(week.encode(0), week.encode(d)), overlap(flat.encode(0), flat.encode(d)));
  }

  GeoEncoderConfig cfg;
  cfg.n = 2048;
  cfg.radius = cfg.radius_min = 4;
  cfg.radius_max = 12;
  cfg.speed_scale = 0.5;
  cfg.variant = GeoVariant::topw;
  cfg.w = 41;
  GeoEncoder geo(cfg);

  // The same 3-cell displacement looks small at speed and large when walking.
  std::printf("\ngeospatial overlap after moving 3 cells east\n");
  for (double speed : {0.0, 8.0, 16.0}) {
    const auto a = geo.encode({100, 200}, speed);
    const auto b = geo.encode({103, 200}, speed);
    std::printf("  speed %4.1f  radius %2d  overlap %2zu of %zu\n", speed, geo.radius_from_speed(speed), overlap(a, b), a.count());
  }
  return 0;
}
