#pragma once

// Reference values for rows n = 2..10 of the even (B), odd (C) and
// signed (D) triangles, transcribed by hand. Regression anchors: the
// recurrences, the enumeration oracle and the CLI output are all held
// against these exact integers.

#include <vector>

namespace eulerian::testing {

using Rows = std::vector<std::vector<long long>>;

// golden_*()[i] is row n = i + 2.
inline const Rows& golden_b() {
  static const Rows rows = {
      {0, 1},
      {0, 2, 1},
      {1, 5, 5, 1},
      {1, 14, 30, 14, 1},
      {0, 28, 155, 147, 29, 1},
      {0, 56, 605, 1208, 586, 64, 1},
      {1, 127, 2133, 7819, 7819, 2133, 127, 1},
      {1, 262, 7288, 44074, 78190, 44074, 7288, 262, 1},
      {0, 496, 23947, 227623, 655039, 655315, 227569, 23893, 517, 1},
  };
  return rows;
}

inline const Rows& golden_c() {
  static const Rows rows = {
      {1, 0},
      {1, 2, 0},
      {0, 6, 6, 0},
      {0, 12, 36, 12, 0},
      {1, 29, 147, 155, 28, 0},
      {1, 64, 586, 1208, 605, 56, 0},
      {0, 120, 2160, 7800, 7800, 2160, 120, 0},
      {0, 240, 7320, 44160, 78000, 44160, 7320, 240, 0},
      {1, 517, 23893, 227569, 655315, 655039, 227623, 23947, 496, 0},
  };
  return rows;
}

inline const Rows& golden_d() {
  static const Rows rows = {
      {-1, 1},
      {-1, 0, 1},
      {1, -1, -1, 1},
      {1, 2, -6, 2, 1},
      {-1, -1, 8, -8, 1, 1},
      {-1, -8, 19, 0, -19, 8, 1},
      {1, 7, -27, 19, 19, -27, 7, 1},
      {1, 22, -32, -86, 190, -86, -32, 22, 1},
      {-1, -21, 54, 54, -276, 276, -54, -54, 21, 1},
  };
  return rows;
}

}  // namespace eulerian::testing
