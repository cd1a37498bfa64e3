#pragma once

#include "incidence/incidence_structure.hpp"
#include "incidence/matrix_io.hpp"

#include <string>

namespace fixtures {

// Fano plane: lines {0,1,2} {0,3,4} {0,5,6} {1,3,5} {1,4,6} {2,3,6} {2,4,5}.
inline const std::string kFanoText =
    "points=7 lines=7\n"
    "1110000\n"
    "1001100\n"
    "1000011\n"
    "0101010\n"
    "0100101\n"
    "0011001\n"
    "0010110\n";

inline incidence::IncidenceStructure fano() { return incidence::load_incidence_matrix(kFanoText); }

// Affine plane of order 2: four points, six two-point lines in three
// parallel classes.
inline incidence::IncidenceStructure affine2() {
  return incidence::load_incidence_matrix(
      "points=4 lines=6\n"
      "111000\n"
      "100110\n"
      "010101\n"
      "001011\n");
}

// Fano with line 6 replaced by a copy of line 0: points 0, 1 now share two
// lines and lines 0, 6 share three points.
inline incidence::IncidenceStructure doubled_line() {
  return incidence::load_incidence_matrix(
      "points=7 lines=7\n"
      "1110001\n"
      "1001101\n"
      "1000011\n"
      "0101010\n"
      "0100100\n"
      "0011000\n"
      "0010110\n");
}

}  // namespace fixtures
