#pragma once

#include <string>
#include <vector>

#include "weakforms/qseries.hpp"

namespace weakforms {

// M: forms holomorphic away from infinity; S: additionally vanishing at the
// cusp 0. For holomorphic bases S means cusp forms.
enum class Space { M, S };

std::string to_string(Space s);
Space parse_space(const std::string &text);

// Reduced row echelon basis of a space of holomorphic forms: element i has
// leading coefficient 1 at q^{pivots[i]} and vanishes at every other pivot.
struct EchelonBasis {
  int p = 0;
  int k = 0;
  Space space = Space::M;
  std::vector<QSeries> elements;
  std::vector<int> pivots;
  int prec_cap = 0;

  std::size_t size() const { return elements.size(); }
};

} // namespace weakforms
