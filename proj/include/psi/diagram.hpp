#pragma once

#include <string>

#include "psi/pattern_search.hpp"

namespace psi {

enum class DiagramFormat { Ascii, Svg };

DiagramFormat parse_diagram_format(const std::string& s);

struct DiagramSpec {
  SignPattern pattern;
  DiagramFormat format = DiagramFormat::Svg;
  /// Shade the triangle of the three contributors of each degree-(D+1)
  /// monomial; n = 3 only.
  bool show_simplices = false;
};

/// Lattice drawing of a pattern in 2 or 3 variables. POS is a thick circle
/// marked P, NEG a thin circle marked N, ZERO a dotted circle. A pattern with
/// no nonzero entry renders as the bare document header.
std::string render_diagram(const DiagramSpec& spec);

}  // namespace psi
