#include "psi/diagram.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "psi/error.hpp"

namespace psi {

namespace {

constexpr double kSpacing = 40.0;
constexpr double kMargin = 30.0;
constexpr double kRadius = 12.0;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::round(v * 100.0) / 100.0 + 0.0);
  return buf;
}

struct Point {
  double x;
  double y;
};

// x1^D at the top, x2^D bottom left, x3^D bottom right (n = 3); a row for n = 2.
Point place(const MultiIndex& alpha, int D) {
  if (alpha.size() == 2) return {kMargin + kSpacing * alpha[1], kMargin};
  const double h = kSpacing * std::sqrt(3.0) / 2.0;
  return {kMargin + kSpacing * (alpha[2] + 0.5 * alpha[0]), kMargin + h * (D - alpha[0])};
}

void check_dimension(const SignPattern& p) {
  if (p.nvars() != 2 && p.nvars() != 3) {
    throw Error(ErrorCode::UnsupportedDimension,
                "diagrams exist for 2 or 3 variables, got " + std::to_string(p.nvars()));
  }
}

std::string render_svg(const DiagramSpec& spec) {
  const auto& p = spec.pattern;
  const int D = p.degree();
  const double width = 2 * kMargin + kSpacing * D;
  const double height = p.nvars() == 2 ? 2 * kMargin : 2 * kMargin + kSpacing * std::sqrt(3.0) / 2.0 * D;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width) << "\" height=\"" << fixed2(height)
      << "\" viewBox=\"0 0 " << fixed2(width) << ' ' << fixed2(height) << "\">\n";
  if (p.support().empty()) {
    out << "</svg>\n";
    return out.str();
  }
  if (spec.show_simplices) {
    for (const auto& A : monomials_of_degree(3, D + 1)) {
      if (A[0] == 0 || A[1] == 0 || A[2] == 0) continue;
      out << "<polygon class=\"simplex\" fill=\"#d0d0d0\" stroke=\"none\" points=\"";
      for (std::size_t k = 0; k < 3; ++k) {
        const Point q = place(A - MultiIndex::unit(3, k), D);
        out << (k ? " " : "") << fixed2(q.x) << ',' << fixed2(q.y);
      }
      out << "\"/>\n";
    }
  }
  for (auto it = p.signs().rbegin(); it != p.signs().rend(); ++it) {
    const Point q = place(it->first, D);
    const std::string cx = fixed2(q.x);
    const std::string cy = fixed2(q.y);
    out << "<circle class=\"node ";
    switch (it->second) {
      case Sign::Pos: out << "pos\" stroke-width=\"3\""; break;
      case Sign::Neg: out << "neg\" stroke-width=\"1\""; break;
      case Sign::Zero: out << "zero\" stroke-width=\"1\" stroke-dasharray=\"2,2\""; break;
    }
    out << " cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << fixed2(kRadius)
        << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (it->second != Sign::Zero) {
      out << "<text x=\"" << cx << "\" y=\"" << fixed2(q.y + 4.0)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
          << (it->second == Sign::Pos ? 'P' : 'N') << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

char glyph(Sign s) { return s == Sign::Pos ? 'P' : (s == Sign::Neg ? 'N' : '.'); }

std::string render_ascii(const DiagramSpec& spec) {
  const auto& p = spec.pattern;
  const int D = p.degree();
  std::ostringstream out;
  out << "n=" << p.nvars() << " D=" << D << '\n';
  if (p.support().empty()) return out.str();
  if (p.nvars() == 2) {
    for (int j = 0; j <= D; ++j) out << (j ? " " : "") << glyph(p.sign(MultiIndex{D - j, j}));
    out << '\n';
    return out.str();
  }
  for (int a = D; a >= 0; --a) {
    out << std::string(static_cast<std::size_t>(a), ' ');
    for (int c = 0; c <= D - a; ++c) out << (c ? " " : "") << glyph(p.sign(MultiIndex{a, D - a - c, c}));
    out << '\n';
  }
  return out.str();
}

}  // namespace

DiagramFormat parse_diagram_format(const std::string& s) {
  if (s == "svg") return DiagramFormat::Svg;
  if (s == "ascii") return DiagramFormat::Ascii;
  throw Error(ErrorCode::InvalidArgument, "unknown diagram format '" + s + "'");
}

std::string render_diagram(const DiagramSpec& spec) {
  check_dimension(spec.pattern);
  if (spec.show_simplices && spec.pattern.nvars() != 3) {
    throw Error(ErrorCode::InvalidArgument, "simplices are drawn for 3 variables only");
  }
  return spec.format == DiagramFormat::Svg ? render_svg(spec) : render_ascii(spec);
}

}  // namespace psi
