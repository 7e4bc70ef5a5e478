#pragma once

// ── render.hpp ──────────────────────────────────────────────────────────────
// Matrix rendering to binary PPM (P6).
//
// Four-color mapping: zero entries are white, positive entries ramp from
// white toward pure blue and negative ones toward pure red as |delta| grows
// (clamped at 1), undefined entries are grey. Grayscale mode colors only the
// positive entries, darker for larger delta; everything else is white except
// undefined, which stays grey. Each matrix cell becomes a cell_size^2 pixel
// block. Output bytes are a pure function of matrix content and spec.
// ────────────────────────────────────────────────────────────────────────────

#include <array>
#include <cmath>
#include <string>

#include "prooflab/matrix.hpp"

namespace prooflab {

struct RenderSpec {
  int cell_size = 8;
  bool grayscale = false;
  std::array<std::uint8_t, 3> undefined_color{128, 128, 128};
};

inline void validate(const RenderSpec& s) {
  if (s.cell_size < 1) throw std::invalid_argument("cell_size must be >= 1");
}

struct Image {
  int width = 0, height = 0;
  std::vector<std::uint8_t> rgb;

  std::string ppm() const {
    std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(rgb.data()), rgb.size());
    return out;
  }
};

namespace detail {

inline std::uint8_t ramp(double magnitude) {
  double c = magnitude < 0 ? 0 : (magnitude > 1 ? 1 : magnitude);
  return static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - c)));
}

inline std::array<std::uint8_t, 3> cell_color(IncidenceClass cls, double magnitude,
                                              const RenderSpec& spec) {
  if (cls == IncidenceClass::Undefined) return spec.undefined_color;
  if (spec.grayscale) {
    if (cls == IncidenceClass::Positive) {
      std::uint8_t v = ramp(magnitude);
      return {v, v, v};
    }
    return {255, 255, 255};
  }
  switch (cls) {
    case IncidenceClass::Zero: return {255, 255, 255};
    case IncidenceClass::Positive: {
      std::uint8_t v = ramp(magnitude);
      return {v, v, 255};
    }
    case IncidenceClass::Negative: {
      std::uint8_t v = ramp(magnitude);
      return {255, v, v};
    }
    case IncidenceClass::Undefined: break;
  }
  return spec.undefined_color;
}

template <class ClassOf, class MagnitudeOf>
Image render_cells(int col_begin, int col_end, int rows, const RenderSpec& spec,
                   ClassOf&& class_of, MagnitudeOf&& magnitude_of) {
  validate(spec);
  if (col_end <= col_begin || rows <= 0) throw std::invalid_argument("empty matrix panel");
  Image img;
  img.width = (col_end - col_begin) * spec.cell_size;
  img.height = rows * spec.cell_size;
  img.rgb.resize(static_cast<std::size_t>(img.width) * img.height * 3);
  for (int row = 0; row < rows; ++row)
    for (int col = col_begin; col < col_end; ++col) {
      auto color = cell_color(class_of(col, row), magnitude_of(col, row), spec);
      for (int py = 0; py < spec.cell_size; ++py) {
        std::size_t base =
            ((static_cast<std::size_t>(row) * spec.cell_size + py) * img.width +
             static_cast<std::size_t>(col - col_begin) * spec.cell_size) * 3;
        for (int px = 0; px < spec.cell_size; ++px) {
          img.rgb[base + px * 3 + 0] = color[0];
          img.rgb[base + px * 3 + 1] = color[1];
          img.rgb[base + px * 3 + 2] = color[2];
        }
      }
    }
  return img;
}

inline double magnitude_of(const MatrixCell& cell) {
  if (!cell.defined()) return 0;
  double v = std::abs(static_cast<double>(boost::multiprecision::numerator(cell.delta)) /
                      static_cast<double>(boost::multiprecision::denominator(cell.delta)));
  return v;
}

} // namespace detail

// Delta-scaled rendering of a speed-up matrix (columns [begin, end)).
inline Image render_speedup(const SpeedupMatrix& m, const RenderSpec& spec, int col_begin,
                            int col_end) {
  return detail::render_cells(
      col_begin, col_end, m.row_count(), spec,
      [&](int c, int r) { return classify(m.at(c, r)); },
      [&](int c, int r) { return detail::magnitude_of(m.at(c, r)); });
}

inline Image render_speedup(const SpeedupMatrix& m, const RenderSpec& spec) {
  return render_speedup(m, spec, 0, m.column_count());
}

// Flat rendering of an incidence matrix: full-intensity classes.
inline Image render_incidence(const IncidenceMatrix& m, const RenderSpec& spec, int col_begin,
                              int col_end) {
  return detail::render_cells(
      col_begin, col_end, m.row_count(), spec, [&](int c, int r) { return m.at(c, r); },
      [&](int, int) { return 1.0; });
}

inline Image render_incidence(const IncidenceMatrix& m, const RenderSpec& spec) {
  return render_incidence(m, spec, 0, m.column_count());
}

// Contiguous column ranges for a k-panel split, widths within one column.
inline std::vector<std::pair<int, int>> panel_ranges(int columns, int panels) {
  if (panels < 1 || panels > columns)
    throw std::invalid_argument("panel count must lie in [1, columns]");
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < panels; ++p)
    out.emplace_back(columns * p / panels, columns * (p + 1) / panels);
  return out;
}

} // namespace prooflab
