#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation applied to a structurally invalid diagram.
struct invalid_diagram : error {
  using error::error;
};

/// Crossing-kind precondition violated (e.g. sign of a singular crossing).
struct wrong_kind : error {
  using error::error;
};

/// Operation restricted to spherical diagrams given a planar one.
struct wrong_surface : error {
  using error::error;
};

/// Singular closure requires diagram height exactly one.
struct height_not_one : error {
  using error::error;
};

/// chord_of_singular requires exactly one singular crossing.
struct wrong_singular_count : error {
  using error::error;
};

/// State sum would exceed the configured crossing cap.
struct state_sum_overflow : error {
  using error::error;
};

/// A move site no longer applies to the diagram it is used on.
struct stale_move : error {
  using error::error;
};

/// KTD text could not be parsed; carries a 1-based position.
struct parse_error : error {
  parse_error(const std::string& msg, int line, int column = 0)
      : error(msg + " (line " + std::to_string(line) +
              (column > 0 ? ", column " + std::to_string(column) : "") + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace knotoid
