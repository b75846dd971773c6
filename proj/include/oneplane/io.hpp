#pragma once

// Line-oriented interchange format for drawings, plus DOT export of the
// planarization.  The grammar is strict: fixed directive order, single
// spaces, LF endings, and ids numbered consecutively from zero.

#include <string>

#include "oneplane/drawing.hpp"

namespace oneplane {

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Throws FormatError for grammar problems and DrawingError for structural ones.
Drawing parse_drawing(const std::string& text);

std::string serialize_drawing(const Drawing& d);

std::string to_dot(const Drawing& d);

}  // namespace oneplane
