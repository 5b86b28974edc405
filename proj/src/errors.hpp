#ifndef DOMINOTILE_ERRORS_HPP
#define DOMINOTILE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dt {

// Input text could not be parsed. line/col are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("parse error at line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

// A computation guard was exceeded (profile width, cell-count caps).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A reduction or certificate was requested on a corner that does not satisfy
// the required hypotheses.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A geometric query names cells the region does not contain.
class NotApplicableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dt

#endif
