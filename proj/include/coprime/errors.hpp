#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coprime {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group construction ran past the element cap.
struct limit_exceeded : error {
  using error::error;
};

// Generators defined on different point counts.
struct degree_mismatch : error {
  using error::error;
};

// Bad numeric parameter to a group family constructor.
struct invalid_parameter : error {
  using error::error;
};

// A prescribed generator action failed automorphism verification.
struct not_an_automorphism : error {
  using error::error;
};

// Coset enumeration exceeded its coset budget.
struct table_overflow : error {
  using error::error;
};

// Graph query that needs |G| >= 2 (or >= 3) asked of a smaller group.
struct degenerate_group : error {
  using error::error;
};

// Malformed presentation or spec text; position is a 0-based byte offset.
struct syntax_error : error {
  size_t position;
  syntax_error(const std::string& msg, size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A word used a symbol missing from the declared generator list.
struct undeclared_generator : syntax_error {
  undeclared_generator(const std::string& symbol, size_t pos)
      : syntax_error("undeclared generator '" + symbol + "'", pos) {}
};

// Catalog file problem; line is 1-based.
struct catalog_parse_error : error {
  size_t line;
  catalog_parse_error(const std::string& msg, size_t line_no)
      : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

struct duplicate_label : catalog_parse_error {
  duplicate_label(const std::string& label, size_t line_no)
      : catalog_parse_error("duplicate label '" + label + "'", line_no) {}
};

}  // namespace coprime
