// lifter :: minimal s-expression reader used by the corpus format

#ifndef LIFTER_SEXP_HPP_
#define LIFTER_SEXP_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lifter/error.hpp"

namespace lifter {

struct Sexp {
  enum class Kind { Symbol, String, Integer, List };

  Kind kind = Kind::List;
  std::string text;          // Symbol / String payload
  std::uint64_t integer = 0;  // Integer payload
  std::vector<Sexp> items;   // List payload
  SourcePos pos;

  bool is_list() const { return kind == Kind::List; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  // First item is the given symbol.
  bool is_form(std::string_view head) const {
    return is_list() && !items.empty() && items.front().is_symbol(head);
  }
};

// Reads every top-level form. `;` starts a comment running to end of line.
// Strings are double-quoted with `\"` and `\\` escapes.
std::vector<Sexp> read_sexps(std::string_view text);

// Exactly one top-level form.
Sexp read_sexp(std::string_view text);

}  // namespace lifter

#endif  // LIFTER_SEXP_HPP_
