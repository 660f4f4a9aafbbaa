#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Structure text format. UTF-8, '#' starts a comment, tokens are
// whitespace-separated:
//
//   structure <ident>
//   elements <tok> <tok> ...
//   op <ident> arity <1|2|3>
//   <table rows>
//   const <ident> = <tok>
//   end
//
// arity 1: one row of n tokens. arity 2: n rows of n tokens, row = first
// argument, column = second. arity 3: n blocks separated by a blank line;
// block = first argument, row within block = second, column = third.
// A file may hold several structures.
std::vector<Structure> parse_structures(std::string_view text);

// Canonical rendering: fields in fixed order, ops and constants sorted by
// name, single spaces, one blank line between arity-3 blocks and between
// structures. parse(serialize(s)) == s, and serialize is idempotent on its
// own output.
std::string serialize(const Structure& s);
std::string serialize(std::span<const Structure> structures);

// Resolves "file.alg#name" style selectors against a parsed file. The
// fragment is optional when the file holds a single structure.
const Structure& select_structure(const std::vector<Structure>& parsed,
                                  std::string_view fragment,
                                  std::string_view origin);

}  // namespace finalg
