#pragma once

#include <string>
#include <vector>

#include "sbm/presentation.hpp"
#include "sbm/word.hpp"

namespace sbm {

struct ParseError : SbmError {
  ParseError(const std::string& what, std::size_t pos)
      : SbmError(what), position(pos) {}
  std::size_t position;  // character offset in the input text
};

// Grammar: whitespace-separated tokens; token := ("s"|"a"|"t") index
// ["^" exponent]. Omitted exponent means +1; magnitudes > 1 expand into
// repeated unit letters. "e" alone denotes the empty word.
Word parse_word(const std::string& text, const SurfaceParams& p);

// Canonical text: one token per letter, "^-1" exactly for exponent -1,
// "e" for the empty word.
std::string format_word(const Word& w);

std::string format_letter(const Letter& l);

enum class ExportFormat { Json, Text };

// Json: {"n", "genus", "generators", "relations"} with fixed field order,
// byte-stable across runs. Text: one "lhs = rhs  # family params" line per
// relation.
std::string export_presentation(const Presentation& pres, ExportFormat fmt);

// "R9 i=1" style label used in the text export and trace printing.
std::string relation_label(const Relation& rel);

}  // namespace sbm
