#include "sbm/text_io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace sbm {

namespace {

char kind_char(LetterKind k) {
  switch (k) {
    case LetterKind::Sigma: return 's';
    case LetterKind::Wall: return 'a';
    case LetterKind::Tau: return 't';
  }
  return '?';
}

}  // namespace

std::string format_letter(const Letter& l) {
  std::string out(1, kind_char(l.kind));
  out += std::to_string(l.index);
  if (l.exponent == -1) out += "^-1";
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format_letter(w[i]);
  }
  return out;
}

Word parse_word(const std::string& text, const SurfaceParams& p) {
  Word w;
  std::size_t i = 0;
  const std::size_t len = text.size();
  while (i < len) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const char c = text[i];
    if (c == 'e') {
      ++i;
      if (i < len && !std::isspace(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character after 'e'", i);
      continue;  // empty-word token
    }
    LetterKind kind;
    if (c == 's') kind = LetterKind::Sigma;
    else if (c == 'a') kind = LetterKind::Wall;
    else if (c == 't') kind = LetterKind::Tau;
    else throw ParseError(std::string("expected generator letter, got '") + c +
                          "'", start);
    ++i;
    if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected generator index", i);
    int index = 0;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      index = index * 10 + (text[i] - '0');
      ++i;
    }
    long exponent = 1;
    if (i < len && text[i] == '^') {
      ++i;
      const std::size_t exp_start = i;
      bool negative = false;
      if (i < len && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected exponent", exp_start);
      long mag = 0;
      while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        ++i;
      }
      if (mag == 0) throw ParseError("exponent must be nonzero", exp_start);
      exponent = negative ? -mag : mag;
    }
    if (i < len && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character in token", i);
    const int unit = exponent > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exponent); ++k)
      w.push_back({kind, index, unit});
  }
  require_valid(w, p);
  return w;
}

std::string relation_label(const Relation& rel) {
  std::string out = family_name(rel.family);
  const auto names = family_param_names(rel.family);
  for (std::size_t k = 0; k < rel.params.size(); ++k) {
    out += ' ';
    out += (k < names.size() ? names[k] : "p") + "=" +
           std::to_string(rel.params[k]);
  }
  return out;
}

namespace {

nlohmann::ordered_json word_tokens(const Word& w) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Letter& l : w) arr.push_back(format_letter(l));
  return arr;
}

}  // namespace

std::string export_presentation(const Presentation& pres, ExportFormat fmt) {
  if (fmt == ExportFormat::Json) {
    nlohmann::ordered_json j;
    j["n"] = pres.params.strands;
    j["genus"] = pres.params.genus;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const Letter& g : pres.generators) gens.push_back(format_letter(g));
    j["generators"] = std::move(gens);
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const Relation& rel : pres.relations) {
      nlohmann::ordered_json r;
      r["family"] = family_name(rel.family);
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      const auto names = family_param_names(rel.family);
      for (std::size_t k = 0; k < rel.params.size(); ++k)
        params[k < names.size() ? names[k] : "p" + std::to_string(k)] =
            rel.params[k];
      r["params"] = std::move(params);
      r["lhs"] = word_tokens(rel.lhs);
      r["rhs"] = word_tokens(rel.rhs);
      rels.push_back(std::move(r));
    }
    j["relations"] = std::move(rels);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const Relation& rel : pres.relations)
    out << format_word(rel.lhs) << " = " << format_word(rel.rhs) << "  # "
        << relation_label(rel) << "\n";
  return out.str();
}

}  // namespace sbm
