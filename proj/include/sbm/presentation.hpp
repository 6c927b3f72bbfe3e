#pragma once

#include <string>
#include <vector>

#include "sbm/word.hpp"

namespace sbm {

enum class RelationFamily { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12 };

std::string family_name(RelationFamily f);

// Names of the index parameters for a family, in the order they are stored
// in Relation::params ("i", "j", "r", "s").
std::vector<std::string> family_param_names(RelationFamily f);

// One instance of a defining relation: lhs = rhs in the monoid. Both sides
// are stored freely reduced.
struct Relation {
  RelationFamily family;
  std::vector<int> params;
  Word lhs;
  Word rhs;

  bool operator==(const Relation&) const = default;
};

struct Presentation {
  SurfaceParams params;
  std::vector<Letter> generators;  // exponent +1 descriptors
  std::vector<Relation> relations;
};

// A_{2,r} = s1^-1 (a1..a(r-1) a(r+1)^-1..a(2g)^-1) s1^-1. Needs n >= 2.
Word a2_word(int r, const SurfaceParams& p);

// a_{i,r}: the i-th strand crossing wall r. Conjugating sigmas are negative
// for odd r and positive for even r; i=1 gives the bare wall letter.
Word a_wall(int i, int r, const SurfaceParams& p);

// A word conj t_i conj^-1 equal to t_j in the monoid, with conj a product
// of sigmas. Returns the single letter t_i when i == j.
Word tau_conjugate(int i, int j, const SurfaceParams& p);

// The conjugator alone (without t_i and the inverse tail). Empty when i == j.
Word tau_conjugator(int i, int j, const SurfaceParams& p);

// R1-R6, the relations of the surface braid group. Symmetric families
// (R1, R4) are emitted for ordered index pairs, both orientations.
std::vector<Relation> build_braid_relations(const SurfaceParams& p);

// R7-R12, the singular relations. R7, R8, R10 emitted for ordered pairs.
std::vector<Relation> build_singular_relations(const SurfaceParams& p);

std::vector<Relation> all_relations(const SurfaceParams& p);

// Generator list in canonical order: sigmas, walls, taus.
std::vector<Letter> generator_list(const SurfaceParams& p);

Presentation build_presentation(const SurfaceParams& p);

// Eliminates t_2..t_(n-1): relations whose tau indices lie in {1,3} are kept
// with every t_3 replaced by tau_conjugate(1,3); the rest are dropped.
Presentation tietze_simplify(const Presentation& pres);

}  // namespace sbm
