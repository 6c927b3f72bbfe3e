#include "sbm/presentation.hpp"

#include <cstdlib>
#include <set>

namespace sbm {

std::string family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::R1: return "R1";
    case RelationFamily::R2: return "R2";
    case RelationFamily::R3: return "R3";
    case RelationFamily::R4: return "R4";
    case RelationFamily::R5: return "R5";
    case RelationFamily::R6: return "R6";
    case RelationFamily::R7: return "R7";
    case RelationFamily::R8: return "R8";
    case RelationFamily::R9: return "R9";
    case RelationFamily::R10: return "R10";
    case RelationFamily::R11: return "R11";
    case RelationFamily::R12: return "R12";
  }
  return "?";
}

std::vector<std::string> family_param_names(RelationFamily f) {
  switch (f) {
    case RelationFamily::R1: return {"i", "j"};
    case RelationFamily::R2: return {"i"};
    case RelationFamily::R3: return {};
    case RelationFamily::R4: return {"r", "s"};
    case RelationFamily::R5: return {"r"};
    case RelationFamily::R6: return {"r", "i"};
    case RelationFamily::R7: return {"i", "j"};
    case RelationFamily::R8: return {"i", "j"};
    case RelationFamily::R9: return {"i"};
    case RelationFamily::R10: return {"i", "j"};
    case RelationFamily::R11: return {"i", "r"};
    case RelationFamily::R12: return {"i", "j", "r"};
  }
  return {};
}

Word a2_word(int r, const SurfaceParams& p) {
  if (r < 1 || r > p.wall_count() || p.strands < 2)
    throw IndexOutOfRangeError("a2_word: wall index " + std::to_string(r) +
                               " out of range");
  Word w;
  w.push_back(sigma(1, -1));
  for (int k = 1; k <= r - 1; ++k) w.push_back(wall(k));
  for (int k = r + 1; k <= p.wall_count(); ++k) w.push_back(wall(k, -1));
  w.push_back(sigma(1, -1));
  return w;
}

Word a_wall(int i, int r, const SurfaceParams& p) {
  if (i < 1 || i > p.strands || r < 1 || r > p.wall_count())
    throw IndexOutOfRangeError("a_wall: index out of range");
  const int exp = (r % 2 == 1) ? -1 : 1;
  Word w;
  for (int k = i - 1; k >= 1; --k) w.push_back(sigma(k, exp));
  w.push_back(wall(r));
  for (int k = 1; k <= i - 1; ++k) w.push_back(sigma(k, exp));
  return w;
}

Word tau_conjugator(int i, int j, const SurfaceParams& p) {
  const int n = p.strands;
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw IndexOutOfRangeError("tau_conjugate: strand index out of range");
  Word conj;
  if (i < j) {
    for (int k = j - 1; k >= i; --k) conj.push_back(sigma(k));
    for (int k = j; k >= i + 1; --k) conj.push_back(sigma(k));
  } else if (i > j) {
    for (int k = j + 1; k <= i; ++k) conj.push_back(sigma(k));
    for (int k = j; k <= i - 1; ++k) conj.push_back(sigma(k));
  }
  return conj;
}

Word tau_conjugate(int i, int j, const SurfaceParams& p) {
  Word conj = tau_conjugator(i, j, p);
  Word w = conj;
  w.push_back(tau(i));
  Word tail = invert(conj);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

namespace {

Word reduced(Word w) { return free_reduce(std::move(w)); }

void emit(std::vector<Relation>& out, RelationFamily f, std::vector<int> params,
          Word lhs, Word rhs) {
  out.push_back(Relation{f, std::move(params), reduced(std::move(lhs)),
                         reduced(std::move(rhs))});
}

}  // namespace

std::vector<Relation> build_braid_relations(const SurfaceParams& p) {
  const int n = p.strands;
  const int walls = p.wall_count();
  std::vector<Relation> out;

  // R1: si sj = sj si, |i-j| >= 2, both orientations.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        emit(out, RelationFamily::R1, {i, j}, {sigma(i), sigma(j)},
             {sigma(j), sigma(i)});

  // R2: si s(i+1) si = s(i+1) si s(i+1).
  for (int i = 1; i <= n - 2; ++i)
    emit(out, RelationFamily::R2, {i},
         {sigma(i), sigma(i + 1), sigma(i)},
         {sigma(i + 1), sigma(i), sigma(i + 1)});

  // R3: a1..a(2g) a1^-1..a(2g)^-1 = s1..s(n-2) s(n-1)^2 s(n-2)..s1.
  // Empty products over empty index ranges; one instance always.
  {
    Word lhs, rhs;
    for (int r = 1; r <= walls; ++r) lhs.push_back(wall(r));
    for (int r = 1; r <= walls; ++r) lhs.push_back(wall(r, -1));
    for (int k = 1; k <= n - 2; ++k) rhs.push_back(sigma(k));
    if (n >= 2) {
      rhs.push_back(sigma(n - 1));
      rhs.push_back(sigma(n - 1));
    }
    for (int k = n - 2; k >= 1; --k) rhs.push_back(sigma(k));
    emit(out, RelationFamily::R3, {}, std::move(lhs), std::move(rhs));
  }

  if (n >= 2) {
    // R4: ar A2s = A2s ar, r != s, both orientations.
    for (int r = 1; r <= walls; ++r)
      for (int s = 1; s <= walls; ++s)
        if (r != s) {
          Word a2 = a2_word(s, p);
          emit(out, RelationFamily::R4, {r, s}, concat({wall(r)}, a2),
               concat(a2, {wall(r)}));
        }

    // R5: (a1..ar) A2r = s1^2 A2r (a1..ar).
    for (int r = 1; r <= walls; ++r) {
      Word prefix;
      for (int k = 1; k <= r; ++k) prefix.push_back(wall(k));
      Word a2 = a2_word(r, p);
      Word rhs{sigma(1), sigma(1)};
      rhs = concat(rhs, a2);
      rhs = concat(rhs, prefix);
      emit(out, RelationFamily::R5, {r}, concat(prefix, a2), std::move(rhs));
    }
  }

  // R6: ar si = si ar, i >= 2.
  for (int r = 1; r <= walls; ++r)
    for (int i = 2; i <= n - 1; ++i)
      emit(out, RelationFamily::R6, {r, i}, {wall(r), sigma(i)},
           {sigma(i), wall(r)});

  return out;
}

std::vector<Relation> build_singular_relations(const SurfaceParams& p) {
  const int n = p.strands;
  const int walls = p.wall_count();
  std::vector<Relation> out;

  // R7: si tj = tj si, |i-j| >= 2.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        emit(out, RelationFamily::R7, {i, j}, {sigma(i), tau(j)},
             {tau(j), sigma(i)});

  // R8: ti tj = tj ti, |i-j| >= 2, both orientations.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        emit(out, RelationFamily::R8, {i, j}, {tau(i), tau(j)},
             {tau(j), tau(i)});

  // R9: si ti = ti si.
  for (int i = 1; i <= n - 1; ++i)
    emit(out, RelationFamily::R9, {i}, {sigma(i), tau(i)},
         {tau(i), sigma(i)});

  // R10: si sj ti = tj si sj, |i-j| = 1, both orientations.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) == 1)
        emit(out, RelationFamily::R10, {i, j},
             {sigma(i), sigma(j), tau(i)}, {tau(j), sigma(i), sigma(j)});

  // R11: (a_{i,r} a_{i+1,r}) ti (a_{i+1,r}^-1 a_{i,r}^-1) = ti.
  for (int i = 1; i <= n - 1; ++i)
    for (int r = 1; r <= walls; ++r) {
      Word air = a_wall(i, r, p);
      Word anext = a_wall(i + 1, r, p);
      Word lhs = concat(air, anext);
      lhs.push_back(tau(i));
      lhs = concat(lhs, invert(anext));
      lhs = concat(lhs, invert(air));
      emit(out, RelationFamily::R11, {i, r}, std::move(lhs), {tau(i)});
    }

  // R12: ti a_{j,r} = a_{j,r} ti, j not in {i, i+1}.
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      for (int r = 1; r <= walls; ++r) {
        Word ajr = a_wall(j, r, p);
        emit(out, RelationFamily::R12, {i, j, r}, concat({tau(i)}, ajr),
             concat(ajr, {tau(i)}));
      }
    }

  return out;
}

std::vector<Relation> all_relations(const SurfaceParams& p) {
  std::vector<Relation> out = build_braid_relations(p);
  std::vector<Relation> sing = build_singular_relations(p);
  out.insert(out.end(), sing.begin(), sing.end());
  return out;
}

std::vector<Letter> generator_list(const SurfaceParams& p) {
  std::vector<Letter> gens;
  for (int i = 1; i <= p.strands - 1; ++i) gens.push_back(sigma(i));
  for (int r = 1; r <= p.wall_count(); ++r) gens.push_back(wall(r));
  for (int i = 1; i <= p.strands - 1; ++i) gens.push_back(tau(i));
  return gens;
}

Presentation build_presentation(const SurfaceParams& p) {
  return Presentation{p, generator_list(p), all_relations(p)};
}

namespace {

std::set<int> tau_indices(const Relation& rel) {
  std::set<int> idx;
  for (const Word* side : {&rel.lhs, &rel.rhs})
    for (const Letter& l : *side)
      if (l.kind == LetterKind::Tau) idx.insert(l.index);
  return idx;
}

Word substitute_tau3(const Word& w, const Word& replacement) {
  Word out;
  for (const Letter& l : w) {
    if (l.kind == LetterKind::Tau && l.index == 3)
      out = concat(out, replacement);
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Presentation tietze_simplify(const Presentation& pres) {
  const int n = pres.params.strands;
  Presentation out;
  out.params = pres.params;

  for (const Letter& g : pres.generators)
    if (!(g.kind == LetterKind::Tau && g.index >= 2 && g.index <= n - 1))
      out.generators.push_back(g);

  const bool have_tau3 = n >= 4;
  Word repl;
  if (have_tau3) repl = tau_conjugate(1, 3, pres.params);

  for (const Relation& rel : pres.relations) {
    std::set<int> idx = tau_indices(rel);
    bool keep = true;
    for (int i : idx)
      if (i != 1 && i != 3) keep = false;
    if (!keep) continue;
    Relation r = rel;
    if (idx.count(3)) {
      r.lhs = free_reduce(substitute_tau3(rel.lhs, repl));
      r.rhs = free_reduce(substitute_tau3(rel.rhs, repl));
    }
    out.relations.push_back(std::move(r));
  }
  return out;
}

}  // namespace sbm
