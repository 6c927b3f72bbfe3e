#include "sbm/rewrite.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace sbm {

SearchBudget default_budget(const Word& u, const Word& v) {
  return SearchBudget{u.size() + v.size() + 8, 100000};
}

namespace {

bool occurs_at(const Word& w, std::size_t pos, const Word& pattern) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

}  // namespace

std::vector<RewriteStep> find_applications(const Word& w,
                                           const std::vector<Relation>& rels) {
  std::vector<RewriteStep> out;
  for (std::size_t pos = 0; pos <= w.size(); ++pos) {
    for (int ri = 0; ri < static_cast<int>(rels.size()); ++ri) {
      // An empty relation side (R3 on the sphere) matches nowhere; only the
      // nonempty side can be rewritten.
      if (!rels[ri].lhs.empty() && occurs_at(w, pos, rels[ri].lhs))
        out.push_back({StepKind::RelationApply, pos, ri, true, {}});
      if (!rels[ri].rhs.empty() && occurs_at(w, pos, rels[ri].rhs))
        out.push_back({StepKind::RelationApply, pos, ri, false, {}});
    }
    if (pos + 1 < w.size() && cancels(w[pos], w[pos + 1]))
      out.push_back({StepKind::FreeCancel, pos, -1, true, w[pos]});
  }
  return out;
}

Word apply_step(const Word& w, const RewriteStep& s,
                const std::vector<Relation>& rels) {
  switch (s.kind) {
    case StepKind::RelationApply: {
      if (s.relation_index < 0 ||
          s.relation_index >= static_cast<int>(rels.size()))
        throw NotApplicableError("relation index out of range");
      const Relation& rel = rels[s.relation_index];
      const Word& src = s.forward ? rel.lhs : rel.rhs;
      const Word& dst = s.forward ? rel.rhs : rel.lhs;
      if (!occurs_at(w, s.position, src))
        throw NotApplicableError("relation side does not occur at position " +
                                 std::to_string(s.position));
      Word out(w.begin(), w.begin() + s.position);
      out.insert(out.end(), dst.begin(), dst.end());
      out.insert(out.end(), w.begin() + s.position + src.size(), w.end());
      return out;
    }
    case StepKind::FreeCancel: {
      if (s.position + 1 >= w.size() || !cancels(w[s.position], w[s.position + 1]))
        throw NotApplicableError("no inverse pair at position " +
                                 std::to_string(s.position));
      Word out(w.begin(), w.begin() + s.position);
      out.insert(out.end(), w.begin() + s.position + 2, w.end());
      return out;
    }
    case StepKind::PairInsert: {
      if (s.letter.kind == LetterKind::Tau)
        throw NotApplicableError("cannot insert a tau pair");
      if (s.position > w.size())
        throw NotApplicableError("insert position past end of word");
      Word out(w.begin(), w.begin() + s.position);
      out.push_back(s.letter);
      out.push_back({s.letter.kind, s.letter.index, -s.letter.exponent});
      out.insert(out.end(), w.begin() + s.position, w.end());
      return out;
    }
  }
  throw NotApplicableError("unknown step kind");
}

Word replay(const ProofTrace& t, const std::vector<Relation>& rels) {
  Word w = t.start;
  for (const RewriteStep& s : t.steps) w = apply_step(w, s, rels);
  return w;
}

std::pair<Word, Word> cancel_common_prefix(const Word& u, const Word& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[k] == v[k]) ++k;
  return {Word(u.begin() + k, u.end()), Word(v.begin() + k, v.end())};
}

namespace {

// Leftmost-pair reduction with a log of the performed cancellations, so the
// whole reduction can be replayed (and inverted) as explicit steps.
std::pair<Word, std::vector<RewriteStep>> reduce_with_log(Word w) {
  std::vector<RewriteStep> log;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
      if (cancels(w[pos], w[pos + 1])) {
        log.push_back({StepKind::FreeCancel, pos, -1, true, w[pos]});
        w.erase(w.begin() + pos, w.begin() + pos + 2);
        changed = true;
        break;
      }
    }
  }
  return {std::move(w), std::move(log)};
}

RewriteStep invert_step(const RewriteStep& s) {
  switch (s.kind) {
    case StepKind::RelationApply:
      return {StepKind::RelationApply, s.position, s.relation_index,
              !s.forward, {}};
    case StepKind::FreeCancel:
      return {StepKind::PairInsert, s.position, -1, true, s.letter};
    case StepKind::PairInsert:
      return {StepKind::FreeCancel, s.position, -1, true, s.letter};
  }
  return s;
}

std::vector<RewriteStep> invert_steps(const std::vector<RewriteStep>& steps) {
  std::vector<RewriteStep> out;
  out.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    out.push_back(invert_step(*it));
  return out;
}

std::string word_key(const Word& w) {
  std::string k;
  k.reserve(w.size() * 3);
  for (const Letter& l : w) {
    k.push_back(static_cast<char>(static_cast<int>(l.kind) * 2 +
                                  (l.exponent < 0 ? 1 : 0)));
    k.push_back(static_cast<char>(l.index & 0xff));
    k.push_back(static_cast<char>((l.index >> 8) & 0xff));
  }
  return k;
}

struct Successor {
  Word word;
  std::vector<RewriteStep> micro;  // literal steps from the parent word
};

// One search frontier. Nodes are stored with parent links and the literal
// step sequence taken from the parent.
struct Side {
  std::vector<Word> words;
  std::vector<int> parent;
  std::vector<std::vector<RewriteStep>> steps;
  std::unordered_map<std::string, int> index;
  std::size_t next = 0;

  void add_root(const Word& w) {
    words.push_back(w);
    parent.push_back(-1);
    steps.push_back({});
    index.emplace(word_key(w), 0);
  }

  bool can_expand() const { return next < words.size(); }

  std::vector<RewriteStep> path_steps(int node) const {
    std::vector<int> chain;
    for (int k = node; k >= 0; k = parent[k]) chain.push_back(k);
    std::vector<RewriteStep> out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
      out.insert(out.end(), steps[*it].begin(), steps[*it].end());
    return out;
  }
};

std::vector<Letter> insertable_letters(const SurfaceParams& p) {
  std::vector<Letter> out;
  for (int i = 1; i <= p.strands - 1; ++i) {
    out.push_back(sigma(i));
    out.push_back(sigma(i, -1));
  }
  for (int r = 1; r <= p.wall_count(); ++r) {
    out.push_back(wall(r));
    out.push_back(wall(r, -1));
  }
  return out;
}

std::vector<Successor> successors(const Word& w,
                                  const std::vector<Relation>& rels,
                                  const std::vector<Letter>& inserts,
                                  std::size_t max_len) {
  std::vector<Successor> out;
  for (const RewriteStep& s : find_applications(w, rels)) {
    if (s.kind != StepKind::RelationApply) continue;
    Word y = apply_step(w, s, rels);
    auto [reduced, log] = reduce_with_log(std::move(y));
    if (reduced.size() > max_len) continue;
    std::vector<RewriteStep> micro;
    micro.push_back(s);
    micro.insert(micro.end(), log.begin(), log.end());
    out.push_back({std::move(reduced), std::move(micro)});
  }
  if (w.size() + 2 <= max_len) {
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      for (const Letter& l : inserts) {
        RewriteStep s{StepKind::PairInsert, pos, -1, true, l};
        out.push_back({apply_step(w, s, rels), {s}});
      }
    }
  }
  return out;
}

}  // namespace

EquivResult equiv_search(const Word& u, const Word& v, const SurfaceParams& p,
                         const SearchBudget& b,
                         const std::vector<Relation>& rels) {
  require_valid(u, p);
  require_valid(v, p);

  EquivResult result;
  if (auto witness = distinguish(u, v, p)) {
    result.verdict = Verdict::DistinctByInvariant;
    result.witness = witness;
    return result;
  }

  const Word u0 = free_reduce(u);
  const Word v0 = free_reduce(v);
  if (u0 == v0) {
    result.verdict = Verdict::Equivalent;
    result.trace = ProofTrace{u0, {}, v0};
    return result;
  }

  const std::vector<Letter> inserts = insertable_letters(p);
  Side fwd, bwd;
  fwd.add_root(u0);
  bwd.add_root(v0);

  auto finish = [&](bool from_fwd, int expand_node,
                    const std::vector<RewriteStep>& micro,
                    int other_node) -> EquivResult {
    Side& self = from_fwd ? fwd : bwd;
    Side& other = from_fwd ? bwd : fwd;
    std::vector<RewriteStep> own = self.path_steps(expand_node);
    own.insert(own.end(), micro.begin(), micro.end());
    std::vector<RewriteStep> back = other.path_steps(other_node);
    std::vector<RewriteStep> steps;
    if (from_fwd) {
      steps = std::move(own);
      std::vector<RewriteStep> tail = invert_steps(back);
      steps.insert(steps.end(), tail.begin(), tail.end());
    } else {
      steps = std::move(back);
      std::vector<RewriteStep> tail = invert_steps(own);
      steps.insert(steps.end(), tail.begin(), tail.end());
    }
    EquivResult r;
    r.verdict = Verdict::Equivalent;
    r.trace = ProofTrace{u0, std::move(steps), v0};
    return r;
  };

  while (fwd.can_expand() || bwd.can_expand()) {
    for (bool is_fwd : {true, false}) {
      Side& self = is_fwd ? fwd : bwd;
      Side& other = is_fwd ? bwd : fwd;
      if (!self.can_expand()) continue;
      const int node = static_cast<int>(self.next++);
      // Copy: successors() may reallocate self.words.
      const Word w = self.words[node];
      for (Successor& s : successors(w, rels, inserts, b.max_word_length)) {
        const std::string key = word_key(s.word);
        auto hit = other.index.find(key);
        if (hit != other.index.end())
          return finish(is_fwd, node, s.micro, hit->second);
        if (self.index.count(key)) continue;
        if (self.words.size() >= b.max_nodes) continue;
        self.index.emplace(key, static_cast<int>(self.words.size()));
        self.words.push_back(std::move(s.word));
        self.parent.push_back(node);
        self.steps.push_back(std::move(s.micro));
      }
    }
  }
  return result;  // Unknown
}

EquivResult equiv_search(const Word& u, const Word& v, const SurfaceParams& p,
                         const SearchBudget& b) {
  return equiv_search(u, v, p, b, all_relations(p));
}

}  // namespace sbm
