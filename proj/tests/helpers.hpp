#pragma once

#include <random>
#include <vector>

#include "sbm/word.hpp"

namespace sbm::testhelpers {

inline std::vector<Letter> alphabet(const SurfaceParams& p,
                                    bool allow_tau = true) {
  std::vector<Letter> out;
  for (int i = 1; i <= p.strands - 1; ++i) {
    out.push_back(sigma(i));
    out.push_back(sigma(i, -1));
    if (allow_tau) out.push_back(tau(i));
  }
  for (int r = 1; r <= p.wall_count(); ++r) {
    out.push_back(wall(r));
    out.push_back(wall(r, -1));
  }
  return out;
}

inline Word random_word(std::mt19937& rng, const SurfaceParams& p,
                        std::size_t max_len, bool allow_tau = true) {
  const std::vector<Letter> letters = alphabet(p, allow_tau);
  if (letters.empty()) return {};
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w;
  const std::size_t len = len_dist(rng);
  for (std::size_t k = 0; k < len; ++k) w.push_back(letters[pick(rng)]);
  return w;
}

// Reduces by deleting cancellable pairs in random order; used as the
// independent check that free_reduce is order-independent.
inline Word random_order_reduce(Word w, std::mt19937& rng) {
  while (true) {
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (cancels(w[i], w[i + 1])) pairs.push_back(i);
    if (pairs.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    const std::size_t at = pairs[pick(rng)];
    w.erase(w.begin() + at, w.begin() + at + 2);
  }
  return w;
}

}  // namespace sbm::testhelpers
