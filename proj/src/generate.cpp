#include "jumbled/generate.hpp"

#include <algorithm>
#include <iterator>
#include <vector>

#include "jumbled/errors.hpp"

namespace jumbled {

std::string random_text(std::size_t length, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::string s(length, 'a');
  for (char& c : s) {
    if (coin(rng)) c = 'b';
  }
  return s;
}

std::string geometric_run_text(std::size_t length, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw OutOfRangeError("run probability must lie in (0, 1]");
  std::geometric_distribution<std::size_t> run(p);
  char letter = std::bernoulli_distribution(0.5)(rng) ? 'b' : 'a';
  std::string s;
  s.reserve(length);
  while (s.size() < length) {
    const std::size_t len = std::min(run(rng) + 1, length - s.size());
    s.append(len, letter);
    letter = letter == 'a' ? 'b' : 'a';
  }
  return s;
}

std::string text_with_runs(std::size_t length, std::size_t runs, Rng& rng) {
  if (runs == 0 || runs > length) {
    throw OutOfRangeError("run count must lie in [1, length]");
  }
  // Choose runs-1 distinct cut points among the length-1 gaps.
  std::vector<std::size_t> gaps(length - 1);
  for (std::size_t i = 0; i < gaps.size(); ++i) gaps[i] = i + 1;
  std::vector<std::size_t> cuts;
  cuts.reserve(runs + 1);
  std::sample(gaps.begin(), gaps.end(), std::back_inserter(cuts), runs - 1, rng);
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(length);

  char letter = std::bernoulli_distribution(0.5)(rng) ? 'b' : 'a';
  std::string s;
  s.reserve(length);
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    s.append(cuts[i] - cuts[i - 1], letter);
    letter = letter == 'a' ? 'b' : 'a';
  }
  return s;
}

}  // namespace jumbled
