// corpus.hpp
//
// Deterministic stream of small randomly drawn bound quiver algebras that
// are standardly stratified for a randomly drawn partial order. The walk
// is seeded, so a fixed seed always yields the same entries byte for byte;
// tests use the stream to cross-check the two stratification routes on
// inputs nobody curated by hand.

#ifndef STRAT_CORPUS_HPP
#define STRAT_CORPUS_HPP

#include <string>
#include <vector>

namespace strat {

struct CorpusEntry {
  std::string name;  // "corpus-01", ...
  std::string text;  // same format the bundled fixtures use
};

// Draws candidates with up to four vertices, up to six arrows, and a few
// length-two monomial relations, then keeps the ones that build to an
// algebra of total dimension at most `max_dim` and pass the stratification
// check. Orders are sampled below a random linear order, so they are
// always genuine partial orders. Throws std::runtime_error if the attempt
// budget runs out before `count` survivors are found.
std::vector<CorpusEntry> stratified_corpus(int count, unsigned seed, int max_dim = 40);

}  // namespace strat

#endif
