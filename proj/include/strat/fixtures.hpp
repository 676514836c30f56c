// fixtures.hpp
//
// Built-in example algebras. Each one exercises a specific behavior of the
// pipeline and is embedded as input text so the binary needs no data files.

#ifndef STRAT_FIXTURES_HPP
#define STRAT_FIXTURES_HPP

#include <string>
#include <vector>

namespace strat {

struct Fixture {
  std::string name;
  std::string description;
  std::string text;
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);  // throws std::out_of_range

}  // namespace strat

#endif
