// fixtures.cpp

#include "strat/fixtures.hpp"

#include <stdexcept>

namespace strat {

namespace {

const char* backflow = R"(# two-cycle with one composite killed, plus a tail
composition = right-to-left

[quiver]
vertices = x y z
arrow alpha x y
arrow beta y x
arrow gamma y z

[relations]
alpha*beta

[order]
below x y
below y z
)";

const char* equipair = R"(# preorder with an equivalent pair of vertices
composition = right-to-left

[quiver]
vertices = x y z
arrow alpha1 x y
arrow beta1 y x
arrow alpha2 y z
arrow beta2 z y

[relations]
alpha1*beta1
alpha2*beta2
alpha2*alpha1
beta1*beta2

[order]
kind = preorder
below x y
below y x
below y z
)";

const char* semisimple3 = R"(# three isolated vertices, no arrows, antichain order
composition = right-to-left

[quiver]
vertices = a b c

[order]
)";

const char* dualnumbers = R"(# one vertex with a square-zero loop
composition = right-to-left

[quiver]
vertices = x
arrow l x x

[relations]
l*l

[order]
)";

const char* diamond = R"(# commuting square on a diamond order
composition = right-to-left

[quiver]
vertices = a b c d
arrow f d b
arrow g d c
arrow h b a
arrow i c a

[relations]
h*f - i*g

[order]
below a b
below a c
below b d
below c d
)";

const char* loopline = R"(# square-zero loop absorbed by an outgoing arrow
composition = right-to-left

[quiver]
vertices = x y
arrow l x x
arrow a x y

[relations]
l*l
a*l

[order]
below y x
)";

const char* hiddenhom = R"(# chain quiver whose full projective hides a hom from its standard
composition = right-to-left

[quiver]
vertices = u v w
arrow b u v
arrow c w u

[relations]

[order]
below u v
below v w
)";

const char* heightskip = R"(# arrow jumping over a middle layer of the chain
composition = right-to-left

[quiver]
vertices = u v w
arrow a u w

[relations]

[order]
below u v
below v w
)";

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"backflow",
       "two-cycle with one composite killed plus a tail; quasi-hereditary, every later check passes",
       backflow},
      {"equipair", "preorder with an equivalence pair; directedness fails in degree zero both ways",
       equipair},
      {"semisimple3", "semisimple algebra on an antichain; the degenerate baseline", semisimple3},
      {"dualnumbers", "dual numbers; standardly stratified but not quasi-hereditary", dualnumbers},
      {"diamond", "commuting square over the diamond order; standards equal projectives", diamond},
      {"loopline",
       "standardly stratified, but a hom space is not free over the loop endomorphisms",
       loopline},
      {"hiddenhom",
       "standard-to-full hom dimensions drop below the projective-to-full ones at the bottom vertex",
       hiddenhom},
      {"heightskip", "standard module whose syzygy skips a height; not linearly filtered",
       heightskip},
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named '" + name + "'");
}

}  // namespace strat
