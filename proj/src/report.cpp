// report.cpp

#include "strat/report.hpp"

#include <cstdint>
#include <sstream>

namespace strat {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string fnv1a_digest(const std::string& data) {
  static const char hex[] = "0123456789abcdef";
  std::uint64_t h = fnv1a(data);
  std::string out = "fnv1a:";
  for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xF];
  return out;
}

std::string cert_witness(const FiltrationCert& cert) {
  // mpq_class keeps values canonical, so get_str is a stable rendering
  std::ostringstream s;
  for (int m : cert.mult) s << m << ',';
  for (const auto& step : cert.steps) {
    s << '|' << step.label;
    for (const Mat& f : step.embed.f) {
      s << '[' << f.rows << 'x' << f.cols;
      for (const Scalar& x : f.a) s << ';' << x.get_str();
      s << ']';
    }
  }
  return fnv1a_digest(s.str());
}

std::string render_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace strat
