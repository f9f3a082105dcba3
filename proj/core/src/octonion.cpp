#include "g2tk/octonion.hpp"

#include <sstream>
#include <vector>

namespace g2tk {

std::string to_string(const Octonion& x) {
  std::ostringstream os;
  os << x.a.get_str() << ";" << x.v[0].get_str() << "," << x.v[1].get_str() << "," << x.v[2].get_str()
     << ";" << x.phi[0].get_str() << "," << x.phi[1].get_str() << "," << x.phi[2].get_str() << ";"
     << x.d.get_str();
  return os.str();
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Octonion parse_octonion(const std::string& s) {
  auto blocks = split(s, ';');
  if (blocks.size() != 4) throw std::invalid_argument("parse_octonion: expected a;v;phi;d");
  auto vs = split(blocks[1], ',');
  auto ps = split(blocks[2], ',');
  if (vs.size() != 3 || ps.size() != 3)
    throw std::invalid_argument("parse_octonion: expected 3 components in v and phi");
  Octonion x;
  x.a = parse_rational(blocks[0]);
  x.d = parse_rational(blocks[3]);
  for (int i = 0; i < 3; ++i) {
    x.v[i] = parse_rational(vs[i]);
    x.phi[i] = parse_rational(ps[i]);
  }
  return x;
}

}  // namespace g2tk
