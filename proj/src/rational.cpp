#include "bgmu/rational.hpp"

#include <sstream>

namespace bgmu {

Rat Rat::parse(std::string const& s) {
  auto bad = [&]() { throw std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  auto parse_int = [&](std::string const& t) -> long long {
    if (t.empty()) bad();
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (std::exception const&) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  if (slash == std::string::npos) return Rat(parse_int(s));
  long long n = parse_int(s.substr(0, slash));
  long long d = parse_int(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rat(n, d);
}

QVec to_qvec(ZVec const& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

ZVec to_zvec(QVec const& v) {
  ZVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].as_integer();
  return r;
}

std::string format_qvec(QVec const& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string format_zvec(ZVec const& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace bgmu
