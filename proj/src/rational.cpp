#include "qm/rational.hpp"

namespace qm {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw ParseError("bad rational literal: " + s);
      return Rat(BigInt(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
      throw ParseError("bad rational literal: " + s);
    if (BigInt(den) == 0) throw ParseError("zero denominator in: " + s);
    return Rat(BigInt(num), BigInt(den));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

}  // namespace qm
