#include "posetdegen/rational.hpp"

#include "posetdegen/errors.hpp"

namespace posetdegen {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto bad = [&] { return Error(ErrorCode::parse_error, "not a rational number: \"" + s + "\""); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  const auto digits_ok = [](std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw bad();
  } else {
    if (!digits_ok(std::string_view(s).substr(0, slash), true) || !digits_ok(std::string_view(s).substr(slash + 1), false))
      throw bad();
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw bad();
  r.canonicalize();
  return r;
}

}  // namespace posetdegen
