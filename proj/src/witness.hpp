#pragma once

#include <sstream>
#include <string>

namespace annring::detail {

template <class... T>
std::string tuple_str(const T&... xs) {
  std::ostringstream os;
  os << '(';
  int i = 0;
  ((os << (i++ ? "," : "") << xs), ...);
  os << ')';
  return os.str();
}

}  // namespace annring::detail
