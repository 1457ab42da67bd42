#include "arctic/mp.hpp"

#include <cstdio>
#include <vector>

namespace arctic {

std::string MPScalar::to_string(int digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

}  // namespace arctic
