#include "ncshift/check.hpp"

#include <cstdlib>
#include <string>

namespace ncshift {

int max_reseed() {
  const char* env = std::getenv("NCSHIFT_MAX_RESEED");
  if (env == nullptr || *env == '\0') return 16;
  try {
    int v = std::stoi(env);
    return v < 0 ? 0 : v;
  } catch (const std::exception&) {
    return 16;
  }
}

}  // namespace ncshift
