#include "hyperrel/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hyperrel {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("HYPERREL_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace hyperrel
