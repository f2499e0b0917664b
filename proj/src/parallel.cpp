#include "splitforge/parallel.hpp"

namespace splitforge {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_default_threads(unsigned threads) { g_threads = threads; }

unsigned default_threads() {
  if (unsigned t = g_threads.load(); t != 0) return t;
  if (const char* env = std::getenv("SPLITFORGE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace splitforge
