#include "ariki/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ariki {

namespace {
std::atomic<int> forced{0};
}

int thread_count() {
  if (int f = forced.load(); f > 0) return f;
  if (const char* env = std::getenv("ARIKI_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { forced.store(n > 0 ? n : 0); }

}  // namespace ariki
