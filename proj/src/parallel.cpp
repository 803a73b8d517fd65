#include "qps/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qps::parallel {

namespace {

int initial_threads() {
  if (const char* env = std::getenv("QPS_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& thread_setting() {
  static std::atomic<int> n{initial_threads()};
  return n;
}

}  // namespace

int configured_threads() { return initial_threads(); }

void set_threads(int n) { thread_setting() = n < 1 ? 1 : n; }

int threads() { return thread_setting().load(); }

}  // namespace qps::parallel
