#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace ushape {

// threads == 0 means "one per hardware thread".
inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Applies fn to every item on a small worker pool. Output order matches input
// order regardless of scheduling. If any call throws, the exception from the
// lowest index is rethrown after all workers finish.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  const std::size_t count = items.size();
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned pool = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(count, 1));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace ushape
