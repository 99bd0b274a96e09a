#ifndef LENERGY_PARALLEL_HPP
#define LENERGY_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace lenergy {

/// 0 means one worker per hardware thread.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Applies `fn` to every item on up to `threads` workers and hands the
/// results to `sink` in item order. Work proceeds in windows so at most a
/// bounded number of results is buffered at a time.
template <typename In, typename Fn, typename Sink>
void ordered_parallel_map(const std::vector<In>& items, int threads, Fn&& fn, Sink&& sink,
                          std::size_t chunk = 16) {
  using Out = std::decay_t<std::invoke_result_t<Fn&, const In&>>;
  threads = resolve_threads(threads);
  if (threads == 1) {
    for (const In& item : items) sink(fn(item));
    return;
  }

  const std::size_t window = chunk * static_cast<std::size_t>(threads) * 8;
  std::vector<Out> results;
  for (std::size_t begin = 0; begin < items.size(); begin += window) {
    const std::size_t end = std::min(items.size(), begin + window);
    results.assign(end - begin, Out{});
    std::atomic<std::size_t> next{begin};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> workers;
      for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
          try {
            for (;;) {
              const std::size_t lo = next.fetch_add(chunk);
              if (lo >= end) return;
              const std::size_t hi = std::min(end, lo + chunk);
              for (std::size_t i = lo; i < hi; ++i) results[i - begin] = fn(items[i]);
            }
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(end);
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (Out& r : results) sink(std::move(r));
  }
}

}  // namespace lenergy

#endif  // LENERGY_PARALLEL_HPP
