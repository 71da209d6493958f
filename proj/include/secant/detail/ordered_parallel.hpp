#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace secant {

template <class T>
void ordered_parallel(std::size_t count, int threads, const std::function<T(std::size_t)>& fn,
                      const std::function<void(std::size_t, T&&)>& sink) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::map<std::size_t, T> done;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        T value = fn(i);
        std::lock_guard lock(mu);
        done.emplace(i, std::move(value));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
      ready.notify_one();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  for (std::size_t emit = 0; emit < count; ++emit) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return failure || done.count(emit); });
    if (failure) break;
    T value = std::move(done.at(emit));
    done.erase(emit);
    lock.unlock();
    sink(emit, std::move(value));
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace secant
