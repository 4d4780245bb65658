#pragma once

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace signlab::cli {

template <typename Body>
decltype(auto) with_timeout(int seconds, Body&& body) {
  std::stop_source source;
  std::jthread watchdog([&source, seconds](std::stop_token done) {
    std::mutex m;
    std::condition_variable_any cv;
    std::unique_lock lock(m);
    cv.wait_for(lock, done, std::chrono::seconds(seconds), [] { return false; });
    if (!done.stop_requested()) source.request_stop();
  });
  return std::forward<Body>(body)(source.get_token());
}

}  // namespace signlab::cli
