#include "eulerloc/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eulerloc {

void parallel_for(std::size_t jobs, std::size_t count, const std::function<void(std::size_t)>& body)
{
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_index = count;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> threads;
    const std::size_t n = std::min(jobs, count);
    threads.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace eulerloc
