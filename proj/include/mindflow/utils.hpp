#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace mindflow {

std::string trim_copy(std::string_view s);
std::string lower_ascii(std::string_view s);

// Case-folded alphanumeric tokens, the unit of the knowledge overlap score.
std::set<std::string> term_set(std::string_view text);

std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t seed = 14695981039346656037ULL);
std::string to_hex(std::uint64_t value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

// Order-preserving parallel map. Workers pull indices from a shared counter;
// the result vector is indexed by input position, so output order never
// depends on scheduling. The first exception thrown by any worker is
// rethrown after all workers join.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, std::size_t workers, F fn)
    -> std::vector<decltype(fn(items.front()))> {
    using R = decltype(fn(items.front()));
    std::vector<R> results(items.size());
    if (items.empty()) {
        return results;
    }
    workers = std::min<std::size_t>(workers == 0 ? 1 : workers, items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            results[i] = fn(items[i]);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= items.size() || failed.load()) {
                    return;
                }
                try {
                    results[i] = fn(items[i]);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        first_error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return results;
}

} // namespace mindflow
