#pragma once

#include "wpvol/exact/rational.hpp"

#include <array>
#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace wpvol {

// Intersection numbers keyed by encode_key(). Every value is homogeneous,
// r * pi^(2m) with m fixed by the key, so only r is held in memory; the file
// format stores the full PiPoly.
class MemoStore {
public:
    static constexpr const char* kVersion = "WPVOL-CACHE v1";

    MemoStore() = default;
    MemoStore(const MemoStore&) = delete;
    MemoStore& operator=(const MemoStore&) = delete;

    std::optional<Rational> find(const std::string& key) const;
    // Entries are never erased while computations run (clear() excepted), and
    // unordered_map nodes are address-stable, so the pointer stays valid.
    const Rational* find_ptr(const std::string& key) const;
    // First writer wins. A second insert with a different value is a logic
    // error (the recursion is a pure function) and throws StorageError.
    bool insert(const std::string& key, const Rational& value);

    std::size_t size() const;
    std::size_t hits() const { return hits_.load(std::memory_order_relaxed); }
    std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }
    void note_hit() const { hits_.fetch_add(1, std::memory_order_relaxed); }
    void note_miss() const { misses_.fetch_add(1, std::memory_order_relaxed); }
    void clear();

    // Sorted by key, so the output is deterministic.
    void for_each(const std::function<void(const std::string&, const Rational&)>& fn) const;

    // Writes to a sibling temp file, then renames over the target.
    void save(const std::filesystem::path& path) const;
    // Merges a cache file. Throws StorageError on any malformed record.
    std::size_t load(const std::filesystem::path& path);

    // Test hook: abort a save after this many records, leaving the temp file.
    void set_save_abort_after(std::optional<std::size_t> n) { abort_after_ = n; }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::shared_mutex mu;
        std::unordered_map<std::string, Rational> map;
    };
    Shard& shard_for(const std::string& key) const;

    mutable std::array<Shard, kShards> shards_;
    mutable std::atomic<std::size_t> hits_{0}, misses_{0};
    std::optional<std::size_t> abort_after_;
};

// One cache record line: key;value-json;crc32 (hex).
std::string format_record(const std::string& key, const Rational& value);

}  // namespace wpvol
