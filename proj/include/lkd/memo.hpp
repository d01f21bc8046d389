#pragma once

#include <map>
#include <mutex>

namespace lkd {

/// Thread-safe lazily filled map. References stay valid for the memo's lifetime.
/// The lock is never held while a value is being computed, so computations may
/// recurse into other memos; concurrent misses on one key compute twice and keep the first.
template <class K, class V>
class Memo {
public:
    template <class Fn>
    const V& get(const K& key, Fn&& compute) const {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    mutable std::mutex mutex_;
    mutable std::map<K, V> map_;
};

}  // namespace lkd
