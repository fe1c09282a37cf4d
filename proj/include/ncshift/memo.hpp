#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace ncshift {

// Process-wide memo table safe for concurrent callers. Values are computed
// outside the lock; if two threads race on the same key the first insert wins,
// and since every value is a pure function of its key both agree anyway.
// References stay valid: entries are never erased.
template <class K, class V>
class Memo {
 public:
  template <class F>
  const V& get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<K, V> map_;
};

}  // namespace ncshift
