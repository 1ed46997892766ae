#pragma once

#include <functional>
#include <memory>
#include <mutex>

#include "docgraph/store/dataset.hpp"

namespace docgraph::store {

// Many readers, one writer. Readers take an immutable snapshot; a writer
// copies the current dataset, applies its change and publishes the copy, so
// a match running on an older snapshot is never invalidated.
class SharedDataset {
 public:
  SharedDataset() : current_(std::make_shared<const Dataset>()) {}
  explicit SharedDataset(Dataset initial)
      : current_(std::make_shared<const Dataset>(std::move(initial))) {}

  std::shared_ptr<const Dataset> snapshot() const;

  void update(const std::function<void(Dataset&)>& writer);

 private:
  mutable std::mutex publish_mutex_;
  std::mutex writer_mutex_;
  std::shared_ptr<const Dataset> current_;
};

}  // namespace docgraph::store
