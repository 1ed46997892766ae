#include "docgraph/store/shared_dataset.hpp"

namespace docgraph::store {

std::shared_ptr<const Dataset> SharedDataset::snapshot() const {
  std::lock_guard lock(publish_mutex_);
  return current_;
}

void SharedDataset::update(const std::function<void(Dataset&)>& writer) {
  std::lock_guard writer_lock(writer_mutex_);
  auto next = std::make_shared<Dataset>(*snapshot());
  writer(*next);
  std::lock_guard lock(publish_mutex_);
  current_ = std::move(next);
}

}  // namespace docgraph::store
