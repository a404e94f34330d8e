#include "scg/problem.hpp"

#include <numeric>
#include <vector>

namespace scg {

double Problem::full_loss(const Vector& w) const {
  std::vector<Index> all(static_cast<std::size_t>(num_examples()));
  std::iota(all.begin(), all.end(), Index{0});
  return batch_loss(w, all);
}

Vector Problem::full_gradient(const Vector& w) const {
  std::vector<Index> all(static_cast<std::size_t>(num_examples()));
  std::iota(all.begin(), all.end(), Index{0});
  return batch_gradient(w, all);
}

}  // namespace scg
