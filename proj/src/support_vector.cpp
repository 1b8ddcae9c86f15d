#include "skelmc/support_vector.hpp"

#include <algorithm>

namespace skelmc {

bool SupportVector::any() const { return std::find(bits_.begin(), bits_.end(), true) != bits_.end(); }

bool SupportVector::all() const { return std::find(bits_.begin(), bits_.end(), false) == bits_.end(); }

std::size_t SupportVector::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string SupportVector::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

}  // namespace skelmc
