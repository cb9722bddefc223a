#include "lndlab/polyalg/ring.hpp"

#include <cctype>
#include <stdexcept>

#include "lndlab/errors.hpp"

namespace lnd::polyalg {

bool is_identifier(std::string_view name) {
  if (name.empty() || name == "I") return false;
  if (!std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Ring::Ring(std::vector<std::string> vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!is_identifier(vars[i])) throw std::invalid_argument("invalid variable name '" + vars[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name '" + vars[i] + "'");
    }
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw UnknownVariable(std::string(name));
  return *idx;
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = *vars_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Ring(std::move(all));
}

}  // namespace lnd::polyalg
