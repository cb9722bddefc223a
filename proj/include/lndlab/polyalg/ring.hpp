#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lnd::polyalg {

/// True when `name` matches `[A-Za-z][A-Za-z0-9_]*` and is not the imaginary unit `I`.
bool is_identifier(std::string_view name);

/// Ordered list of distinct variable names. Cheap to copy (shared storage).
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  /// Throws std::invalid_argument on bad or duplicate names.
  explicit Ring(std::vector<std::string> vars);

  std::size_t arity() const noexcept { return vars_->size(); }
  const std::vector<std::string>& vars() const noexcept { return *vars_; }
  const std::string& var(std::size_t i) const { return vars_->at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require_index(std::string_view name) const;

  /// This ring's variables followed by `extra`.
  Ring extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace lnd::polyalg
