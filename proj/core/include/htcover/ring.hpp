#pragma once

#include <memory>
#include <string>
#include <vector>

namespace htcover {

/// Ordered variable names. A monomial ideal's exponent vectors index
/// against this list; two ideals are compatible iff their rings compare equal.
class Ring {
 public:
  explicit Ring(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  /// Variables named v1..vn.
  static std::shared_ptr<const Ring> anonymous(std::size_t n);

  std::size_t size() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& name(std::size_t i) const { return variables_.at(i); }

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace htcover
