#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cotrace {

/// Index of an element inside an ElemUniverse. The universe order is the
/// index order, so sorting ids sorts by the universe's fixed order.
using Elem = std::uint32_t;
using StateId = Elem;
using LetterId = Elem;

/// A finite, ordered set of distinct symbolic identifiers.
class ElemUniverse {
 public:
  ElemUniverse() = default;
  explicit ElemUniverse(std::vector<std::string> names);

  /// {prefix0, prefix1, ...}
  static ElemUniverse indexed(std::string_view prefix, std::size_t count);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Elem e) const;
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> find(std::string_view name) const;
  /// Throws Error(UnknownSymbol) mentioning `what` when absent.
  Elem at(std::string_view name, std::string_view what = "element") const;

  bool operator==(const ElemUniverse& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
};

}  // namespace cotrace
