#include "cotrace/universe.hpp"

#include "cotrace/error.hpp"

namespace cotrace {

ElemUniverse::ElemUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Elem>(i)).second)
      throw Error(ErrorKind::InvalidValue, "duplicate identifier '" + names_[i] + "'");
  }
}

ElemUniverse ElemUniverse::indexed(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return ElemUniverse(std::move(names));
}

const std::string& ElemUniverse::name(Elem e) const {
  if (e >= names_.size()) throw Error(ErrorKind::UnknownSymbol, "index " + std::to_string(e) + " out of range");
  return names_[e];
}

std::optional<Elem> ElemUniverse::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem ElemUniverse::at(std::string_view name, std::string_view what) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownSymbol, std::string(what) + " '" + std::string(name) + "'");
}

}  // namespace cotrace
