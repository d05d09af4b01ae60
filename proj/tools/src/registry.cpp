#include <algorithm>

#include "lab.hpp"

namespace mackey::lab {
namespace {

// Check key -> identifier of the statement it exercises, in report order.
const std::vector<std::pair<std::string, std::string>>& table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"equivariance", "Lemma 2.1"},
      {"group-law", "Lemma 2.2"},
      {"orbits", "Lemma 2.3"},
      {"compact-identity", "Lemma 4.1"},
      {"iwasawa-limit", "Lemma 4.3"},
      {"wave-limit", "Lemma 4.4"},
      {"motion-limit", "Theorem 4.1"},
      {"synthesis-limit", "Theorem 4.2"},
      {"zoom-limit", "Theorem 5.1"},
      {"ktype-zoom", "Lemma 5.4"},
      {"ktype-origin", "Lemma 5.5"},
      {"contracted-action", "Corollary 5.6"},
      {"zero-frequency", "Theorem 6.2"},
      {"quasi-regular", "§6.2.2"},
      {"complements", "Lemma 6.2"},
      {"fd-limits", "Lemma 6.3"},
      {"fd-module", "Lemma 6.6"},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& statement_registry() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [key, id] : table()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool in_registry(const std::string& id) {
  const auto& ids = statement_registry();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

const std::string& statement_for(const std::string& key) {
  for (const auto& [k, id] : table())
    if (k == key) return id;
  throw std::logic_error("no statement registered for check key " + key);
}

}  // namespace mackey::lab
