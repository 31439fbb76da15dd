#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "omc/arrangement.hpp"
#include "omc/tope.hpp"

namespace omc {

struct CatalogEntry {
  std::string_view name;
  std::string_view description;
  Arrangement arrangement;
  std::vector<std::string> topes;  // frozen generator output, canonical order
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"lines3", "three lines through the origin of the plane",
       Arrangement{2, {{1, 0}, {0, 1}, {1, 1}}},
       {"---", "-+-", "-++", "+--", "+-+", "+++"}},
      {"lines4", "four lines through the origin of the plane",
       Arrangement{2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}},
       {"----", "---+", "-+--", "-++-", "+--+", "+-++", "+++-", "++++"}},
      {"lines5", "five lines through the origin of the plane",
       Arrangement{2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}},
       {"-----", "---+-", "-+---", "-+--+", "-++-+", "+--+-", "+-++-", "+-+++", "+++-+", "+++++"}},
      {"planes4_3d", "four central planes in general position in 3-space",
       Arrangement{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}},
       {"----", "--+-", "--++", "-+--", "-+-+", "-++-", "-+++", "+---", "+--+", "+-+-", "+-++", "++--", "++-+", "++++"}},
  };
  return entries;
}

inline const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& entry : catalog())
    if (entry.name == name) return entry;
  throw Error(ErrorKind::UnknownName, "no canonical instance named '" + std::string(name) + "'");
}

inline TopeSet canonical(std::string_view name) { return validate_tope_set(catalog_entry(name).topes); }

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalog()) names.emplace_back(entry.name);
  return names;
}

}  // namespace omc
