#pragma once

#include <string>
#include <string_view>

namespace tambara {

// Size bounds shared by every construction that can blow up.
struct Caps {
  int max_fiber = 16;      // largest fiber a dependent product may range over
  int max_points = 4096;   // largest carrier built by pi or by a bispan rewrite
  int max_enum = 6;        // middle-object bound for bispan enumeration
  int max_group = 24;      // subgroup enumeration bound

  std::string to_string() const;
  // Accepts "fiber=4,points=64,enum=6,group=24" with any subset of keys.
  static Caps parse(std::string_view text);

  bool operator==(const Caps&) const = default;
};

}  // namespace tambara
