#include "tambara/caps.hpp"

#include <charconv>
#include <string>

#include "tambara/error.hpp"

namespace tambara {

std::string Caps::to_string() const {
  return "fiber=" + std::to_string(max_fiber) + ",points=" + std::to_string(max_points) +
         ",enum=" + std::to_string(max_enum) + ",group=" + std::to_string(max_group);
}

Caps Caps::parse(std::string_view text) {
  Caps caps;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::MalformedSpec, "caps item without '=': " + std::string(item));
    auto key = item.substr(0, eq);
    auto val = item.substr(eq + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size() || v <= 0)
      fail(ErrorKind::MalformedSpec, "bad caps value: " + std::string(item));
    if (key == "fiber") caps.max_fiber = v;
    else if (key == "points") caps.max_points = v;
    else if (key == "enum") caps.max_enum = v;
    else if (key == "group") caps.max_group = v;
    else fail(ErrorKind::MalformedSpec, "unknown caps key: " + std::string(key));
  }
  return caps;
}

}  // namespace tambara
