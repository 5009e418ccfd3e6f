#include "emhd/record.hpp"

#include <charconv>
#include <fmt/format.h>
#include <stdexcept>

namespace emhd {

std::string NormKey::column() const {
  return fmt::format("{}_{}{}", quantity, homogeneous ? "dH" : "H", s);
}

std::optional<NormKey> NormKey::parse(const std::string& column) {
  const auto pos = column.rfind('_');
  if (pos == std::string::npos || pos == 0) return std::nullopt;
  std::string tail = column.substr(pos + 1);
  NormKey key;
  key.quantity = column.substr(0, pos);
  if (tail.rfind("dH", 0) == 0) {
    key.homogeneous = true;
    tail = tail.substr(2);
  } else if (tail.rfind("H", 0) == 0) {
    key.homogeneous = false;
    tail = tail.substr(1);
  } else {
    return std::nullopt;
  }
  const char* end = tail.data() + tail.size();
  const auto [ptr, ec] = std::from_chars(tail.data(), end, key.s);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return key;
}

void DiagnosticsRecord::set(const NormKey& key, double value) {
  for (auto& [k, v] : norms) {
    if (k == key) {
      v = value;
      return;
    }
  }
  norms.emplace_back(key, value);
}

std::optional<double> DiagnosticsRecord::get(const NormKey& key) const {
  for (const auto& [k, v] : norms) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double DiagnosticsRecord::at(const std::string& quantity, double s, bool homogeneous) const {
  const NormKey key{quantity, s, homogeneous};
  if (auto v = get(key)) return *v;
  throw std::out_of_range("record has no column " + key.column());
}

}  // namespace emhd
