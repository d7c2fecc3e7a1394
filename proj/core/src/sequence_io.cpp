// SPDX-License-Identifier: Apache-2.0
#include "adasort/sequence_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "adasort/errors.hpp"

namespace adasort {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Sequence read_sequence(std::istream& in) {
  Sequence seq;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || line.front() == '#') continue;
    Key value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected a decimal integer, got '" +
                       std::string(text) + "'");
    }
    seq.push_back({value, seq.size()});
  }
  if (in.bad()) throw InputError("read error");
  return seq;
}

void write_sequence(std::ostream& out, std::span<const Item> items) {
  for (const Item& it : items) out << it.key << '\n';
}

}  // namespace adasort
