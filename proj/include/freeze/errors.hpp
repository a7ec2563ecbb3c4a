#pragma once

#include <stdexcept>
#include <string>

namespace freeze {

// Malformed image documents, point-set literals, or certificate text.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by compound searches (minimize, minimality, excludability) when the
// shared node budget runs out mid-query. A single verification never throws
// this; it reports exhaustion in its Verdict instead.
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace freeze
