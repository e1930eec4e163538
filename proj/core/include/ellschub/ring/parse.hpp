#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ellschub/ring/ratfunc.hpp"

namespace ellschub {

struct ParseHooks {
  // Consulted before the registry for identifiers.
  std::function<std::optional<RatFunc>(const std::string&)> symbol;
  // Receives the text between '[' and ']'.
  std::function<RatFunc(const std::string&)> bracket;
};

// Expressions with + - * / ^, parentheses, integers, registry variables and
// juxtaposition as multiplication, e.g. "2*x1 - (x2 + 1)/x1^2".
RatFunc parse_ratfunc(const RingPtr& ring, std::string_view text, const ParseHooks& hooks = {});

}  // namespace ellschub
