#include "chiforge/error.hpp"

namespace chiforge {

  ParseError::ParseError(std::string const& msg,
                         std::size_t        line,
                         std::size_t        column)
      : Error("line " + std::to_string(line) + ", column "
              + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  CosetOverflow::CosetOverflow(std::size_t limit)
      : Error("coset table overflow: more than " + std::to_string(limit)
              + " cosets needed; increase --max-cosets or the group may be "
                "too large"),
        limit_(limit) {}

  LimitExceeded::LimitExceeded(std::string const& what, std::size_t limit)
      : Error(what + ": limit of " + std::to_string(limit) + " exceeded") {}

}  // namespace chiforge
