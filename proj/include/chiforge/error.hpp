#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chiforge {

  // Base class of every error the library reports.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed presentation text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Coset enumeration ran out of table space.
  class CosetOverflow : public Error {
   public:
    explicit CosetOverflow(std::size_t limit);

    std::size_t limit() const noexcept { return limit_; }

   private:
    std::size_t limit_;
  };

  // An element-enumeration or pair-evaluation limit was exceeded.
  class LimitExceeded : public Error {
   public:
    LimitExceeded(std::string const& what, std::size_t limit);
  };

  // A documented precondition was violated by the caller.
  class ContractViolation : public Error {
   public:
    using Error::Error;
  };

}  // namespace chiforge
