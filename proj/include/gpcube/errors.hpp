// Exception hierarchy shared by every gpcube module.

#ifndef GPCUBE_ERRORS_HPP_
#define GPCUBE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpcube {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed graph file or word text.  The kind distinguishes the failure so
  // callers (and tests) do not have to match on message text.
  class ParseError : public Error {
   public:
    enum class Kind {
      syntax,
      duplicate_vertex,
      unknown_vertex,
      self_loop,
      bad_order,
      too_many_vertices
    };

    ParseError(Kind kind, std::string const& what)
        : Error(what), _kind(kind) {}

    Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

  class UnknownGenerator : public Error {
   public:
    using Error::Error;
  };

  class PresentationMismatch : public Error {
   public:
    PresentationMismatch()
        : Error("operands belong to different graph products") {}
  };

  // A configurable resource cap (ball size, oracle word set) was hit.  This is
  // never reported as a negative answer.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, std::size_t limit)
        : Error(what + " (limit " + std::to_string(limit) + ")"),
          _limit(limit) {}

    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
  };

  // A computed object contradicts a structural statement that is supposed to
  // hold (non-unique Morse maximum, failed factorization, ...).
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  // A local query (link, descending link) was asked at a vertex whose star is
  // cut off by the boundary of a finite ball.
  class NotInterior : public Error {
   public:
    using Error::Error;
  };

}  // namespace gpcube

#endif  // GPCUBE_ERRORS_HPP_
