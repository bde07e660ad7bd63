#ifndef BXP_ERRORS_HPP_
#define BXP_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bxp {

  //! Base class of every exception thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class SizeMismatch : public Error {
   public:
    SizeMismatch(std::size_t expected, std::size_t found)
        : Error("degree mismatch: expected " + std::to_string(expected)
                + ", found " + std::to_string(found)) {}
  };

  class InvalidPartition : public Error {
   public:
    using Error::Error;
  };

  class InvalidTransformation : public Error {
   public:
    using Error::Error;
  };

  //! The transformation sends some block into more than one block.
  class NotPartitionPreserving : public Error {
   public:
    explicit NotPartitionPreserving(std::size_t block)
        : Error("block " + std::to_string(block)
                + " is not mapped into a single block"),
          _block(block) {}

    std::size_t block() const noexcept {
      return _block;
    }

   private:
    std::size_t _block;
  };

  //! The transformation is not an element of B(X, P).
  //!
  //! `block()` is the first block that either straddles two target blocks
  //! or lands in a target block already hit by an earlier block.
  class NotInB : public Error {
   public:
    NotInB(std::size_t block, std::string const& reason)
        : Error("not in B(X,P): block " + std::to_string(block) + " "
                + reason),
          _block(block) {}

    std::size_t block() const noexcept {
      return _block;
    }

   private:
    std::size_t _block;
  };

  //! Some block restriction has collapse different from defect.
  class NotUnitRegular : public Error {
   public:
    NotUnitRegular(std::size_t block, std::size_t collapse, std::size_t defect)
        : Error("not unit-regular: block " + std::to_string(block)
                + " has c=" + std::to_string(collapse)
                + " d=" + std::to_string(defect)),
          _block(block),
          _collapse(collapse),
          _defect(defect) {}

    std::size_t block() const noexcept {
      return _block;
    }
    std::size_t collapse() const noexcept {
      return _collapse;
    }
    std::size_t defect() const noexcept {
      return _defect;
    }

   private:
    std::size_t _block;
    std::size_t _collapse;
    std::size_t _defect;
  };

  class TooLarge : public Error {
   public:
    TooLarge(std::uint64_t estimate, std::uint64_t cap)
        : Error("|B(X,P)| estimated at " + std::to_string(estimate)
                + " exceeds cap " + std::to_string(cap)),
          _estimate(estimate) {}

    std::uint64_t estimate() const noexcept {
      return _estimate;
    }

   private:
    std::uint64_t _estimate;
  };

  class ElementNotInTable : public Error {
   public:
    ElementNotInTable() : Error("element is not in the semigroup table") {}
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace bxp

#endif  // BXP_ERRORS_HPP_
