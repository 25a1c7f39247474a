#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace crossfam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Three of the points handed to a predicate are collinear (or coincide).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class NotSeparated : public Error {
 public:
  using Error::Error;
};

class NotTotalOrder : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no edges") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class RangeTooSmall : public Error {
 public:
  using Error::Error;
};

/// Interval extraction was asked to run on a poset with too many
/// incomparable pairs: requires |P| > n*k and 16*k*iota <= (|P| - n*k)^2.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::size_t size, std::size_t n, std::size_t k, std::uint64_t iota)
      : Error("interval extraction hypothesis violated: |P|=" + std::to_string(size) +
              " n=" + std::to_string(n) + " k=" + std::to_string(k) +
              " iota=" + std::to_string(iota)),
        size_(size), n_(n), k_(k), iota_(iota) {}

  std::size_t size() const { return size_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::uint64_t iota() const { return iota_; }

 private:
  std::size_t size_, n_, k_;
  std::uint64_t iota_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace crossfam
