#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brouwer {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class SizeBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class NotALattice : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ValuationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("mass problems live over different degree posets") {}
};

class NoJoinTable : public Error {
 public:
  NoJoinTable() : Error("degree poset is not an upper semilattice; formula-mode arrow unavailable") {}
};

class PolicyUnsatisfiable : public Error {
 public:
  using Error::Error;
};

}  // namespace brouwer
