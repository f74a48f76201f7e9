#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finring {

using Elem = std::uint32_t;

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation would exceed a configured order cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::size_t requested, std::size_t cap)
      : Error(what + ": order " + std::to_string(requested) + " exceeds cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// Caller violated an operation's precondition (bad index, improper extension, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation tables fail a ring axiom. `witness` holds the offending elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Elem> witness)
      : Error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(std::move(witness)) {}

  const std::string& axiom() const { return axiom_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<Elem>& w) {
    std::string s = "ring axiom violated: " + axiom + " (witness";
    for (Elem e : w) s += " " + std::to_string(e);
    return s + ")";
  }

  std::string axiom_;
  std::vector<Elem> witness_;
};

/// An element map fails a homomorphism law.
class HomViolation : public Error {
 public:
  HomViolation(std::string law, std::vector<Elem> witness)
      : Error("homomorphism law violated: " + law), law_(std::move(law)), witness_(std::move(witness)) {}

  const std::string& law() const { return law_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::string law_;
  std::vector<Elem> witness_;
};

/// A localization collapsed to the zero ring.
class DegenerateLocalization : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Always an engine bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace finring
