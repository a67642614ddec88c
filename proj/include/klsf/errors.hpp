#pragma once

#include <stdexcept>
#include <string>

namespace klsf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

class NotADivisor : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// No nonempty (k,l)-sum-free witness exists (the modulus divides k-l).
class NoWitness : public Error {
 public:
  using Error::Error;
};

class NotSumFree : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace klsf
