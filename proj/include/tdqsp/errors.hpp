// Copyright 2026 The tdqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tdqsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A matrix or register would exceed the desk-scale dimension cap.
class SizingError : public Error {
   public:
    using Error::Error;
};

/// An input violated a structural precondition (Hermiticity, unitarity, ...).
class ContractViolation : public Error {
   public:
    using Error::Error;
};

/// A Hamiltonian fails the commuting-at-different-times precondition.
class CommutativityError : public ContractViolation {
   public:
    using ContractViolation::ContractViolation;
};

/// A scalar argument lies outside the domain of an operation.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Operands have incompatible dimensions or qubit counts.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A polynomial has no definite parity where one is required.
class ParityError : public Error {
   public:
    using Error::Error;
};

/// A spectrum sits too close to +-1 for the arcsin construction.
class MarginError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// A model description is inconsistent (non-Hermitian assembly, broken pairing, ...).
class ModelError : public Error {
   public:
    using Error::Error;
};

/// An iterative procedure failed to reach its target.
class ConvergenceError : public Error {
   public:
    ConvergenceError(const std::string &what, double residual) : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

   private:
    double residual_;
};

}  // namespace tdqsp
