// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exception hierarchy. Every failure a caller can act on has its own type so
// the CLI can map it to a structured message and an exit code.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greedy_certify {

class CertifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Appending a symbol leaves the feasible domain.
class InfeasibleExtension : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

// Greedy ran out of feasible symbols before reaching the horizon.
class DeadEnd : public CertifyError {
 public:
  explicit DeadEnd(std::size_t epoch)
      : CertifyError("no feasible symbol at epoch " + std::to_string(epoch)),
        epoch_(epoch) {}
  std::size_t epoch() const { return epoch_; }

 private:
  std::size_t epoch_;
};

class EmptyCandidateSet : public CertifyError {
 public:
  explicit EmptyCandidateSet(std::size_t epoch)
      : CertifyError("no symbol feasible both after G_{i-1} and as a "
                     "length-1 string at epoch " +
                     std::to_string(epoch)),
        epoch_(epoch) {}
  std::size_t epoch() const { return epoch_; }

 private:
  std::size_t epoch_;
};

class SizeGuard : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class GammaBelowOne : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class NonpositiveBound : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class SearchSpaceTooLarge : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class NotASetProblem : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

// A certified inequality failed on an instance whose assumptions were
// verified. This always indicates a bug.
class ChainViolation : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class ReproductionMismatch : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class ZeroIncrement : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class ItemAlreadyAssigned : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

// The objective has no value for the requested sequence (e.g. a tabulated
// instance that does not list it).
class UndefinedValue : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

class FormatError : public CertifyError {
 public:
  using CertifyError::CertifyError;
};

}  // namespace greedy_certify
