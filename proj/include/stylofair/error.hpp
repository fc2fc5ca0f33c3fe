// Copyright 2026 The stylofair Authors
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

namespace stylofair {

// Broad failure classes; the CLI maps them onto exit codes.
enum class ErrorClass { kUsage, kData, kNetwork };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), class_(cls) {}
  ErrorClass error_class() const noexcept { return class_; }

 private:
  ErrorClass class_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorClass::kUsage, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorClass::kData, what) {}
};

// Transport-level failure. Retryable unless a subclass says otherwise.
class NetworkError : public Error {
 public:
  explicit NetworkError(const std::string& what, bool retryable = true)
      : Error(ErrorClass::kNetwork, what), retryable_(retryable) {}
  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

class RateLimitError : public NetworkError {
 public:
  RateLimitError(const std::string& what, double retry_after_seconds)
      : NetworkError(what), retry_after_(retry_after_seconds) {}
  // Seconds the server asked us to wait; 0 when it did not say.
  double retry_after() const noexcept { return retry_after_; }

 private:
  double retry_after_;
};

class ThreadGoneError : public NetworkError {
 public:
  explicit ThreadGoneError(const std::string& what) : NetworkError(what, false) {}
};

class AccountUnavailableError : public NetworkError {
 public:
  explicit AccountUnavailableError(const std::string& what)
      : NetworkError(what, false) {}
};

class SplitInfeasibleError : public DataError {
 public:
  using DataError::DataError;
};

class PoolExhaustedError : public DataError {
 public:
  PoolExhaustedError(const std::string& what, int shortfall)
      : DataError(what), shortfall_(shortfall) {}
  int shortfall() const noexcept { return shortfall_; }

 private:
  int shortfall_;
};

// Raised by statistical tests whose statistic is undefined for the input
// (e.g. every observation tied).
class UndefinedTestError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace stylofair
