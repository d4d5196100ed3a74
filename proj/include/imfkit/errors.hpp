// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The imfkit Authors

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imfkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An envelope or mask length needs more extrema than the signal has.
class TooFewExtrema : public Error {
 public:
  using Error::Error;
};

class ZeroVarianceSignal : public Error {
 public:
  using Error::Error;
};

class MaskTooLong : public Error {
 public:
  using Error::Error;
};

// Ingestion errors carry the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NonUniformSampling : public ParseError {
 public:
  using ParseError::ParseError;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace imfkit
