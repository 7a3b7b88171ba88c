#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The qauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace qauction {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A caller asked for the pointwise density of a strategy that has an atom.
class NoPointwiseDensity : public Error
{
public:
  NoPointwiseDensity()
    : Error("no-pointwise-density: strategy has an atom (Dirac component)")
  {}
};

/// Two bidders could hold the same log-price with positive probability.
class TieAmbiguity : public Error
{
public:
  using Error::Error;
};

/// An argument lies outside the domain of a function.
class DomainError : public Error
{
public:
  using Error::Error;
};

/// Malformed input: bad strategy parameters, bad JSON field, etc.
/// The message starts with the path of the offending field when known.
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// A numerical routine failed to reach its requested tolerance.
class NumericalFailure : public Error
{
public:
  NumericalFailure(std::string const &what, double achieved_tolerance)
    : Error(what + " (achieved tolerance " + std::to_string(achieved_tolerance) + ")")
    , achieved_tolerance_{achieved_tolerance}
  {}

  double achieved_tolerance() const noexcept
  {
    return achieved_tolerance_;
  }

private:
  double achieved_tolerance_;
};

}  // namespace qauction
