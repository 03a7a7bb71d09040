#pragma once

#include <stdexcept>

namespace pseudospin
{
//! Argument outside the domain of a function or solver.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Incident energy equals the barrier height: the interior wave vector
//! vanishes and only flat-band states remain inside the scatterer.
class FlatBandDegenerate : public DomainError
{
  public:
    using DomainError::DomainError;
};

//! A closed-form approximation was evaluated on its pole.
class PoleError : public DomainError
{
  public:
    using DomainError::DomainError;
};

class NoResonance : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class NoPeak : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};
} // namespace pseudospin
