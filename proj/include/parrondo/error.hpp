#pragma once

#include <stdexcept>
#include <string>

namespace parrondo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied argument is outside its domain (gamma, trial count, scheme id, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A probability (or a game built from probabilities) falls outside [0, 1].
class RangeError : public Error {
public:
    using Error::Error;
};

/// The player state cannot be advanced by the requested game.
class StateError : public Error {
public:
    using Error::Error;
};

class UnsupportedGameError : public Error {
public:
    using Error::Error;
};

/// Markov chain is reducible because some transition probability is 0 or 1.
class DegenerateChainError : public Error {
public:
    using Error::Error;
};

/// A mixing path leaves the unit square.
class PathRangeError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace parrondo
