#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace desattack {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class UnknownStateError : public Error
{
public:
    using Error::Error;
};

class UnknownEventError : public Error
{
public:
    using Error::Error;
};

class NondeterminismError : public Error
{
public:
    using Error::Error;
};

/// The event universe violates one of the set inclusions
/// (E_c, E_ins, E_era within the observable events; E_ena within the controllable ones).
class UniverseError : public Error
{
public:
    using Error::Error;
};

class IllegalEnableError : public Error
{
public:
    using Error::Error;
};

/// A supervisor automaton has an unobservable transition that is not a self-loop.
class RealizationError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError( std::size_t line, const std::string& message )
        : Error( "line " + std::to_string( line ) + ": " + message ), line_{ line }
    {}

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class WordRejectedError : public Error
{
public:
    WordRejectedError( std::size_t position, std::string label, std::vector<std::string> available );

    /// 1-based index of the first label without an outgoing edge.
    [[nodiscard]] std::size_t position() const { return position_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] const std::vector<std::string>& available() const { return available_; }

private:
    std::size_t position_;
    std::string label_;
    std::vector<std::string> available_;
};

} // namespace desattack
