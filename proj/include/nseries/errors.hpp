#ifndef NSERIES_ERRORS_HPP
#define NSERIES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nseries
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Mismatched alphabet, grade bound, monoid context or vector length.
class DimensionError : public Error
{
public:
    using Error::Error;
};

class NotAUnitError : public Error
{
public:
    using Error::Error;
};

class NotInIdealError : public Error
{
public:
    using Error::Error;
};

class DomainError : public Error
{
public:
    using Error::Error;
};

class ResourceError : public Error
{
public:
    using Error::Error;
};

class PreconditionError : public Error
{
public:
    using Error::Error;
};

class IncompleteTableError : public Error
{
public:
    using Error::Error;
};

class TruncationOverflowError : public Error
{
public:
    using Error::Error;
};

class NotDecomposableError : public Error
{
public:
    using Error::Error;
};

class InconsistencyError : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), m_pos(pos)
    {
    }

    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

} // namespace nseries

#endif
