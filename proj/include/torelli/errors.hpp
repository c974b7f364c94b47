#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Binary operation on tensors with different truncation degrees.
class DegreeMismatchError : public Error
{
  public:
	using Error::Error;
};

/// An operation was called outside of its mathematical domain.
class DomainError : public Error
{
  public:
	using Error::Error;
};

/// Barcode or label data that does not fit the genus.
class EncodingError : public Error
{
  public:
	using Error::Error;
};

/// Malformed twist file; carries the 1-based line number.
class ParseError : public Error
{
  public:
	ParseError(int line, std::string const &what)
	    : Error("line " + std::to_string(line) + ": " + what), line_(line)
	{}

	int line() const { return line_; }

  private:
	int line_;
};

} // namespace torelli
