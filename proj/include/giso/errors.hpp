#pragma once

#include <stdexcept>
#include <string>

namespace giso {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// -- graph construction / validation ---------------------------------------

class AsymmetricMatrix : public Error { public: using Error::Error; };
class SelfLoop         : public Error { public: using Error::Error; };
class EmptyMatrix      : public Error { public: using Error::Error; };
class InvalidParams    : public Error { public: using Error::Error; };

// -- shape mismatches --------------------------------------------------------

class LengthMismatch    : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class OrderMismatch     : public Error { public: using Error::Error; };
class IndexOutOfRange   : public Error { public: using Error::Error; };
class LevelMismatch     : public Error { public: using Error::Error; };
class SizeMismatch      : public Error { public: using Error::Error; };
class OrderTooLarge     : public Error { public: using Error::Error; };

// -- file format parsing -----------------------------------------------------

class ParseError : public Error { public: using Error::Error; };

class InvalidChar      : public ParseError { public: using ParseError::ParseError; };
class TruncatedBits    : public ParseError { public: using ParseError::ParseError; };
class OversizeOrder    : public ParseError { public: using ParseError::ParseError; };
class TrailingData     : public ParseError { public: using ParseError::ParseError; };
class MalformedHeader  : public ParseError { public: using ParseError::ParseError; };
class VertexOutOfRange : public ParseError { public: using ParseError::ParseError; };

} // namespace giso
