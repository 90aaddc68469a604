#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hgs {

enum class ErrorCode {
  NotAssociative,
  NoIdentityAtZero,
  NotLatinSquare,
  BadTable,
  NotAutomorphism,
  NotNormal,
  NotASubgroup,
  NotAHomomorphism,
  NotRegular,
  NotNormalized,
  OrderTooLargeForOracle,
  BraceLawViolated,
  IdentityMismatch,
  NotAnIdeal,
  NotALeftIdeal,
  NotBraceAutomorphismAction,
  NotIntoNormModCenter,
  NotClassTwo,
  NotAbelian,
  BadParameters,
  OrderTooLarge,
  CatalogIncompleteForOrder,
  NotBiSkew,
  InternalInconsistency,
  UnsupportedOrder,
  UnknownName,
  ParseError,
  ValidationError,
  IoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OrderTooLargeForOracle: return "OrderTooLargeForOracle";
    case ErrorCode::BraceLawViolated: return "BraceLawViolated";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotALeftIdeal: return "NotALeftIdeal";
    case ErrorCode::NotBraceAutomorphismAction: return "NotBraceAutomorphismAction";
    case ErrorCode::NotIntoNormModCenter: return "NotIntoNormModCenter";
    case ErrorCode::NotClassTwo: return "NotClassTwo";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::CatalogIncompleteForOrder: return "CatalogIncompleteForOrder";
    case ErrorCode::NotBiSkew: return "NotBiSkew";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the code
/// identifies the failure class and the message names the offending data.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a brace law check fails; carries the first offending triple.
class BraceLawError : public Error {
 public:
  BraceLawError(std::size_t a, std::size_t b, std::size_t c)
      : Error(ErrorCode::BraceLawViolated,
              "law fails at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                  std::to_string(c) + ")"),
        a_(a), b_(b), c_(c) {}

  std::size_t a() const noexcept { return a_; }
  std::size_t b() const noexcept { return b_; }
  std::size_t c() const noexcept { return c_; }

 private:
  std::size_t a_, b_, c_;
};

/// Parse failure with a 1-based source position (0 when the failure is structural).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + detail),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InternalInconsistency, what);
}

}  // namespace detail
}  // namespace hgs
