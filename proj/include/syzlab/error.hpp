#pragma once

#include <stdexcept>
#include <string>

namespace syzlab {

enum class Errc {
    dimension_mismatch,
    rel_not_in_span,
    not_finite_length,
    not_artinian,
    zero_module,
    depth_zero,
    depth_nonzero,
    parse_error,
    nonhomogeneous_ideal,
    unknown_name,
    io_error,
    internal,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Errc::rel_not_in_span: return "REL_NOT_IN_SPAN";
    case Errc::not_finite_length: return "NOT_FINITE_LENGTH";
    case Errc::not_artinian: return "NOT_ARTINIAN";
    case Errc::zero_module: return "ZERO_MODULE";
    case Errc::depth_zero: return "DEPTH_ZERO";
    case Errc::depth_nonzero: return "DEPTH_NONZERO";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::nonhomogeneous_ideal: return "NONHOMOGENEOUS_IDEAL";
    case Errc::unknown_name: return "UNKNOWN_NAME";
    case Errc::io_error: return "IO_ERROR";
    case Errc::internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse errors carry a source position so session files can report line/column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(Errc::parse_error,
                what + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line_(line), col_(col)
    {
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace syzlab
