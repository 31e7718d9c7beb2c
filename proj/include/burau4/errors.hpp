#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burau4
{

/// Syntax error in a word; position is a 0-based character offset.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string &what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace burau4
