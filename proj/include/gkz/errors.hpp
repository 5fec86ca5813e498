#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkz {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSublattice : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };

struct ZeroColumn : Error { using Error::Error; };
struct LatticeNotSpanned : Error { using Error::Error; };
struct NotPointed : Error { using Error::Error; };
struct NotAFacet : Error { using Error::Error; };
struct UnknownFace : Error { using Error::Error; };
struct NotClosedComplement : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

struct BudgetExceeded : Error {
    explicit BudgetExceeded(std::uint64_t explored)
        : Error("search budget exceeded after " + std::to_string(explored) + " nodes"),
          nodes(explored) {}
    std::uint64_t nodes;
};

} // namespace gkz
