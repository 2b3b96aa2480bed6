#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcontract {

enum class errc {
    invalid_edge,
    invalid_vertex,
    invalid_cycle,
    invalid_height,
    invalid_parameter,
    not_applicable,
    precondition,
    threshold,
    consistency,
    capacity,
    parse,
    io,
    internal_invariant,
};

std::string_view to_string(errc code) noexcept;

/// Every recoverable failure in the library surfaces as this exception; the
/// code says which contract was violated.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what);

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace pcontract
