#include "pcontract/error.hpp"

namespace pcontract {

std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::invalid_edge: return "invalid-edge";
        case errc::invalid_vertex: return "invalid-vertex";
        case errc::invalid_cycle: return "invalid-cycle";
        case errc::invalid_height: return "invalid-height";
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::not_applicable: return "not-applicable";
        case errc::precondition: return "precondition";
        case errc::threshold: return "threshold";
        case errc::consistency: return "consistency";
        case errc::capacity: return "capacity";
        case errc::parse: return "parse";
        case errc::io: return "io";
        case errc::internal_invariant: return "internal-invariant";
    }
    return "unknown";
}

error::error(errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pcontract
