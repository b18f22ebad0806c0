#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrcft {

enum class Errc {
    invalid_argument,
    not_coprime,
    internal_error,
    invalid_half_system,
    too_large,
    invalid_homomorphism,
    invalid_discriminant,
    ramified,
    ramified_unsupported,
    not_in_takagi_group,
    witness_not_found,
};

std::string_view to_string(Errc code) noexcept;

// Domain error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace qrcft
