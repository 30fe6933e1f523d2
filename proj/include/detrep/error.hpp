#pragma once

#include <stdexcept>
#include <string>

namespace detrep {

enum class Errc {
    malformed_scalar,
    zero_denominator,
    symbolic_parameters,
    singular_curve,
    mixed_forms,
    not_skew,
    singular_transform,
    not_nilpotent,
    singular_ax,
    precondition_violated,
    unbound_parameter,
    not_self_adjoint,
    non_real_point,
    point_not_on_curve,
    not_a_root,
    point_not_on_selfadjoint_locus,
    not_hermitian,
    singular_p1,
    constraints_violated,
    relation_violated,
    not_canonical_pair,
    not_on_curve,
    bad_schema,
    internal,
};

const char* errc_name(Errc c);

/// Domain error. `code()` is stable and is what the CLI reports as "error".
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

} // namespace detrep
