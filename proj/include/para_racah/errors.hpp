#pragma once

#include <stdexcept>
#include <string>

namespace pararacah {

enum class Errc {
    ok = 0,
    parse_error,
    regime_violation,
    degenerate_parameters,
    index_out_of_range,
    pole_at_x,
    alpha_zero_branch,
    not_block_degenerate,
    colliding_nodes,
    convergence_failure,
    zero_at_node,
    negative_offdiagonal,
    check_failed,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(Errc::parse_error, w) {}
};
struct RegimeViolation : Error {
    explicit RegimeViolation(const std::string& w) : Error(Errc::regime_violation, w) {}
};
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& w) : Error(Errc::degenerate_parameters, w) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& w) : Error(Errc::index_out_of_range, w) {}
};
struct PoleAtX : Error {
    explicit PoleAtX(const std::string& w) : Error(Errc::pole_at_x, w) {}
};
struct AlphaZeroBranch : Error {
    explicit AlphaZeroBranch(const std::string& w) : Error(Errc::alpha_zero_branch, w) {}
};
struct NotBlockDegenerate : Error {
    explicit NotBlockDegenerate(const std::string& w) : Error(Errc::not_block_degenerate, w) {}
};
struct CollidingNodes : Error {
    explicit CollidingNodes(const std::string& w) : Error(Errc::colliding_nodes, w) {}
};
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w) : Error(Errc::convergence_failure, w) {}
};
struct ZeroAtNode : Error {
    explicit ZeroAtNode(const std::string& w) : Error(Errc::zero_at_node, w) {}
};
struct NegativeOffdiagonal : Error {
    explicit NegativeOffdiagonal(const std::string& w) : Error(Errc::negative_offdiagonal, w) {}
};

} // namespace pararacah
