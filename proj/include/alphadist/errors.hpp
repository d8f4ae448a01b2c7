#ifndef ALPHADIST_ERRORS_HPP
#define ALPHADIST_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphadist {

// Malformed textual input (graph6 / edge list). Carries the byte offset of
// the first offending byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Distance computations require connected input; there is no infinite-distance
// sentinel anywhere in the library.
class disconnected_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolver exceeded its iteration cap.
class convergence_error : public std::runtime_error {
public:
    convergence_error(std::size_t eigenvalue_index, double residual)
        : std::runtime_error("eigensolver did not converge at index " +
                             std::to_string(eigenvalue_index) +
                             ", residual " + std::to_string(residual)),
          index_(eigenvalue_index), residual_(residual) {}

    std::size_t index() const noexcept { return index_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t index_;
    double residual_;
};

} // namespace alphadist

#endif
