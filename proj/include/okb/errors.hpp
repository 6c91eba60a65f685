#ifndef OKB_ERRORS_HPP
#define OKB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace okb {

// Error taxonomy shared by the library and the CLI exit-code contract:
//   input_error      -> exit 2   malformed or inconsistent input
//   assumption_error -> exit 3   a standing mathematical assumption is violated
//   cap_error        -> exit 4   a documented resource cap was exceeded
//   internal_error   -> exit 5   an internal invariant failed (always a bug)

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct assumption_error : std::runtime_error {
    explicit assumption_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// Hard caps for the exact conversion kernels. The defaults are sized for
// desk-scale inputs; the CLI can override them from the environment.
struct ResourceCaps {
    int max_vertices = 500;
    int max_affine_dim = 8;
    long max_level = 100000;
};

ResourceCaps& caps();

}  // namespace okb

#endif
