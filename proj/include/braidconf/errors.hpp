#ifndef BRAIDCONF_ERRORS_HPP
#define BRAIDCONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidconf {

struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_found : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace braidconf

#endif
