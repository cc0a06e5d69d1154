#ifndef SEMINORM_VERSION_HPP
#define SEMINORM_VERSION_HPP

namespace seminorm {

inline constexpr const char* kToolVersion = "0.1.0";

}

#endif
