#ifndef EPKIT_VERSION_HPP
#define EPKIT_VERSION_HPP

#define EPKIT_VERSION_MAJOR 0
#define EPKIT_VERSION_MINOR 1
#define EPKIT_VERSION_PATCH 0
#define EPKIT_VERSION_STRING "0.1.0"

namespace epkit {

inline const char* version() { return EPKIT_VERSION_STRING; }

}  // namespace epkit

#endif
