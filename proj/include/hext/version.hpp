#ifndef HEXT_VERSION_HPP
#define HEXT_VERSION_HPP

namespace hext {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
