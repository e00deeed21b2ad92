#ifndef ETASTRIP_VERSION_HPP
#define ETASTRIP_VERSION_HPP

namespace etastrip {

inline constexpr const char* kVersion = "1.0.0";

}

#endif
