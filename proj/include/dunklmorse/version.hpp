#ifndef DUNKLMORSE_VERSION_HPP
#define DUNKLMORSE_VERSION_HPP

namespace dunklmorse {

inline constexpr const char* version_string = "1.0.0";

}

#endif
