#ifndef SGTWIN_VERSION_HPP
#define SGTWIN_VERSION_HPP

#define SGTWIN_VERSION "0.1.0"

#endif
