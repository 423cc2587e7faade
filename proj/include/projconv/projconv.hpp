#ifndef PROJCONV_PROJCONV_HPP
#define PROJCONV_PROJCONV_HPP

#include "projconv/error.hpp"
#include "projconv/kernel.hpp"
#include "projconv/projective.hpp"
#include "projconv/cone.hpp"
#include "projconv/convexset.hpp"
#include "projconv/multiconvex.hpp"
#include "projconv/duality.hpp"
#include "projconv/oracle.hpp"
#include "projconv/scene.hpp"
#include "projconv/random.hpp"
#include "projconv/io.hpp"
#include "projconv/svg.hpp"
#include "projconv/check.hpp"

#endif  // PROJCONV_PROJCONV_HPP
