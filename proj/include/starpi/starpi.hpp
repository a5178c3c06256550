#pragma once

#include "starpi/exactmath/groebner.hpp"
#include "starpi/exactmath/linalg.hpp"
#include "starpi/exactmath/poly.hpp"
#include "starpi/exactmath/scalar.hpp"
#include "starpi/freestar/parser.hpp"
#include "starpi/freestar/substitute.hpp"
#include "starpi/freestar/word.hpp"
#include "starpi/images/certificate.hpp"
#include "starpi/images/membership.hpp"
#include "starpi/images/probe.hpp"
#include "starpi/images/ut3.hpp"
#include "starpi/io/serialize.hpp"
#include "starpi/pi/catalog.hpp"
#include "starpi/pi/codim.hpp"
#include "starpi/pi/identity.hpp"
#include "starpi/staralg/algebra.hpp"
#include "starpi/staralg/elements.hpp"
#include "starpi/staralg/matrix.hpp"
