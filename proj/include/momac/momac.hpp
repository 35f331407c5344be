#pragma once

#include "momac/core.hpp"
#include "momac/exact.hpp"
#include "momac/face_ring.hpp"
#include "momac/hochster.hpp"
#include "momac/io.hpp"
#include "momac/koszul.hpp"
#include "momac/poset.hpp"
#include "momac/torus.hpp"
