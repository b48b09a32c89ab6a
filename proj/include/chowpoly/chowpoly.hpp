#pragma once

#include "chowpoly/error.hpp"
#include "chowpoly/poly.hpp"
#include "chowpoly/abpoly.hpp"
#include "chowpoly/poset.hpp"
#include "chowpoly/rlabel.hpp"
#include "chowpoly/parallel.hpp"
#include "chowpoly/extab.hpp"
#include "chowpoly/chow.hpp"
#include "chowpoly/braid.hpp"
#include "chowpoly/build.hpp"
#include "chowpoly/io.hpp"
