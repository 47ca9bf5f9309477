#pragma once

#include "k3fm/bigint.hpp"
#include "k3fm/config.hpp"
#include "k3fm/errors.hpp"
#include "k3fm/kunneth.hpp"
#include "k3fm/lattice.hpp"
#include "k3fm/mukai.hpp"
#include "k3fm/nodal.hpp"
#include "k3fm/rational.hpp"
#include "k3fm/surface.hpp"
#include "k3fm/transform.hpp"
