#pragma once

// Umbrella header for the (u,v)-Calkin-Wilf forest library.

#include <cwf/ancestry.hpp>
#include <cwf/binary_code.hpp>
#include <cwf/contfrac.hpp>
#include <cwf/forest.hpp>
#include <cwf/mat2.hpp>
#include <cwf/params.hpp>
#include <cwf/rational.hpp>
#include <cwf/symmetry.hpp>
#include <cwf/tree.hpp>
#include <cwf/word.hpp>
