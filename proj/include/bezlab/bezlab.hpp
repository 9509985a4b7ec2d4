#pragma once

// Exact diagonal reduction over commutative Bezout rings: ring arithmetic
// with gcd certificates, stable-range witness searches, Toeplitz transforms,
// Smith normal forms, neat/clean decompositions and an exhaustive
// finite-ring oracle.

#include "bezlab/element.hpp"
#include "bezlab/error.hpp"
#include "bezlab/lab.hpp"
#include "bezlab/matrix.hpp"
#include "bezlab/neat.hpp"
#include "bezlab/ring.hpp"
#include "bezlab/ring_ops.hpp"
#include "bezlab/scan.hpp"
#include "bezlab/serialize.hpp"
#include "bezlab/stable_range.hpp"
#include "bezlab/toeplitz.hpp"
