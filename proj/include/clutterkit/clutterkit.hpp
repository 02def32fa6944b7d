#pragma once

// Umbrella header: exact clutter-theoretic machinery end to end — blockers,
// minors, idealness via rational polyhedral computation, cuboids, binary
// matroids and their sums, cycle covers, projective-geometry embeddings and
// constructive small-denominator packings.

#include "clutterkit/binary_matroid.hpp"
#include "clutterkit/binary_space.hpp"
#include "clutterkit/bitvector.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/cores.hpp"
#include "clutterkit/cuboids.hpp"
#include "clutterkit/cycle_covers.hpp"
#include "clutterkit/dd.hpp"
#include "clutterkit/errors.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/io.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/pg_embedding.hpp"
#include "clutterkit/polyhedra.hpp"
#include "clutterkit/rational.hpp"
