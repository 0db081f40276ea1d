#ifndef KLAB_KLAB_HPP
#define KLAB_KLAB_HPP

#include "bits.hpp"
#include "chordality.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "falk.hpp"
#include "graph.hpp"
#include "ground.hpp"
#include "hypersolvable.hpp"
#include "identities.hpp"
#include "linalg.hpp"
#include "matroid.hpp"
#include "nbc.hpp"
#include "network.hpp"
#include "report.hpp"

#endif // KLAB_KLAB_HPP
