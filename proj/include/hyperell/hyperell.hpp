#pragma once

// Everything except json_io.hpp, which needs the vendored json.hpp.

#include "hyperell/annotate.hpp"
#include "hyperell/canonical.hpp"
#include "hyperell/certificate.hpp"
#include "hyperell/checks.hpp"
#include "hyperell/error.hpp"
#include "hyperell/graph.hpp"
#include "hyperell/lie.hpp"
#include "hyperell/lie_oracle.hpp"
#include "hyperell/lyndon.hpp"
#include "hyperell/parallel.hpp"
#include "hyperell/pushforward.hpp"
#include "hyperell/rational.hpp"
#include "hyperell/spectral.hpp"
#include "hyperell/trees.hpp"
