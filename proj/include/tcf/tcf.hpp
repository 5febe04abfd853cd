#pragma once

// Umbrella header: tight-cycle-free hypergraph constructions, detection,
// packing and certification.

#include "tcf/binomial.hpp"
#include "tcf/certificate.hpp"
#include "tcf/confined.hpp"
#include "tcf/constructions.hpp"
#include "tcf/errors.hpp"
#include "tcf/gadget.hpp"
#include "tcf/hgf.hpp"
#include "tcf/hypergraph.hpp"
#include "tcf/linear_transform.hpp"
#include "tcf/metadata.hpp"
#include "tcf/packing.hpp"
#include "tcf/projective_plane.hpp"
#include "tcf/rng.hpp"
#include "tcf/tight_cycle.hpp"
#include "tcf/version.hpp"
