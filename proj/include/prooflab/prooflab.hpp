#pragma once

// Umbrella header.

#include "prooflab/audit.hpp"
#include "prooflab/config.hpp"
#include "prooflab/experiment.hpp"
#include "prooflab/formula.hpp"
#include "prooflab/generation.hpp"
#include "prooflab/matrix.hpp"
#include "prooflab/oracle_search.hpp"
#include "prooflab/parse.hpp"
#include "prooflab/proof.hpp"
#include "prooflab/prover.hpp"
#include "prooflab/prover_bfs.hpp"
#include "prooflab/render.hpp"
#include "prooflab/resolution.hpp"
#include "prooflab/rng.hpp"
#include "prooflab/sampling.hpp"
#include "prooflab/semantics.hpp"
#include "prooflab/theory.hpp"
#include "prooflab/tptp.hpp"
