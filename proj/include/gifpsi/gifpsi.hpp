#pragma once

// Umbrella header for the GIF-psi-NLS library: fuzzy norm construction and
// validation, crisp alpha-norm extraction, sequence diagnostics and
// continuity checks, plus the config-driven runner.

#include "gifpsi/alpha_norm.hpp"
#include "gifpsi/companion.hpp"
#include "gifpsi/config.hpp"
#include "gifpsi/connective_axioms.hpp"
#include "gifpsi/connectives.hpp"
#include "gifpsi/continuity.hpp"
#include "gifpsi/corpus.hpp"
#include "gifpsi/errors.hpp"
#include "gifpsi/json_io.hpp"
#include "gifpsi/map_spec.hpp"
#include "gifpsi/membership.hpp"
#include "gifpsi/point_set.hpp"
#include "gifpsi/random.hpp"
#include "gifpsi/report.hpp"
#include "gifpsi/runner.hpp"
#include "gifpsi/sequence.hpp"
#include "gifpsi/sequence_checks.hpp"
#include "gifpsi/space.hpp"
#include "gifpsi/subsequence.hpp"
#include "gifpsi/validate.hpp"
#include "gifpsi/version.hpp"
