#!/usr/bin/python
# -*- coding: UTF-8 -*-

################################################################################
#
#    Storage
#
################################################################################

WORD_BITS = 64

################################################################################
#
#    Limits
#
################################################################################

LEAKAGE_MATERIALIZE_LIMIT = 2 ** 20
PERMUTATION_WIDTH_LIMIT = 20
BATCH_TRACE_LIMIT = 10 ** 6
OFF_SUPPORT_SAMPLES = 64
LEMMA_MAX_BITS = 24

################################################################################
#
#    Default values
#
################################################################################

DEFAULT_ANGLE_BITS = 20
DEFAULT_SAMPLE_SEED = 1337

RNG_ALGORITHM = "numpy.PCG64"
SAMPLER_VERSION = "rejection-v1"

################################################################################
#
#    Modes
#
################################################################################

UNRESTRICTED = "unrestricted"
RESTRICTED = "restricted"
RESTRICTED_PHASE = "restricted_phase"
MALVETTI = "malvetti"
FOMICHEV = "fomichev"

PUI_MODES = ( UNRESTRICTED, RESTRICTED )
SYNTHESIS_MODES = ( UNRESTRICTED, RESTRICTED_PHASE, MALVETTI )
ISOMETRY_MODES = ( UNRESTRICTED, RESTRICTED_PHASE, MALVETTI, FOMICHEV )

################################################################################
#
#    Exit codes of the command line
#
################################################################################

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFICATION = 2
EXIT_IO = 3
