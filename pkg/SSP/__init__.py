#!/usr/bin/python
# -*- coding: UTF-8 -*-

################################################################################
#
#    Python library for sparse quantum state preparation
#    
#    
#    A sparse state on n qubits has s << 2^n non-zero amplitudes. It is
#    prepared in two stages: a dense state is prepared on l = ceil( log2( s ) )
#    qubits, then a Clifford+Toffoli isometry moves the s basis states of the
#    dense register onto the support of the sparse state.
#    
#    The library synthesizes this isometry (with partial unary iteration
#    over batches of rows), checks it on a classical simulation of the basis
#    states, and estimates the Toffoli and qubit cost of the whole pipeline:
#    
#        SSP.tableau   : support of the state as a table of rows
#        SSP.circuit   : Clifford+Toffoli circuits and their text format
#        SSP.pui       : partial unary iteration over an address interval
#        SSP.isometry  : synthesis of the isometry (three algorithms)
#        SSP.simverify : basis-state simulation and verification
#        SSP.costmodel : closed-form costs and the Hamming-weight lemma
#        SSP.cli       : command line
# 
################################################################################

from .tableau import Tableau
from .circuit import Circuit
from .isometry import synthesize
from .costmodel import PipelineParams, estimate

try:
    from .version import __version__
except ImportError:
    __version__ = "dev"
