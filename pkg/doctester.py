#!/usr/bin/python
# -*- coding: UTF-8 -*-

import copy
import doctest
import os
import sys
import unittest

import SSP.core.functions
import SSP.core.logger

import SSP.tableau.__init__
import SSP.tableau.functions

import SSP.circuit.__init__
import SSP.circuit.functions

import SSP.pui.__init__
import SSP.pui.functions

import SSP.simverify.__init__
import SSP.simverify.functions

import SSP.isometry.__init__
import SSP.isometry.functions

import SSP.costmodel.__init__
import SSP.costmodel.functions

import SSP.cli.__init__
import SSP.cli.functions

from SSP.tableau import Tableau

modules = [
    SSP.core.functions,
    SSP.core.logger,
    SSP.tableau.__init__,
    SSP.tableau.functions,
    SSP.circuit.__init__,
    SSP.circuit.functions,
    SSP.pui.__init__,
    SSP.pui.functions,
    SSP.simverify.__init__,
    SSP.simverify.functions,
    SSP.isometry.__init__,
    SSP.isometry.functions,
    SSP.costmodel.__init__,
    SSP.costmodel.functions,
    SSP.cli.__init__,
    SSP.cli.functions,
]

flags = doctest.ELLIPSIS | doctest.NORMALIZE_WHITESPACE | doctest.IGNORE_EXCEPTION_DETAIL

def SSPtests():
    tests = unittest.TestSuite()

    # Seven rows on seven qubits, subspace register of three qubits
    support = Tableau( [ "0111011", "1110111", "1001010", "0110110", "1011101", "1001111", "1111010" ] )

    var = {
        "fig2": support,
        "fig3": support,
    }

    def setUpfunction( test ):
        test.globs.update( copy.deepcopy( var ) )

    for module in modules:
        tests.addTests( doctest.DocTestSuite( module, var, setUp = setUpfunction, optionflags = flags ) )

    root = os.path.split( os.path.abspath( __file__ ) )[ 0 ]
    pages = [ "doc/Properties.rst", "doc/Validation.rst" ]

    if os.environ.get( "SSP_SLOW" ):
        pages.append( "doc/Scaling.rst" )

    for page in pages:
        tests.addTests( doctest.DocFileSuite( os.path.join( root, page ), module_relative = False, globs = var, setUp = setUpfunction, optionflags = flags ) )

    return tests

if __name__ == "__main__":
    ret = not unittest.TextTestRunner( verbosity = 2 ).run( SSPtests() ).wasSuccessful()
    sys.exit( ret )
else:
    def load_tests( loader, tests, ignore ):
        return SSPtests()
