#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import print_function

import doctester
import os
import subprocess
import sys
import unittest

################################################################################

def _exe( cmd, wd ):
    return subprocess.Popen( cmd, cwd = wd, stdout = subprocess.PIPE, stderr = subprocess.PIPE ).communicate()

################################################################################

root = os.path.split( os.path.abspath( __file__ ) )[ 0 ]
os.chdir( root )

stdout, _ = _exe( [ "git", "describe", "--tags", "--match", "v*" ], root )
version = stdout.decode( "utf-8" ).strip() or "dev"

verstring = "__version__ = '%s'\n" % version

with open( "SSP/version.py", "w+" ) as fp:
    fp.write( verstring )

with open( "doc/version.py", "w+" ) as fp:
    fp.write( verstring )

################################################################################

unittest.TextTestRunner( verbosity = 2 ).run( doctester.SSPtests() )

################################################################################

stdout, stderr = _exe( [ "make", "html" ], os.path.abspath( "./doc" ) )

print( stdout.decode( "utf-8" ) )
print( stderr.decode( "utf-8" ), file = sys.stderr )
