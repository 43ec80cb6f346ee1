#!/usr/bin/python
# -*- coding: UTF-8 -*-

# Exposes the doctest suite of doctester.py to pytest, one item per doctest.

import unittest

import pytest

import doctester

def _flatten( suite ):
    for t in suite:
        if isinstance( t, unittest.TestSuite ):
            for sub in _flatten( t ):
                yield sub
        else:
            yield t

cases = list( _flatten( doctester.SSPtests() ) )

@pytest.mark.parametrize( "case", cases, ids = [ c.id() for c in cases ] )
def test_doctest( case ):
    result = unittest.TestResult()
    case.run( result )
    problems = result.failures + result.errors
    if problems:
        pytest.fail( "\n".join( tb for _, tb in problems ), pytrace = False )
