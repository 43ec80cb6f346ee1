#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

import io

import numpy as np

from ..core.exceptions import invalidParameter, parseError
from ..core.logger import debug
from . import Tableau

################################################################################
#
#    State files
#
#        One record per line: a bitstring, optionally followed by a sign token
#        '+' or '-'. '#' starts a comment; blank lines are ignored.
#
################################################################################

def parse_state( text ):
    """
        Parse the content of a state file.

        :param text: Content of the state file.
        :type text: str

        :return: Tableau with the rows and signs of the file.
        :rtype: Tableau

        :raise parseError: on a malformed line, with its 1-based number

        Usage:

            >>> from SSP.tableau.functions import parse_state
            >>> t = parse_state( '''
            ...     # two rows
            ...     0110 -
            ...     1011
            ... ''' )
            >>> t.signs
            [-1, 1]
            >>> parse_state( "0110\\n10x1" )
            Traceback (most recent call last):
                ...
            parseError: line 2: '10x1' is not a bitstring
    """
    rows = []
    signs = []
    width = None

    for lineno, line in enumerate( text.splitlines(), 1 ):
        line = line.split( "#", 1 )[ 0 ].strip()
        if line == "":
            continue

        tokens = line.split()
        bits = tokens[ 0 ]

        if any( c not in "01" for c in bits ):
            raise parseError( "line %d: '%s' is not a bitstring" % ( lineno, bits ) )

        if len( tokens ) > 2 or ( len( tokens ) == 2 and tokens[ 1 ] not in ( "+", "-" ) ):
            raise parseError( "line %d: expected '<bits> [+|-]', got '%s'" % ( lineno, line ) )

        if width is None:
            width = len( bits )

        elif len( bits ) != width:
            raise parseError( "line %d: %d bits, expected %d" % ( lineno, len( bits ), width ) )

        rows.append( bits )
        signs.append( -1 if len( tokens ) == 2 and tokens[ 1 ] == "-" else 1 )

    if not rows:
        raise parseError( "line %d: no state record found" % ( len( text.splitlines() ) ) )

    debug.debug( "%d state records of %d bits parsed" % ( len( rows ), width ), 1 )

    return Tableau( rows, signs )

def read_state_file( path ):
    with io.open( path, "r", encoding = "utf-8" ) as fp:
        return parse_state( fp.read() )

def format_state( t, signs = True ):
    """
        Text of a state file for the tableau (extra column excluded).

            >>> from SSP.tableau import Tableau
            >>> from SSP.tableau.functions import format_state
            >>> print( format_state( Tableau( [ "011", "100" ], [ 1, -1 ] ) ) )
            # s=2 n=3
            011 +
            100 -
    """
    lines = [ "# s=%d n=%d" % ( t.s, t.n ) ]

    for bits, sign in zip( t.matrix()[ :, :t.n ].tolist(), t.signs ):
        text = "".join( map( str, bits ) )
        if signs:
            text += " +" if sign == 1 else " -"

        lines.append( text )

    return "\n".join( lines )

def write_state_file( t, path ):
    with io.open( path, "w", encoding = "utf-8" ) as fp:
        fp.write( format_state( t ) + "\n" )

################################################################################
#
#    Random supports
#
################################################################################

def random_support( s, n, rng = None, signs = False ):
    """
        Sample `s` distinct `n`-bit basis states uniformly at random.

        Widths up to 20 bits draw without replacement from the full range;
        wider ones draw random rows and reject repeats, keeping the first
        occurrence, until `s` rows are collected. Both paths only depend on
        the generator, so a seeded generator gives reproducible supports.

        :param s: Number of rows.
        :type s: int

        :param n: Number of qubits.
        :type n: int

        :param rng: Generator or seed for `numpy.random.default_rng`.
        :type rng: numpy.random.Generator or int

        :param signs: Also draw uniform random signs.
        :type signs: boolean

        :raise invalidParameter: if s > 2^n

        Usage:

            >>> import numpy as np
            >>> from SSP.tableau.functions import random_support
            >>> t = random_support( 100, 40, np.random.default_rng( 5 ) )
            >>> t
            Tableau object, s=100, n=40, l=7
            >>> len( set( r.value for r in t.rows ) )
            100
            >>> random_support( 100, 40, 5 ) == random_support( 100, 40, 5 )
            True
            >>> random_support( 9, 3, 5 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    rng = np.random.default_rng( rng )

    if s < 1 or ( n < 63 and s > 2 ** n ):
        raise invalidParameter( "cannot draw %d distinct rows on %d qubits" % ( s, n ) )

    if n <= 20:
        values = rng.choice( 2 ** n, size = s, replace = False ).astype( np.int64 )
        bits = ( ( values[ :, None ] >> np.arange( n - 1, -1, -1, dtype = np.int64 ) ) & 1 ).astype( np.uint8 )

    else:
        bits = np.zeros( ( 0, n ), dtype = np.uint8 )
        while len( bits ) < s:
            draw = rng.integers( 0, 2, size = ( s - len( bits ), n ), dtype = np.uint8 )
            bits = np.vstack( [ bits, draw ] )

            _, first = np.unique( np.packbits( bits, axis = 1 ), axis = 0, return_index = True )
            bits = bits[ np.sort( first ) ]

    sign_list = None
    if signs:
        sign_list = ( 1 - 2 * rng.integers( 0, 2, size = s ) ).tolist()

    debug.debug( "random support: s=%d, n=%d" % ( s, n ), 2 )

    return Tableau.from_matrix( bits, sign_list )
