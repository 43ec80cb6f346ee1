#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

import io
import re

from ..core.exceptions import parseError, validationError
from ..core.logger import debug
from . import Circuit, Gate
from .labels import MNEMONIC

HEADER = re.compile( r"^#\s*n=(\d+)\s+extra=([01])\s*$" )

################################################################################
#
#    Text format
#
#        Header '# n=<n> extra=<0|1>', then one gate per line:
#
#            X > q0,q2
#            CX +q3 > q5,q6           (a CX may also target a live ancilla)
#            TOF +q2 -q3 [+q4 ...] > q5
#            SWAP q1 q4
#            AND +q0 -q1 > a0
#            ANDINV +q0 -q1 > a0
#            CPF [+q7 ...]
#
################################################################################

def serialize( c ):
    """
        Text of a circuit file.

            >>> from SSP.circuit import Circuit, TOF, SWAP
            >>> from SSP.circuit.functions import serialize
            >>> print( serialize( Circuit( 6, gates = [ TOF( "+q2", "+q3", 5 ), SWAP( 0, 4 ) ] ) ) )
            # n=6 extra=0
            TOF +q2 +q3 > q5
            SWAP q0 q4
    """
    lines = [ "# n=%d extra=%d" % ( c.n, int( c.extra ) ) ]
    lines.extend( str( gate ) for gate in c.gates )

    return "\n".join( lines )

def parse_gate( line ):
    """
        Parse a single gate line.

            >>> from SSP.circuit.functions import parse_gate
            >>> g = parse_gate( "AND +q0 -q1 > a0" )
            >>> g.kind, [ c.positive for c in g.controls ]
            ('And', [True, False])
            >>> g = parse_gate( "TOF +q0 -q1 +q2 > q5" )
            >>> g, g.toffoli
            (Gate( 'TOF +q0 -q1 +q2 > q5' ), 2)
            >>> parse_gate( "CPF +q0 +q1 -q3" ).toffoli
            1
            >>> parse_gate( "CX +q0 > a1" )
            Gate( 'CX +q0 > a1' )
            >>> parse_gate( "FOO +q0 > q1" )
            Traceback (most recent call last):
                ...
            parseError
    """
    if ">" in line:
        left, right = line.split( ">", 1 )
        targets = [ t.strip() for t in right.split( "," ) if t.strip() ]

    else:
        left, targets = line, []

    tokens = left.split()
    if not tokens:
        raise parseError( "empty gate" )

    mnemonic = tokens[ 0 ]
    if mnemonic not in MNEMONIC:
        raise parseError( "unknown mnemonic '%s'" % mnemonic )

    kind = MNEMONIC[ mnemonic ]

    if kind == "Swap":
        return Gate( kind, (), tokens[ 1: ] )

    for c in tokens[ 1: ]:
        if c[ :1 ] not in ( "+", "-" ):
            raise parseError( "control '%s' without polarity" % c )

    return Gate( kind, tokens[ 1: ], targets )

def parse( text ):
    """
        Parse a circuit file. Errors name the 1-based line.

        :raise parseError: on a malformed or inconsistent line

        Usage:

            >>> from SSP.circuit.functions import parse
            >>> c = parse( '''
            ...     # n=6 extra=0
            ...     CX +q3 > q1,q2,q5
            ...     AND +q0 -q1 > a0
            ...     CX +a0 > q4
            ...     ANDINV +q0 -q1 > a0
            ... ''' )
            >>> c
            Circuit object, n=6, 4 gates, 1 Toffoli
            >>> parse( "# n=2 extra=0\\nCX +q0 > q1\\nBAD q0" )
            Traceback (most recent call last):
                ...
            parseError: line 3: unknown mnemonic 'BAD'
    """
    c = None

    for lineno, line in enumerate( text.splitlines(), 1 ):
        line = line.strip()
        if line == "":
            continue

        if line.startswith( "#" ):
            header = HEADER.match( line )
            if header and c is None:
                c = Circuit( int( header.group( 1 ) ), header.group( 2 ) == "1" )
            continue

        if c is None:
            raise parseError( "line %d: gate before the '# n=<n> extra=<0|1>' header" % lineno )

        try:
            c.append( parse_gate( line ) )

        except validationError as e:
            raise parseError( "line %d: %s" % ( lineno, e ) )

    if c is None:
        raise parseError( "line %d: missing '# n=<n> extra=<0|1>' header" % len( text.splitlines() ) )

    debug.debug( "%d gates parsed" % len( c ), 1 )

    return c

def read_circuit( path ):
    with io.open( path, "r", encoding = "utf-8" ) as fp:
        return parse( fp.read() )

def write_circuit( c, path ):
    with io.open( path, "w", encoding = "utf-8" ) as fp:
        fp.write( serialize( c ) + "\n" )
