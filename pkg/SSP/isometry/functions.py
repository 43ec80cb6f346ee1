#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

import io

from ..core.exceptions import parseError
from ..core.functions import int_to_bits
from ..core.logger import debug

################################################################################
#
#    Mapping files
#
#        One line per row: '<row-index> <f-value-bitstring>'.
#
################################################################################

def format_mapping( f, l ):
    """
            >>> from SSP.isometry.functions import format_mapping
            >>> print( format_mapping( [ 3, 0 ], 2 ) )
            0 11
            1 00
    """
    return "\n".join( "%d %s" % ( i, int_to_bits( v, l ) ) for i, v in enumerate( f ) )

def parse_mapping( text ):
    """
        Parse the content of a mapping file.

        :return: Subspace value of every row, in row order.
        :rtype: list of int

        :raise parseError: on a malformed line or a missing row

        Usage:

            >>> from SSP.isometry.functions import parse_mapping
            >>> parse_mapping( "1 00\\n0 11\\n" )
            [3, 0]
            >>> parse_mapping( "0 11\\n2 00" )
            Traceback (most recent call last):
                ...
            parseError: rows [0, 1] expected, got [0, 2]
    """
    values = {}

    for lineno, line in enumerate( text.splitlines(), 1 ):
        line = line.split( "#", 1 )[ 0 ].strip()
        if line == "":
            continue

        tokens = line.split()
        if len( tokens ) == 1 and tokens[ 0 ].isdigit():
            tokens.append( "" )

        if len( tokens ) != 2 or not tokens[ 0 ].isdigit() or any( c not in "01" for c in tokens[ 1 ] ):
            raise parseError( "line %d: expected '<row> <bits>', got '%s'" % ( lineno, line ) )

        values[ int( tokens[ 0 ] ) ] = int( tokens[ 1 ], 2 ) if tokens[ 1 ] else 0

    rows = sorted( values )
    if rows != list( range( len( rows ) ) ):
        raise parseError( "rows %s expected, got %s" % ( list( range( len( rows ) ) ), rows ) )

    return [ values[ i ] for i in rows ]

def write_mapping( result, path ):
    with io.open( path, "w", encoding = "utf-8" ) as fp:
        fp.write( format_mapping( result.f, result.initial.l ) + "\n" )

def read_mapping( path ):
    with io.open( path, "r", encoding = "utf-8" ) as fp:
        return parse_mapping( fp.read() )

################################################################################
#
#    Cost reports
#
################################################################################

def format_cost_report( result ):
    """
        Measured and closed-form costs of a synthesis, as key=value lines.

            >>> from SSP.isometry import synthesize
            >>> from SSP.isometry.functions import format_cost_report
            >>> print( format_cost_report( synthesize( fig3 ) ) )
            mode=unrestricted
            s=7
            n=7
            toffoli=5
            bound_eq1=15
            bound=15
            ancilla_peak=2
            batches=2
            build_toffoli=1
            fix_toffoli=0
            pui_toffoli=4
    """
    def text( value ):
        return str( value.numerator ) if value.denominator == 1 else "%g" % float( value )

    lines = [
        "mode=%s" % result.mode,
        "s=%d" % result.s,
        "n=%d" % result.n,
        "toffoli=%d" % result.toffoli,
        "bound_eq1=%s" % text( result.bound_eq1 ),
        "bound=%s" % text( result.bound ),
        "ancilla_peak=%d" % result.ancilla_peak,
        "batches=%d" % result.stats.batches,
        "build_toffoli=%d" % result.stats.build_toffoli,
        "fix_toffoli=%d" % result.stats.fix_toffoli,
        "pui_toffoli=%d" % result.stats.pui_toffoli,
    ]

    return "\n".join( lines )

def write_cost_report( result, path ):
    debug.debug( "cost report written to %s" % path, 1 )

    with io.open( path, "w", encoding = "utf-8" ) as fp:
        fp.write( format_cost_report( result ) + "\n" )
