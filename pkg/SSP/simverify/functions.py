#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import namedtuple

import numpy as np

from ..core.config import DEFAULT_SAMPLE_SEED, OFF_SUPPORT_SAMPLES
from ..core.exceptions import verificationFailed, widthMismatch
from ..core.logger import debug
from . import simulate_many

VerificationReport = namedtuple( "VerificationReport", [ "rows", "samples", "outputs", "signs" ] )

def _text( bits ):
    return "".join( str( int( b ) ) for b in bits )

def dense_rows( f, l, width ):
    """
        Rows |f(i)>|0...0> of the subspace register, as a ( s, width ) array.

            >>> from SSP.simverify.functions import dense_rows
            >>> dense_rows( [ 3, 0 ], 2, 4 ).tolist()
            [[1, 1, 0, 0], [0, 0, 0, 0]]
    """
    f = np.asarray( f, dtype = np.int64 )
    ret = np.zeros( ( len( f ), width ), dtype = np.uint8 )

    if l > 0:
        ret[ :, :l ] = ( f[ :, None ] >> np.arange( l - 1, -1, -1, dtype = np.int64 ) ) & 1

    return ret

def support_rows( t, width ):
    """
        Rows |C_i> of a tableau on a register of the given width; when the
        register is one wider than the tableau, the extra qubit is set to 1.
    """
    ret = np.zeros( ( t.s, width ), dtype = np.uint8 )
    ret[ :, :t.n ] = t.matrix()[ :, :t.n ]

    if width == t.n + 1:
        ret[ :, t.n ] = 1

    return ret

def verify_rows( c, t, f, signs = None, isometry = False, samples = OFF_SUPPORT_SAMPLES, seed = DEFAULT_SAMPLE_SEED ):
    """
        Check a synthesized circuit row by row with the simulation oracle.

        In the forward direction every |C_i> (extra qubit set to 1 on circuits
        carrying it) must map to a_i|f(i)>|0>; with `isometry = True` the
        circuit is the inverse and |f(i)>|0> must map to a_i|C_i>. A set of
        random off-support inputs is simulated as well; together with the
        rows, all their images must be distinct.

        :param c: Circuit to check.
        :type c: Circuit

        :param t: Input support.
        :type t: Tableau

        :param f: Subspace value of every row.
        :type f: list of int

        :param signs: Expected sign of every row (all +1 when None).
        :type signs: list of int

        :return: Report with the simulated row images.
        :rtype: VerificationReport

        :raise verificationFailed: with the first failing row as witness

        Usage:

            >>> from SSP.tableau import Tableau
            >>> from SSP.circuit import Circuit, CX, X
            >>> from SSP.simverify.functions import verify_rows
            >>> t = Tableau( [ "0101", "1000" ] )
            >>> c = Circuit( 4, gates = [ CX( "+q0", [ 1, 3 ] ), X( 1, 3 ) ] )
            >>> verify_rows( c, t, [ 1, 1 ] )
            Traceback (most recent call last):
                ...
            verificationFailed: f is not injective
            >>> verify_rows( c, t, [ 0, 1 ] ).rows
            2
            >>> verify_rows( c.inverse(), t, [ 0, 1 ], isometry = True ).rows
            2
            >>> verify_rows( Circuit( 4, gates = [ X( 1 ) ] ), t, [ 0, 1 ] )
            Traceback (most recent call last):
                ...
            verificationFailed: row 0: 0101 maps to +|0001>, expected +|0000>
    """
    s, l, width = t.s, t.l, c.width

    if c.n != t.n:
        raise widthMismatch( "circuit on %d qubits for a support on %d qubits" % ( c.n, t.n ) )

    f = [ int( v ) for v in f ]
    if len( f ) != s or len( set( f ) ) != s:
        raise verificationFailed( "f is not injective" )

    if any( not 0 <= v < 2 ** l for v in f ):
        raise verificationFailed( "f leaves the subspace [0, %d)" % 2 ** l )

    support = support_rows( t, width )
    dense = dense_rows( f, l, width )
    inputs, expected = ( dense, support ) if isometry else ( support, dense )

    expected_signs = np.ones( s, dtype = np.int64 ) if signs is None else np.asarray( signs, dtype = np.int64 )

    rng = np.random.default_rng( seed )
    extra = rng.integers( 0, 2, size = ( samples, width ), dtype = np.uint8 )
    known = set( row.tobytes() for row in np.packbits( inputs, axis = 1 ) )
    keep = []
    for i, row in enumerate( np.packbits( extra, axis = 1 ) ):
        if row.tobytes() not in known:
            known.add( row.tobytes() )
            keep.append( i )
    extra = extra[ keep ]

    out, out_signs = simulate_many( c, np.vstack( [ inputs, extra ] ) )

    bad = np.flatnonzero( ( out[ :s ] != expected ).any( axis = 1 ) | ( out_signs[ :s ] != expected_signs ) )
    if bad.size:
        i = int( bad[ 0 ] )
        raise verificationFailed( "row %d: %s maps to %s|%s>, expected %s|%s>" % (
            i,
            _text( inputs[ i ] ),
            "+" if out_signs[ i ] == 1 else "-", _text( out[ i ] ),
            "+" if expected_signs[ i ] == 1 else "-", _text( expected[ i ] )
        ) )

    packed = np.packbits( out, axis = 1 )
    if len( np.unique( packed, axis = 0 ) ) != len( out ):
        raise verificationFailed( "two inputs share an output (seed=%d)" % seed )

    debug.debug( "%d rows and %d samples verified" % ( s, len( extra ) ), 1 )

    return VerificationReport( s, len( extra ), out[ :s ], out_signs[ :s ] )

def compare_with_tableau( c, initial, final ):
    """
        Cross-check the tableau tracking of a synthesis against the oracle:
        simulating the circuit on the initial rows (with their signs) must
        give the final rows and signs. An initial tableau one column short of
        a circuit carrying the extra qubit gets that qubit set to 1.

            >>> from SSP.tableau import Tableau
            >>> from SSP.circuit import Circuit, CX, X
            >>> from SSP.simverify.functions import compare_with_tableau
            >>> t = Tableau( [ "0101", "1000" ] )
            >>> c = Circuit( 4, gates = [ CX( "+q0", [ 1, 3 ] ), X( 1, 3 ) ] )
            >>> compare_with_tableau( c, t, t )
            Traceback (most recent call last):
                ...
            verificationFailed
            >>> compare_with_tableau( c, t, Tableau( [ "0000", "1000" ] ) )
            True
            >>> c = Circuit( 4, True, gates = [ CX( "+q4", [ 1 ] ), X( 4 ) ] )
            >>> compare_with_tableau( c, t, Tableau( [ "00010", "11000" ], has_extra = True ) )
            True
    """
    if c.extra and not initial.has_extra and initial.n_cols + 1 == c.width:
        initial = initial.with_extra()

    if initial.n_cols != c.width or final.n_cols != c.width:
        raise widthMismatch( "tableaux of %d and %d columns for a circuit of width %d" % ( initial.n_cols, final.n_cols, c.width ) )

    out, out_signs = simulate_many( c, initial.matrix(), initial.signs )

    bad = np.flatnonzero( ( out != final.matrix() ).any( axis = 1 ) | ( out_signs != np.asarray( final.signs ) ) )
    if bad.size:
        i = int( bad[ 0 ] )
        raise verificationFailed( "row %d: oracle gives %s, tableau holds %s" % ( i, _text( out[ i ] ), final.row( i ) ) )

    return True
