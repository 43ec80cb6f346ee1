#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import namedtuple

import numpy as np

from ..core.config import PERMUTATION_WIDTH_LIMIT
from ..core.exceptions import andInverseMismatch, invalidParameter, widthMismatch
from ..core.functions import first_set, pack_columns, unpack_columns
from ..core.logger import debug

################################################################################
#
#    Basis states
#
################################################################################

class LabeledState( namedtuple( "LabeledState", [ "bits", "sign" ] ) ):
    """
        Computational basis state of the main register (extra qubit included)
        with a sign in {+1, -1}.

            >>> from SSP.simverify import LabeledState
            >>> LabeledState.of( "0110" )
            LabeledState(bits='0110', sign=1)
            >>> print( LabeledState( "0110", -1 ) )
            -|0110>
    """
    __slots__ = ()

    @classmethod
    def of( cls, value, sign = 1 ):
        if isinstance( value, LabeledState ):
            return value

        elif isinstance( value, str ):
            return cls( value, sign )

        else:
            return cls( "".join( str( int( b ) ) for b in value ), sign )

    def __str__( self ):
        return "%s|%s>" % ( "+" if self.sign == 1 else "-", self.bits )

################################################################################
#
#    Single state simulation
#
################################################################################

def _read( q, main, anc ):
    return anc.get( q.index, 0 ) if q.is_ancilla else main[ q.index ]

def _fires( controls, main, anc ):
    return all( _read( c.qubit, main, anc ) == int( c.positive ) for c in controls )

def _flip( targets, main, anc ):
    for t in targets:
        if t.is_ancilla:
            anc[ t.index ] = anc.get( t.index, 0 ) ^ 1
        else:
            main[ t.index ] ^= 1

def simulate( c, state ):
    """
        Apply the circuit to one basis state. And gates write the AND of
        their signed controls to a clean ancilla; AndInverse gates check that
        the ancilla still holds that AND before clearing it. A CX targeting a
        live ancilla updates the ancilla.

        :param c: Circuit to simulate.
        :type c: Circuit

        :param state: Input basis state (bitstring, list of bits or LabeledState).
        :type state: LabeledState

        :return: Output basis state with its sign.
        :rtype: LabeledState

        :raise widthMismatch: if the state does not match the circuit width
        :raise andInverseMismatch: if the ancilla discipline is violated

        Usage:

            >>> from SSP.simverify import simulate
            >>> from SSP.circuit.functions import parse
            >>> c = parse( '''
            ...     # n=4 extra=0
            ...     AND +q0 -q1 > a0
            ...     CX +a0 > q2,q3
            ...     CPF +a0
            ...     ANDINV +q0 -q1 > a0
            ... ''' )
            >>> simulate( c, "1000" )
            LabeledState(bits='1011', sign=-1)
            >>> simulate( c, "1100" )
            LabeledState(bits='1100', sign=1)
            >>> simulate( c, "110" )
            Traceback (most recent call last):
                ...
            widthMismatch

        An ancilla turned from q0 AND NOT q1 into q0 AND q1 by a CX:

            >>> c = parse( '''
            ...     # n=3 extra=0
            ...     AND +q0 -q1 > a0
            ...     CX +q0 > a0
            ...     CX +a0 > q2
            ...     ANDINV +q0 +q1 > a0
            ... ''' )
            >>> simulate( c, "110" ), simulate( c, "100" )
            (LabeledState(bits='111', sign=1), LabeledState(bits='100', sign=1))
    """
    state = LabeledState.of( state )

    if len( state.bits ) != c.width:
        raise widthMismatch( "state of %d bits on a circuit of width %d" % ( len( state.bits ), c.width ) )

    main = [ int( b ) for b in state.bits ]
    anc = {}
    sign = state.sign

    for k, gate in enumerate( c.gates ):
        kind = gate.kind

        if kind == "X":
            _flip( gate.targets, main, anc )

        elif kind in ( "MultiTargetCX", "Toffoli" ):
            if _fires( gate.controls, main, anc ):
                _flip( gate.targets, main, anc )

        elif kind == "Swap":
            a, b = gate.targets
            main[ a.index ], main[ b.index ] = main[ b.index ], main[ a.index ]

        elif kind == "And":
            t = gate.targets[ 0 ].index
            if anc.get( t, 0 ):
                raise andInverseMismatch( "gate %d (%s): ancilla not clean" % ( k, gate ) )

            anc[ t ] = int( _fires( gate.controls, main, anc ) )

        elif kind == "AndInverse":
            t = gate.targets[ 0 ].index
            if anc.get( t, 0 ) != int( _fires( gate.controls, main, anc ) ):
                raise andInverseMismatch( "gate %d (%s) on input %s" % ( k, gate, state.bits ) )

            anc[ t ] = 0

        elif kind == "ControlledPhaseFlip":
            if _fires( gate.controls, main, anc ):
                sign = -sign

    if any( anc.values() ):
        raise andInverseMismatch( "ancilla left dirty on input %s" % state.bits )

    return LabeledState( "".join( map( str, main ) ), sign )

################################################################################
#
#    Batch simulation
#
#        The inputs are bit-sliced like a tableau (see SSP.core.functions):
#        one uint64 word array per qubit, one bit per input state, so that a
#        gate costs a handful of in-place word operations whatever the batch
#        size.
#
################################################################################

def _compile( gate ):
    controls = tuple( ( c.qubit.is_ancilla, c.qubit.index, c.positive ) for c in gate.controls )
    targets = tuple( ( t.is_ancilla, t.index ) for t in gate.targets )
    return gate.kind, controls, targets

def simulate_many( c, bits, signs = None ):
    """
        Apply the circuit to many basis states at once.

        :param bits: ( k, width ) array of 0/1, one input per row.
        :type bits: numpy.ndarray

        :param signs: Input signs (all +1 when None).
        :type signs: list of int

        :return: ( k, width ) output array and the output signs.
        :rtype: tuple

        :raise andInverseMismatch: with the index of the first failing input

        Usage:

            >>> import numpy as np
            >>> from SSP.simverify import simulate_many
            >>> from SSP.circuit import Circuit, TOF, CPF
            >>> c = Circuit( 3, gates = [ TOF( "+q0", "-q1", 2 ), CPF( "+q2" ) ] )
            >>> out, signs = simulate_many( c, np.array( [ [ 1, 0, 0 ], [ 1, 1, 0 ], [ 0, 0, 1 ] ] ) )
            >>> out.tolist(), signs.tolist()
            ([[1, 0, 1], [1, 1, 0], [0, 0, 1]], [-1, 1, -1])

        Ancilla targets stay on the ancilla:

            >>> from SSP.circuit import AND, ANDINV, CX
            >>> c = Circuit( 3, gates = [ AND( "+q0", "-q1", "a0" ), CX( "+q0", [ "a0" ] ), CX( "+a0", [ 2 ] ), ANDINV( "+q0", "+q1", "a0" ) ] )
            >>> simulate_many( c, np.array( [ [ 1, 1, 0 ], [ 1, 0, 0 ], [ 0, 1, 1 ] ] ) )[ 0 ].tolist()
            [[1, 1, 1], [1, 0, 0], [0, 1, 1]]
    """
    bits = np.asarray( bits, dtype = np.uint8 )
    if bits.ndim != 2 or bits.shape[ 1 ] != c.width:
        raise widthMismatch( "inputs of shape %s on a circuit of width %d" % ( bits.shape, c.width ) )

    k = bits.shape[ 0 ]
    cols = pack_columns( bits )
    valid = pack_columns( np.ones( ( k, 1 ), dtype = np.uint8 ) )[ 0 ]
    zeros = np.zeros_like( valid )

    if signs is None:
        phase = zeros.copy()
    else:
        phase = pack_columns( ( np.asarray( signs ) == -1 ).astype( np.uint8 )[ :, None ] )[ 0 ]

    anc = {}

    def value( is_ancilla, index ):
        return anc.get( index, zeros ) if is_ancilla else cols[ index ]

    def fires( controls ):
        # the returned array may alias a register column: read it, never keep it
        if not controls:
            return valid

        if len( controls ) == 1 and controls[ 0 ][ 2 ]:
            return value( *controls[ 0 ][ :2 ] )

        mask = valid.copy()
        for is_ancilla, index, positive in controls:
            v = value( is_ancilla, index )
            if positive:
                np.bitwise_and( mask, v, out = mask )
            else:
                mask &= ~v

        return mask

    def flip( targets, mask ):
        for is_ancilla, index in targets:
            if is_ancilla:
                anc[ index ] = anc[ index ] ^ mask if index in anc else mask.copy()
            else:
                np.bitwise_xor( cols[ index ], mask, out = cols[ index ] )

    for n_gate, ( kind, controls, targets ) in enumerate( map( _compile, c.gates ) ):
        if kind == "X":
            flip( targets, valid )

        elif kind in ( "MultiTargetCX", "Toffoli" ):
            flip( targets, fires( controls ) )

        elif kind == "Swap":
            a, b = targets[ 0 ][ 1 ], targets[ 1 ][ 1 ]
            tmp = cols[ a ].copy()
            cols[ a ] = cols[ b ]
            cols[ b ] = tmp

        elif kind == "And":
            index = targets[ 0 ][ 1 ]
            dirty = anc.get( index, zeros )
            if dirty.any():
                raise andInverseMismatch( "gate %d (%s): ancilla not clean on input %d" % ( n_gate, c.gates[ n_gate ], first_set( dirty ) ) )

            anc[ index ] = fires( controls ).copy()

        elif kind == "AndInverse":
            index = targets[ 0 ][ 1 ]
            diff = anc.get( index, zeros ) ^ fires( controls )
            if diff.any():
                raise andInverseMismatch( "gate %d (%s) on input %d" % ( n_gate, c.gates[ n_gate ], first_set( diff ) ) )

            anc.pop( index, None )

        elif kind == "ControlledPhaseFlip":
            np.bitwise_xor( phase, fires( controls ), out = phase )

    for index, a in anc.items():
        if a.any():
            raise andInverseMismatch( "ancilla a%d left dirty on input %d" % ( index, first_set( a ) ) )

    out = unpack_columns( cols, k )
    out_signs = 1 - 2 * unpack_columns( phase[ None, : ], k )[ :, 0 ].astype( np.int64 )

    debug.debug( "simulated %d gates on %d inputs" % ( len( c ), k ), 2 )

    return out, out_signs

################################################################################
#
#    Exhaustive check
#
################################################################################

class PermutationReport( namedtuple( "PermutationReport", [ "permutation", "signs", "is_permutation" ] ) ):
    """
        Image of every basis input (as integers, big-endian), the sign picked
        up by each input, and whether the image is a bijection.
    """
    __slots__ = ()

    def image( self, value ):
        return int( self.permutation[ value ] ), int( self.signs[ value ] )

def all_inputs( width ):
    values = np.arange( 2 ** width, dtype = np.int64 )
    return ( ( values[ :, None ] >> np.arange( width - 1, -1, -1, dtype = np.int64 ) ) & 1 ).astype( np.uint8 )

def check_permutation( c, n_total = None ):
    """
        Simulate every basis input of the circuit.

        :param n_total: Width to check; defaults to the circuit width.
        :type n_total: int

        :raise invalidParameter: if the width exceeds the exhaustive limit
        :raise andInverseMismatch: with the first failing input

        Usage:

            >>> from SSP.simverify import check_permutation
            >>> from SSP.circuit import Circuit, CX, CPF
            >>> report = check_permutation( Circuit( 2, gates = [ CX( "+q0", [ 1 ] ), CPF( "+q1" ) ] ) )
            >>> report.permutation.tolist(), report.signs.tolist(), report.is_permutation
            ([0, 1, 3, 2], [1, -1, -1, 1], True)
            >>> check_permutation( Circuit( 21 ) )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    width = c.width if n_total is None else n_total

    if width != c.width:
        raise widthMismatch( "exhaustive check of width %d on a circuit of width %d" % ( width, c.width ) )

    if width > PERMUTATION_WIDTH_LIMIT:
        raise invalidParameter( "exhaustive check limited to %d qubits" % PERMUTATION_WIDTH_LIMIT )

    out, signs = simulate_many( c, all_inputs( width ) )

    weights = np.int64( 1 ) << np.arange( width - 1, -1, -1, dtype = np.int64 )
    permutation = out.astype( np.int64 ).dot( weights )
    is_permutation = len( np.unique( permutation ) ) == 2 ** width

    debug.debug( "exhaustive check on %d qubits: bijection=%s" % ( width, is_permutation ), 1 )

    return PermutationReport( permutation, signs, is_permutation )